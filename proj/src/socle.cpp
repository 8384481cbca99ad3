#include "lielimits/socle.hpp"

#include "lielimits/error.hpp"
#include "lielimits/index.hpp"

#include <algorithm>
#include <set>

namespace lielimits {

std::string to_string(const ExtendedDim& d) {
    switch (d.kind) {
        case ExtendedDim::Kind::Finite: return "finite(" + std::to_string(d.value) + ")";
        case ExtendedDim::Kind::Countable: return "countable";
        case ExtendedDim::Kind::Undetermined: return "undetermined(>=" + std::to_string(d.value) + ")";
    }
    return "undetermined";
}

ExtendedDim judge_window(const std::vector<std::int64_t>& sequence) {
    if (sequence.empty()) throw InternalError("empty evidence window");
    const std::size_t w = std::min<std::size_t>(kTailWindow, sequence.size());
    ExtendedDim d;
    d.evidence.assign(sequence.end() - static_cast<std::ptrdiff_t>(w), sequence.end());
    bool constant = true, increasing = w >= 2;
    for (std::size_t i = 1; i < w; ++i) {
        constant &= d.evidence[i] == d.evidence[i - 1];
        increasing &= d.evidence[i] > d.evidence[i - 1];
    }
    if (constant) {
        d.kind = ExtendedDim::Kind::Finite;
        d.value = d.evidence.back();
    } else if (increasing) {
        d.kind = ExtendedDim::Kind::Countable;
        d.value = 0;
    } else {
        d.kind = ExtendedDim::Kind::Undetermined;
        d.value = *std::min_element(d.evidence.begin(), d.evidence.end());
    }
    return d;
}

namespace {

struct FactorCounts {
    std::int64_t omega = 0;
    std::int64_t omega_star = 0;  // only when omega* != omega
    std::int64_t trivial = 0;
    std::int64_t other = 0;
};

FactorCounts count_on_factor(const ModuleDecomposition& d, std::size_t factor) {
    const SimpleAlgebra& s = d.algebra.factors.at(factor);
    const DominantWeight omega = DominantWeight::natural(s);
    const DominantWeight omega_star = dual_weight(s, omega);
    FactorCounts c;
    for (const Summand& x : restrict_to_factor(d, factor).summands) {
        const DominantWeight& w = x.weights[0];
        if (w.is_zero()) c.trivial += x.multiplicity;
        else if (w == omega) c.omega += x.multiplicity;
        else if (w == omega_star) c.omega_star += x.multiplicity;
        else c.other += x.multiplicity;
    }
    return c;
}

ModuleDecomposition conatural_of(const LevelSpec& lv) {
    return lv.conatural_branching ? *lv.conatural_branching : lv.ambient_branching.dual();
}

std::int64_t total_dim(const ModuleDecomposition& d) { return to_int64(d.total_dimension(), "module dimension"); }

void require_infinite(const Constituent& c) {
    if (!is_infinite(c.kind))
        throw DomainError("constituent " + std::to_string(c.id + 1) + " is " + to_string(c.kind) +
                          "; multiplicities are defined for infinite constituents");
}

// Window levels shared by every string of an infinite constituent.
std::vector<Vertex> string_window(const Constituent& c) {
    const std::size_t w = std::min<std::size_t>(kTailWindow, c.string.size());
    return {c.string.end() - static_cast<std::ptrdiff_t>(w), c.string.end()};
}

// Whether each string vertex sees the top vertex's natural module as its own
// dual: a link restricting omega to omega* swaps the roles of k and l below it.
std::vector<bool> dual_twists(const SystemSpec& spec, const Constituent& c) {
    std::vector<bool> flip(c.string.size(), false);
    for (std::size_t i = c.string.size(); i-- > 1;) {
        const Vertex lo = c.string[i - 1], hi = c.string[i];
        const FactorCounts fc = count_on_factor(spec.edges.at(lo.level).branchings.at(hi.index), lo.index);
        flip[i - 1] = flip[i] != (fc.omega_star > 0 && fc.omega == 0);
    }
    return flip;
}

Multiplicities oriented(std::int64_t omega, std::int64_t omega_star, bool flipped) {
    return flipped ? Multiplicities{omega_star, omega} : Multiplicities{omega, omega_star};
}

std::int64_t trivial_count(const ModuleDecomposition& d) {
    std::int64_t t = 0;
    for (const Summand& s : d.summands)
        if (s.is_trivial()) t += s.multiplicity;
    return t;
}

}  // namespace

Multiplicities multiplicities(const SystemSpec& spec, const BratteliGraph& g, const Constituent& c) {
    require_infinite(c);
    if (c.string.size() < 2) throw InsufficientPrefix("string of constituent " + std::to_string(c.id + 1) + " is too short");
    const std::vector<bool> flip = dual_twists(spec, c);
    std::optional<Multiplicities> seen;
    for (std::size_t i = c.string.size() - 2; i < c.string.size(); ++i) {
        const Vertex v = c.string[i];
        const LevelSpec& lv = spec.levels.at(v.level);
        const FactorCounts fc = count_on_factor(lv.ambient_branching, v.index);
        if (fc.other != 0)
            throw InsufficientPrefix("V(g) over the factor at " + to_string(v) +
                                     " is not yet a sum of natural, conatural and trivial modules; lengthen the prefix");
        const Multiplicities m = oriented(fc.omega, fc.omega_star, flip[i]);
        if (seen && !(*seen == m))
            throw InsufficientPrefix("multiplicities of constituent " + std::to_string(c.id + 1) +
                                     " differ between the last two levels; lengthen the prefix");
        seen = m;
        const SimpleAlgebra& s = g.algebra_of(v);
        if ((m.k + m.l) * natural_module_index(s) != g.alpha_of(v) * natural_module_index(lv.ambient))
            throw InternalError("k + l does not match the ambient index at " + to_string(v));
    }
    return *seen;
}

TrivialDims trivial_dims(const SystemSpec& spec, const BratteliGraph& g, const Constituent& c) {
    const Multiplicities m = multiplicities(spec, g, c);
    const std::vector<bool> flip = dual_twists(spec, c);
    std::vector<std::int64_t> t, t_star;
    for (std::size_t i = c.string.size() - string_window(c).size(); i < c.string.size(); ++i) {
        const Vertex v = c.string[i];
        const LevelSpec& lv = spec.levels.at(v.level);
        const std::int64_t nat = g.algebra_of(v).natural_dimension();
        t.push_back(lv.ambient.natural_dimension() - (m.k + m.l) * nat);
        const ModuleDecomposition co = conatural_of(lv);
        const FactorCounts fc = count_on_factor(co, v.index);
        // On V_* the roles swap: omega* copies pair with k, omega copies with l.
        const bool self_dual = DominantWeight::natural(g.algebra_of(v)) ==
                               dual_weight(g.algebra_of(v), DominantWeight::natural(g.algebra_of(v)));
        const Multiplicities co_m = self_dual ? Multiplicities{fc.omega, 0} : oriented(fc.omega_star, fc.omega, flip[i]);
        if (fc.other != 0 || !(co_m == m))
            throw InconsistentSystem("conatural branching at " + to_string(v) + " does not carry the multiplicities (" +
                                     std::to_string(m.k) + "," + std::to_string(m.l) + ")");
        t_star.push_back(total_dim(co) - (m.k + m.l) * nat);
        if (t.back() < 0 || t_star.back() < 0) throw InsufficientPrefix("negative trivial part at " + to_string(v));
    }
    return {judge_window(t), judge_window(t_star)};
}

SocleReport socle_report(const SystemSpec& spec, const BratteliGraph& g) {
    SocleReport r;
    r.constituents = decompose(g);
    for (const Constituent& c : r.constituents)
        if (is_infinite(c.kind))
            r.infinite.push_back({c.id, c.kind, multiplicities(spec, g, c), trivial_dims(spec, g, c)});

    const LevelSpec& top = spec.levels.at(g.top());
    std::vector<int> finite_ids;
    for (const Constituent& c : r.constituents)
        if (!is_infinite(c.kind)) finite_ids.push_back(c.id);
    std::map<std::vector<Labels>, std::int64_t> table;
    for (const Summand& s : top.ambient_branching.summands) {
        std::vector<int> touched;
        for (const Constituent& c : r.constituents)
            if (s.nontrivial_on(static_cast<std::size_t>(c.string.back().index))) touched.push_back(c.id);
        if (touched.size() > 1)
            throw InconsistentSystem("a summand of V(g) at the top level is non-trivial on constituents " +
                                     std::to_string(touched[0] + 1) + " and " + std::to_string(touched[1] + 1) +
                                     "; the natural-module parts are not direct");
        if (touched.empty() || is_infinite(r.constituents[touched[0]].kind)) continue;
        std::vector<Labels> key;
        for (int id : finite_ids) key.push_back(s.weights[r.constituents[id].string.back().index].labels());
        table[key] += s.multiplicity;
    }
    for (const auto& [key, mult] : table) r.finite_part.push_back({finite_ids, key, mult});

    std::vector<std::int64_t> q, q_star;
    for (int n = std::max(0, g.levels() - kTailWindow); n < g.levels(); ++n) {
        q.push_back(trivial_count(spec.levels[n].ambient_branching));
        q_star.push_back(trivial_count(conatural_of(spec.levels[n])));
    }
    r.quotient = judge_window(q);
    r.conatural_quotient = judge_window(q_star);
    r.socle_dim_top = top.ambient.natural_dimension() - trivial_count(top.ambient_branching);
    return r;
}

StandardInvariants standard_invariants(const SystemSpec& spec, const BratteliGraph& g,
                                       const std::vector<std::vector<int>>& subsets) {
    const auto parts = decompose(g);
    StandardInvariants out;
    std::vector<int> infinite_ids;
    for (const Constituent& c : parts)
        if (is_infinite(c.kind)) {
            infinite_ids.push_back(c.id);
            out.multiplicities[c.id] = multiplicities(spec, g, c);
        }

    std::vector<std::vector<int>> wanted = subsets;
    if (wanted.empty()) {
        for (int id : infinite_ids) wanted.push_back({id});
        if (infinite_ids.size() > 1) wanted.push_back(infinite_ids);
    }
    const int first_level = std::max(0, g.levels() - kTailWindow);
    for (auto J : wanted) {
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
        for (int id : J) {
            if (id < 0 || id >= static_cast<int>(parts.size()))
                throw DomainError("no constituent with id " + std::to_string(id + 1));
            if (!is_infinite(parts[id].kind))
                throw DomainError("constituent " + std::to_string(id + 1) + " is " + to_string(parts[id].kind) +
                                  "; standard invariants use infinite constituents only");
        }
        std::vector<std::int64_t> n_seq, n_star_seq;
        for (int lvl = first_level; lvl < g.levels(); ++lvl) {
            std::int64_t used = 0;
            for (int id : J) {
                const Constituent& c = parts[id];
                auto at = std::find_if(c.string.begin(), c.string.end(), [&](Vertex v) { return v.level == lvl; });
                if (at == c.string.end())
                    throw InsufficientPrefix("constituent " + std::to_string(id + 1) + " has no string vertex at level " +
                                             std::to_string(lvl + 1));
                const Multiplicities& m = out.multiplicities.at(id);
                used += (m.k + m.l) * g.algebra_of(*at).natural_dimension();
            }
            n_seq.push_back(spec.levels[lvl].ambient.natural_dimension() - used);
            n_star_seq.push_back(total_dim(conatural_of(spec.levels[lvl])) - used);
        }
        SubsetInvariants si;
        si.subset = J;
        si.natural_trivial = judge_window(n_seq);
        si.conatural_trivial = judge_window(n_star_seq);
        si.natural_quotient = si.natural_trivial;
        si.conatural_quotient = si.conatural_trivial;
        out.subsets.push_back(std::move(si));
    }
    return out;
}

}  // namespace lielimits
