#include "lielimits/system.hpp"

#include "lielimits/error.hpp"
#include "lielimits/index.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lielimits {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.level + 1) + "," + std::to_string(v.index + 1) + ")";
}

AmbientKind ambient_kind(Series s) {
    switch (s) {
        case Series::A: return AmbientKind::Linear;
        case Series::C: return AmbientKind::Symplectic;
        default: return AmbientKind::Orthogonal;
    }
}

bool BratteliGraph::contains(Vertex v) const {
    return v.level >= 0 && v.level < levels() && v.index >= 0 && v.index < width(v.level);
}

std::vector<Vertex> BratteliGraph::successors(Vertex v) const {
    std::vector<Vertex> out;
    if (v.level >= top()) return out;
    const auto& row = beta.at(v.level).at(v.index);
    for (int k = 0; k < static_cast<int>(row.size()); ++k)
        if (row[k] > 0) out.push_back({v.level + 1, k});
    return out;
}

std::vector<Vertex> BratteliGraph::predecessors(Vertex v) const {
    std::vector<Vertex> out;
    if (v.level == 0) return out;
    for (int j = 0; j < width(v.level - 1); ++j)
        if (beta[v.level - 1][j][v.index] > 0) out.push_back({v.level - 1, j});
    return out;
}

namespace {

template <class F>
auto with_context(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const SpecError& e) {
        throw SpecError(where + ": " + e.what());
    } catch (const DimensionError& e) {
        throw SpecError(where + ": " + e.what());
    }
}

void require_vertex(const BratteliGraph& g, Vertex v) {
    if (!g.contains(v)) throw DomainError("vertex " + to_string(v) + " is not in the diagram");
}

}  // namespace

BratteliGraph compute_labels(const SystemSpec& spec) {
    if (spec.levels.empty()) throw SpecError("a system needs at least one level");
    if (spec.edges.size() + 1 != spec.levels.size())
        throw SpecError(std::to_string(spec.levels.size()) + " levels need " + std::to_string(spec.levels.size() - 1) +
                        " edge records, got " + std::to_string(spec.edges.size()));
    BratteliGraph g;
    const AmbientKind kind = ambient_kind(spec.levels[0].ambient.series());
    for (std::size_t n = 0; n < spec.levels.size(); ++n) {
        const LevelSpec& lv = spec.levels[n];
        const std::string where = "level " + std::to_string(n + 1);
        if (ambient_kind(lv.ambient.series()) != kind)
            throw SpecError(where + ": ambient " + lv.ambient.name() + " changes the ambient family");
        if (!(lv.ambient_branching.algebra == lv.components))
            throw SpecError(where + ": ambient branching is not over the level components");
        g.algebras.push_back(lv.components.factors);
        g.alpha.push_back(with_context(where, [&] {
            return embedding_index(Embedding(lv.components, lv.ambient, lv.ambient_branching));
        }));
        if (lv.conatural_branching) {
            if (!(lv.conatural_branching->algebra == lv.components))
                throw SpecError(where + ": conatural branching is not over the level components");
            with_context(where, [&] {
                lv.conatural_branching->validate();
                return 0;
            });
            if (lv.conatural_branching->total_dimension() > lv.ambient.natural_dimension())
                throw SpecError(where + ": conatural branching exceeds the ambient dimension");
        }
    }
    for (std::size_t n = 0; n + 1 < spec.levels.size(); ++n) {
        const auto& src = spec.levels[n].components;
        const auto& dst = spec.levels[n + 1].components;
        const EdgeSpec& e = spec.edges[n];
        if (e.branchings.size() != dst.size())
            throw SpecError("edge " + std::to_string(n + 1) + ": expected " + std::to_string(dst.size()) +
                            " branchings, got " + std::to_string(e.branchings.size()));
        g.beta.emplace_back(src.size(), std::vector<std::int64_t>(dst.size(), 0));
        for (std::size_t k = 0; k < dst.size(); ++k) {
            const std::string where = "edge " + std::to_string(n + 1) + " into component " + std::to_string(k + 1);
            if (!(e.branchings[k].algebra == src))
                throw SpecError(where + ": branching is not over the level " + std::to_string(n + 1) + " components");
            auto idx = with_context(where, [&] { return embedding_index(Embedding(src, dst.factors[k], e.branchings[k])); });
            for (std::size_t j = 0; j < src.size(); ++j) {
                bool nontrivial = false;
                for (const Summand& s : e.branchings[k].summands) nontrivial |= s.nontrivial_on(j);
                if (nontrivial != (idx[j] > 0)) throw InternalError(where + ": edge presence disagrees with its index");
                g.beta.back()[j][k] = idx[j];
            }
        }
    }
    g.beta.emplace_back();
    g.beta.back().assign(g.width(g.top()), {});

    for (int n = 0; n < g.top(); ++n)
        for (int j = 0; j < g.width(n); ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < g.width(n + 1); ++k) s += g.beta[n][j][k] * g.alpha[n + 1][k];
            if (s != g.alpha[n][j])
                throw InconsistentSystem("inconsistent system at vertex " + to_string(Vertex{n, j}) + ": alpha = " +
                                         std::to_string(g.alpha[n][j]) + " but the edges give " + std::to_string(s));
        }
    for (int n = 0; n < g.levels(); ++n)
        for (int j = 0; j < g.width(n); ++j)
            if (path_sum(g, {n, j}) != g.alpha[n][j])
                throw InternalError("path sums disagree with alpha at " + to_string(Vertex{n, j}));
    return g;
}

std::int64_t path_sum(const BratteliGraph& g, Vertex v) {
    require_vertex(g, v);
    std::int64_t total = 0;
    auto walk = [&](auto&& self, Vertex at, std::int64_t weight) -> void {
        if (at.level == g.top()) {
            total += weight * g.alpha_of(at);
            return;
        }
        for (Vertex next : g.successors(at)) self(self, next, weight * g.beta[at.level][at.index][next.index]);
    };
    walk(walk, v, 1);
    return total;
}

std::vector<std::vector<Vertex>> subdiagram(const BratteliGraph& g, Vertex origin) {
    require_vertex(g, origin);
    std::vector<std::vector<Vertex>> out{{origin}};
    for (int m = origin.level; m < g.top(); ++m) {
        std::set<Vertex> next;
        for (Vertex v : out.back())
            for (Vertex w : g.successors(v)) next.insert(w);
        out.emplace_back(next.begin(), next.end());
    }
    return out;
}

std::vector<std::int64_t> level_sums(const BratteliGraph& g, Vertex origin) {
    std::vector<std::int64_t> sums;
    for (const auto& layer : subdiagram(g, origin)) {
        std::int64_t s = 0;
        for (Vertex v : layer) s += g.alpha_of(v);
        if (!sums.empty() && s > sums.back())
            throw InternalError("level sums increase below " + to_string(origin));
        sums.push_back(s);
    }
    return sums;
}

std::optional<int> stabilization(const BratteliGraph& g, Vertex origin) {
    const auto sub = subdiagram(g, origin);
    const auto sums = level_sums(g, origin);
    if (origin.level == g.top()) return g.top();
    std::set<Vertex> members;
    for (const auto& layer : sub) members.insert(layer.begin(), layer.end());
    auto out_in_sub = [&](Vertex v) { return g.successors(v).size(); };
    auto in_in_sub = [&](Vertex v) {
        std::size_t c = 0;
        for (Vertex p : g.predecessors(v)) c += members.count(p);
        return c;
    };
    // Scan downward from top-1: the admissible start levels form a suffix.
    std::optional<int> best;
    for (int m = g.top() - 1; m >= origin.level; --m) {
        const std::size_t i = static_cast<std::size_t>(m - origin.level);
        if (sums[i] != sums[i + 1]) break;
        bool strings = true;
        for (Vertex v : sub[i]) strings &= out_in_sub(v) == 1;
        for (Vertex v : sub[i + 1]) strings &= in_in_sub(v) == 1;
        if (!strings) break;
        best = m;
    }
    return best;
}

std::string to_string(ConstituentKind k) {
    switch (k) {
        case ConstituentKind::FiniteSimple: return "FiniteSimple";
        case ConstituentKind::SlInf: return "SlInf";
        case ConstituentKind::SoInf: return "SoInf";
        case ConstituentKind::SpInf: return "SpInf";
        case ConstituentKind::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

bool is_infinite(ConstituentKind k) {
    return k == ConstituentKind::SlInf || k == ConstituentKind::SoInf || k == ConstituentKind::SpInf;
}

namespace {

Constituent classify_string(const BratteliGraph& g, std::vector<Vertex> string, int id) {
    Constituent c;
    c.id = id;
    const int len = static_cast<int>(string.size());
    const int w = std::min(kTailWindow, len);
    const int first = len - w;
    bool unit_edges = true, growing = true, constant = true;
    for (int i = first; i + 1 < len; ++i) {
        const Vertex a = string[i], b = string[i + 1];
        unit_edges &= g.beta[a.level][a.index][b.index] == 1;
        growing &= g.algebra_of(b).natural_dimension() > g.algebra_of(a).natural_dimension();
        constant &= g.algebra_of(b) == g.algebra_of(a);
    }
    if (len >= kTailWindow && unit_edges && growing) {
        std::set<AmbientKind> kinds;
        for (int i = first; i < len; ++i) {
            const Series s = g.algebra_of(string[i]).series();
            kinds.insert(ambient_kind(s));
        }
        if (kinds.size() == 1) {
            switch (*kinds.begin()) {
                case AmbientKind::Linear: c.kind = ConstituentKind::SlInf; break;
                case AmbientKind::Symplectic: c.kind = ConstituentKind::SpInf; break;
                case AmbientKind::Orthogonal: c.kind = ConstituentKind::SoInf; break;
            }
        }
    } else if (unit_edges && constant) {
        c.kind = ConstituentKind::FiniteSimple;
        c.algebra = g.algebra_of(string.back());
    }
    c.tail_assumed = c.kind != ConstituentKind::Undetermined;
    c.string = std::move(string);
    return c;
}

}  // namespace

std::vector<Constituent> decompose(const BratteliGraph& g) {
    std::map<Vertex, int> stable_from;
    std::vector<std::string> unstable;
    for (int n = 0; n < g.levels(); ++n)
        for (int j = 0; j < g.width(n); ++j) {
            auto m0 = stabilization(g, {n, j});
            if (m0) stable_from[{n, j}] = *m0;
            else unstable.push_back(to_string(Vertex{n, j}));
        }
    if (!unstable.empty()) {
        std::string list;
        for (const auto& s : unstable) list += (list.empty() ? "" : " ") + s;
        throw InsufficientPrefix("not stabilized within the prefix for origins " + list + "; lengthen the prefix");
    }
    // Every string runs to the top, and strings sharing a vertex share the
    // rest of their path, so classes are exactly the top-level vertices.
    std::vector<std::vector<Vertex>> longest(g.width(g.top()));
    for (const auto& [origin, m0] : stable_from) {
        const auto sub = subdiagram(g, origin);
        for (Vertex start : sub[static_cast<std::size_t>(m0 - origin.level)]) {
            std::vector<Vertex> s{start};
            while (s.back().level < g.top()) s.push_back(g.successors(s.back()).front());
            auto& slot = longest[s.back().index];
            if (s.size() > slot.size()) slot = std::move(s);
        }
    }
    std::vector<Constituent> out;
    for (int t = 0; t < g.width(g.top()); ++t) {
        if (longest[t].empty()) throw InternalError("top vertex without a string");
        out.push_back(classify_string(g, longest[t], t));
    }
    return out;
}

ModuleDecomposition restrict_to_factor(const ModuleDecomposition& d, std::size_t factor) {
    ModuleDecomposition out{SemisimpleAlgebra::simple(d.algebra.factors.at(factor)), {}};
    for (const Summand& s : d.summands) {
        Integer m = Integer(static_cast<long>(s.multiplicity));
        for (std::size_t i = 0; i < d.algebra.size(); ++i)
            if (i != factor) m *= dimension(d.algebra.factors[i], s.weights[i]);
        out.summands.push_back(Summand{{s.weights[factor]}, to_int64(m, "restricted multiplicity")});
    }
    return out.normalized();
}

Refinement extract_refinement(const SystemSpec& spec, const BratteliGraph& g, std::optional<int> constituent) {
    const auto parts = decompose(g);
    const Constituent* chosen = nullptr;
    if (constituent) {
        if (*constituent < 0 || *constituent >= static_cast<int>(parts.size()))
            throw DomainError("no constituent with id " + std::to_string(*constituent + 1));
        chosen = &parts[*constituent];
        if (!is_infinite(chosen->kind))
            throw DomainError("constituent " + std::to_string(*constituent + 1) + " is " + to_string(chosen->kind) +
                              ", not an infinite simple limit");
    } else {
        for (const Constituent& c : parts)
            if (is_infinite(c.kind)) {
                if (chosen) throw DomainError("the limit has several infinite constituents; choose one");
                chosen = &c;
            }
        if (!chosen) throw DomainError("the limit has no infinite constituent");
    }

    Refinement r;
    r.constituent = chosen->id;
    r.chain = chosen->string;
    while (true) {
        auto preds = g.predecessors(r.chain.front());
        if (preds.size() != 1) break;
        r.chain.insert(r.chain.begin(), preds.front());
    }
    for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
        const Vertex a = r.chain[i], b = r.chain[i + 1];
        const auto& br = spec.edges[a.level].branchings[b.index];
        Embedding emb(SemisimpleAlgebra::simple(g.algebra_of(a)), g.algebra_of(b), restrict_to_factor(br, a.index));
        const EmbeddingClass cls = classify_embedding(emb);
        r.steps.push_back({a, b, to_string(cls), cls.kind == EmbeddingKind::Standard});
    }
    int from = r.chain.back().level;
    for (auto it = r.steps.rbegin(); it != r.steps.rend() && it->standard; ++it) from = it->from.level;
    if (r.steps.empty() || r.steps.back().standard) r.standard_from = from;
    return r;
}

}  // namespace lielimits
