#include "lielimits/index.hpp"

#include "lielimits/error.hpp"

#include <map>
#include <mutex>
#include <set>

namespace lielimits {

Integer index_of_irrep(const SimpleAlgebra& alg, const DominantWeight& lambda) {
    require_rank(alg, lambda.labels());
    const Labels& l = lambda.labels();
    Labels shifted = l;
    for (int& v : shifted) v += 2;  // lambda + 2 rho
    Rational value = weight_form(alg, l, shifted) * Rational(dimension(alg, lambda)) / alg.dimension();
    if (!is_integer(value) || value < 0)
        throw InternalError("index of " + alg.name() + " " + lambda.str() + " evaluated to " + lielimits::to_string(value));
    return value.get_num();
}

std::int64_t natural_module_index(const SimpleAlgebra& alg) {
    static std::mutex mu;
    static std::set<SimpleAlgebra> checked;
    const std::int64_t table = (alg.series() == Series::B || alg.series() == Series::D) ? 2 : 1;
    std::lock_guard<std::mutex> lock(mu);
    if (!checked.count(alg)) {
        if (index_of_irrep(alg, DominantWeight::natural(alg)) != table)
            throw InternalError("natural-module index table disagrees with the highest-weight formula for " + alg.name());
        checked.insert(alg);
    }
    return table;
}

Integer index_of_module(const ModuleDecomposition& decomp, std::size_t factor) {
    decomp.validate();
    if (factor >= decomp.algebra.size())
        throw DomainError("factor " + std::to_string(factor + 1) + " is out of range for " + decomp.algebra.name());
    Integer total = 0;
    for (const Summand& s : decomp.summands) {
        Integer term = Integer(static_cast<long>(s.multiplicity)) *
                       index_of_irrep(decomp.algebra.factors[factor], s.weights[factor]);
        if (term == 0) continue;
        for (std::size_t i = 0; i < decomp.algebra.size(); ++i)
            if (i != factor) term *= dimension(decomp.algebra.factors[i], s.weights[i]);
        total += term;
    }
    return total;
}

std::vector<std::int64_t> embedding_index(const Embedding& emb) {
    emb.validate();
    const std::int64_t divisor = natural_module_index(emb.target);
    std::vector<std::int64_t> out;
    for (std::size_t j = 0; j < emb.source.size(); ++j) {
        const Integer num = index_of_module(emb.branching, j);
        if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(divisor)))
            throw SpecError("branching into " + emb.target.name() + " gives index " + to_string(num) + " on factor " +
                            std::to_string(j + 1) + ", not divisible by " + std::to_string(divisor));
        out.push_back(to_int64(Integer(num / divisor), "embedding index"));
    }
    return out;
}

std::string to_string(const EmbeddingClass& c) {
    switch (c.kind) {
        case EmbeddingKind::Standard: return "Standard";
        case EmbeddingKind::Diagonal:
            return "Diagonal(" + std::to_string(c.k) + "," + std::to_string(c.l) + "," + std::to_string(c.t) + ")";
        case EmbeddingKind::General: return "General";
    }
    return "General";
}

EmbeddingClass classify_embedding(const Embedding& emb) {
    if (emb.source.size() != 1)
        throw DomainError("classification needs a simple source, got " + emb.source.name());
    emb.validate();
    const SimpleAlgebra& f = emb.source.factors[0];
    const DominantWeight omega = DominantWeight::natural(f);
    const DominantWeight omega_star = dual_weight(f, omega);
    EmbeddingClass c;
    bool general = false;
    for (const Summand& s : emb.branching.summands) {
        const DominantWeight& w = s.weights[0];
        if (w.is_zero()) c.t += s.multiplicity;
        else if (w == omega) c.k += s.multiplicity;
        else if (w == omega_star) c.l += s.multiplicity;
        else general = true;
    }
    if (general) return EmbeddingClass{EmbeddingKind::General, 0, 0, 0};
    c.kind = c.k + c.l == 1 ? EmbeddingKind::Standard : EmbeddingKind::Diagonal;
    return c;
}

std::vector<DominantWeight> dominant_weights_up_to(const SimpleAlgebra& alg, std::int64_t dim_bound) {
    std::vector<DominantWeight> out;
    const Integer bound(static_cast<long>(dim_bound));
    Labels labels(alg.rank(), 0);
    // Dimension is non-decreasing in every label, so once the prefix with a
    // zero suffix exceeds the bound, no larger value at this position helps.
    auto walk = [&](auto&& self, int pos) -> void {
        if (pos == alg.rank()) {
            out.emplace_back(alg, labels);
            return;
        }
        for (int v = 0;; ++v) {
            labels[pos] = v;
            if (dimension(alg, DominantWeight(alg, labels)) > bound) break;
            self(self, pos + 1);
        }
        labels[pos] = 0;
    };
    walk(walk, 0);
    return out;
}

NonDiagonalMinimum min_nondiagonal_index(const SimpleAlgebra& alg, std::int64_t dim_bound) {
    if (dim_bound <= 0) throw DomainError("dimension bound must be positive");
    const DominantWeight omega = DominantWeight::natural(alg);
    const DominantWeight omega_star = dual_weight(alg, omega);
    std::optional<NonDiagonalMinimum> best;
    std::int64_t scanned = 0;
    for (const DominantWeight& w : dominant_weights_up_to(alg, dim_bound)) {
        ++scanned;
        if (w.is_zero() || w == omega || w == omega_star) continue;
        const std::int64_t idx = to_int64(index_of_irrep(alg, w), "irrep index");
        if (!best || idx < best->index) best = NonDiagonalMinimum{idx, w, 0};
    }
    if (!best)
        throw DomainError("bound too small: no weight outside {0, omega, omega*} of " + alg.name() +
                          " has dimension <= " + std::to_string(dim_bound));
    best->scanned = scanned;
    return *best;
}

namespace {

ModuleDecomposition trivial_module(const SimpleAlgebra& f) {
    return ModuleDecomposition{SemisimpleAlgebra::simple(f), {Summand{{DominantWeight::zero(f)}, 1}}};
}

ModuleDecomposition tensor(const SimpleAlgebra& f, const ModuleDecomposition& a, const ModuleDecomposition& b,
                           std::int64_t bound) {
    std::map<Labels, std::int64_t> acc;
    for (const Summand& x : a.summands)
        for (const Summand& y : b.summands)
            for (const Summand& z : oracle::tensor_decompose(f, x.weights[0], y.weights[0], bound).summands)
                acc[z.weights[0].labels()] += x.multiplicity * y.multiplicity * z.multiplicity;
    ModuleDecomposition out{SemisimpleAlgebra::simple(f), {}};
    for (const auto& [w, m] : acc) out.summands.push_back(Summand{{DominantWeight(f, w)}, m});
    return out;
}

// Restriction of an irreducible k_j-module to f when it is expressible from
// the branching of the natural module alone.
std::optional<ModuleDecomposition> restrict_factor(const SimpleAlgebra& k, const DominantWeight& w,
                                                   const Embedding& map) {
    const SimpleAlgebra& f = map.source.factors[0];
    const DominantWeight omega = DominantWeight::natural(k);
    if (w.is_zero()) return trivial_module(f);
    if (w == omega) return map.branching;
    if (w == dual_weight(k, omega)) return map.branching.dual();
    return std::nullopt;
}

}  // namespace

ComposeResult compose_index(const std::vector<Embedding>& first, const Embedding& second, std::int64_t bound) {
    if (first.size() != second.source.size())
        throw SpecError("the first map has " + std::to_string(first.size()) + " components but the second map's source is " +
                        second.source.name());
    if (first.empty()) throw SpecError("empty chain");
    const SemisimpleAlgebra& fsrc = first[0].source;
    if (fsrc.size() != 1) throw DomainError("the chain must start at a simple algebra, got " + fsrc.name());
    const SimpleAlgebra& f = fsrc.factors[0];
    for (std::size_t j = 0; j < first.size(); ++j) {
        if (!(first[j].source == fsrc)) throw SpecError("map " + std::to_string(j + 1) + " starts at a different algebra");
        if (!(first[j].target == second.source.factors[j]))
            throw SpecError("map " + std::to_string(j + 1) + " lands in " + first[j].target.name() + " but factor " +
                            std::to_string(j + 1) + " of the middle algebra is " + second.source.factors[j].name());
    }

    ComposeResult res;
    const std::vector<std::int64_t> outer = embedding_index(second);
    for (std::size_t j = 0; j < first.size(); ++j) res.sum_side += embedding_index(first[j])[0] * outer[j];

    const std::int64_t divisor = natural_module_index(second.target);
    Integer direct = 0;

    bool explicit_route = true;
    ModuleDecomposition composite{fsrc, {}};
    std::map<Labels, std::int64_t> acc;
    try {
        for (const Summand& s : second.branching.summands) {
            ModuleDecomposition part = trivial_module(f);
            for (std::size_t j = 0; j < first.size() && explicit_route; ++j) {
                auto r = restrict_factor(second.source.factors[j], s.weights[j], first[j]);
                if (!r) {
                    explicit_route = false;
                    break;
                }
                if (s.weights[j].is_zero()) continue;
                part = tensor(f, part, *r, bound);
            }
            if (!explicit_route) break;
            for (const Summand& p : part.summands) acc[p.weights[0].labels()] += p.multiplicity * s.multiplicity;
        }
    } catch (const ResourceError&) {
        explicit_route = false;
    }

    if (explicit_route) {
        for (const auto& [w, m] : acc) composite.summands.push_back(Summand{{DominantWeight(f, w)}, m});
        if (composite.total_dimension() != second.target.natural_dimension())
            throw SpecError("composite branching has the wrong dimension");
        direct = index_of_module(composite, 0);
        res.route = "tensor";
        res.composite = composite;
    } else {
        // Tensor rule on each summand, each factor restricted separately.
        for (const Summand& s : second.branching.summands) {
            std::vector<Integer> dims, idx;
            for (std::size_t j = 0; j < first.size(); ++j) {
                const SimpleAlgebra& k = second.source.factors[j];
                dims.push_back(dimension(k, s.weights[j]));
                if (auto r = restrict_factor(k, s.weights[j], first[j]))
                    idx.push_back(index_of_module(*r, 0));
                else
                    idx.push_back(Integer(static_cast<long>(embedding_index(first[j])[0])) * index_of_irrep(k, s.weights[j]));
            }
            for (std::size_t j = 0; j < first.size(); ++j) {
                Integer term = idx[j] * Integer(static_cast<long>(s.multiplicity));
                for (std::size_t i = 0; i < first.size(); ++i)
                    if (i != j) term *= dims[i];
                direct += term;
            }
        }
        res.route = "tensor-rule";
    }
    if (!mpz_divisible_ui_p(direct.get_mpz_t(), static_cast<unsigned long>(divisor)))
        throw SpecError("composite branching index " + to_string(direct) + " is not divisible by " + std::to_string(divisor));
    res.direct_side = to_int64(Integer(direct / divisor), "composite index");
    if (res.direct_side != res.sum_side)
        throw SpecError("inconsistent branchings: the sum formula gives " + std::to_string(res.sum_side) +
                        " but the composite branching gives " + std::to_string(res.direct_side));
    return res;
}

}  // namespace lielimits
