#include "lielimits/oracle.hpp"

#include "lielimits/error.hpp"
#include "lielimits/kernels.hpp"

#include <set>
#include <vector>

namespace lielimits::oracle {

namespace {

void check_bound(const Integer& dim, std::int64_t bound, const std::string& what) {
    if (dim > Integer(static_cast<long>(bound)))
        throw ResourceError(what + " has dimension " + to_string(dim) + ", above the bound " + std::to_string(bound));
}

// den * (x, x) via the scaled Gram matrix.
std::int64_t scaled_norm(const RootSystem& rs, const std::vector<std::int32_t>& x) {
    std::vector<std::int64_t> gx(rs.rank());
    kernels::pair_rows(rs.scaled_gram_matrix(), x, gx);
    std::int64_t s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += gx[i] * x[i];
    return s;
}

std::vector<std::int32_t> as_i32(const Labels& l) { return {l.begin(), l.end()}; }

}  // namespace

WeightMultiset freudenthal(const SimpleAlgebra& alg, const DominantWeight& lambda, std::int64_t bound) {
    check_bound(dimension(alg, lambda), bound, "V" + lambda.str());
    const RootSystem& rs = root_system(alg);
    const int n = alg.rank();
    const auto& roots = rs.positive_roots();
    std::vector<int> heights;
    for (const auto& r : roots) {
        int h = 0;
        for (int c : r.simple) h += c;
        heights.push_back(h);
    }

    std::vector<std::int32_t> top = as_i32(lambda.labels());
    for (auto& v : top) v += 1;
    const std::int64_t top_norm = scaled_norm(rs, top);

    WeightMultiset mult;
    mult[lambda.labels()] = 1;
    std::vector<Labels> layer{lambda.labels()};
    std::vector<std::int64_t> pairings(roots.size());

    for (int depth = 1; !layer.empty(); ++depth) {
        std::set<Labels> candidates;
        for (const Labels& w : layer)
            for (int i = 0; i < n; ++i) {
                Labels c = w;
                for (int j = 0; j < n; ++j) c[j] -= rs.cartan()[i][j];
                candidates.insert(std::move(c));
            }
        std::vector<Labels> next;
        for (const Labels& mu : candidates) {
            std::vector<std::int32_t> x = as_i32(mu);
            kernels::pair_rows(rs.scaled_root_matrix(), x, pairings);
            std::int64_t rhs = 0;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                Labels nu = mu;
                for (int k = 1; depth - k * heights[r] >= 0; ++k) {
                    for (int j = 0; j < n; ++j) nu[j] += roots[r].weight[j];
                    auto it = mult.find(nu);
                    if (it == mult.end()) continue;
                    rhs += it->second * (pairings[r] + k * rs.scaled_root_norms()[r]);
                }
            }
            rhs *= 2;
            for (auto& v : x) v += 1;
            const std::int64_t gap = top_norm - scaled_norm(rs, x);
            if (gap == 0) {
                if (rhs != 0) throw InternalError("Freudenthal recursion hit a zero denominator");
                continue;
            }
            if (rhs % gap != 0) throw InternalError("Freudenthal recursion produced a non-integer multiplicity");
            const std::int64_t m = rhs / gap;
            if (m < 0) throw InternalError("Freudenthal recursion produced a negative multiplicity");
            if (m == 0) continue;
            mult[mu] = m;
            next.push_back(mu);
        }
        layer = std::move(next);
    }
    if (Integer(static_cast<long>(total_count(mult))) != dimension(alg, lambda))
        throw InternalError("weight multiplicities of V" + lambda.str() + " do not sum to its dimension");
    return mult;
}

std::int64_t total_count(const WeightMultiset& ms) {
    std::int64_t s = 0;
    for (const auto& [w, m] : ms) s += m;
    return s;
}

bool is_weyl_symmetric(const SimpleAlgebra& alg, const WeightMultiset& ms) {
    const RootSystem& rs = root_system(alg);
    for (int i = 0; i < alg.rank(); ++i)
        for (const auto& [mu, m] : ms) {
            Labels r = mu;
            for (int j = 0; j < alg.rank(); ++j) r[j] -= mu[i] * rs.cartan()[i][j];
            auto it = ms.find(r);
            if (it == ms.end() || it->second != m) return false;
        }
    return true;
}

int long_coroot_index(const SimpleAlgebra& alg) { return alg.series() == Series::C ? alg.rank() - 1 : 0; }

Integer trace_index(const SimpleAlgebra& alg, const DominantWeight& lambda, std::int64_t bound) {
    const WeightMultiset ms = freudenthal(alg, lambda, bound);
    const int h = long_coroot_index(alg);
    Integer trace = 0;
    for (const auto& [mu, m] : ms) trace += Integer(static_cast<long>(m)) * mu[h] * mu[h];
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), 2)) throw InternalError("trace form is odd for V" + lambda.str());
    return trace / 2;
}

WeightMultiset product(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out;
    for (const auto& [x, mx] : a)
        for (const auto& [y, my] : b) {
            Labels s = x;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
            out[s] += mx * my;
        }
    return out;
}

ModuleDecomposition decompose_character(const SimpleAlgebra& alg, WeightMultiset ms, std::int64_t bound) {
    const RootSystem& rs = root_system(alg);
    const int n = alg.rank();
    // height(nu) = den * (nu, rho); strictly positive on every simple root.
    std::vector<std::int64_t> rho_pairing(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rho_pairing[i] += rs.scaled_gram()[i][j];

    ModuleDecomposition out{SemisimpleAlgebra::simple(alg), {}};
    while (!ms.empty()) {
        const Labels* best = nullptr;
        std::int64_t best_h = 0;
        for (const auto& [nu, m] : ms) {
            std::int64_t h = 0;
            for (int i = 0; i < n; ++i) h += rho_pairing[i] * nu[i];
            if (!best || h > best_h) {
                best = &nu;
                best_h = h;
            }
        }
        for (int v : *best)
            if (v < 0) throw InternalError("character extraction reached a non-dominant highest weight");
        const DominantWeight hw(alg, *best);
        const std::int64_t m = ms.at(*best);
        for (const auto& [mu, k] : freudenthal(alg, hw, bound)) {
            auto it = ms.find(mu);
            if (it == ms.end() || it->second < m * k)
                throw InternalError("character extraction went negative at " + hw.str());
            it->second -= m * k;
            if (it->second == 0) ms.erase(it);
        }
        out.summands.push_back(Summand{{hw}, m});
    }
    return out.normalized();
}

ModuleDecomposition tensor_decompose(const SimpleAlgebra& alg, const DominantWeight& lambda, const DominantWeight& mu,
                                     std::int64_t bound) {
    check_bound(dimension(alg, lambda) * dimension(alg, mu), bound, "V" + lambda.str() + " (x) V" + mu.str());
    return decompose_character(alg, product(freudenthal(alg, lambda, bound), freudenthal(alg, mu, bound)), bound);
}

}  // namespace lielimits::oracle
