#pragma once

// Independent checks for the index calculus. Nothing here uses the closed
// highest-weight index formula: weights come from the Freudenthal recursion,
// indices from traces over weight spaces.

#include "lielimits/decomposition.hpp"
#include "lielimits/root_data.hpp"

#include <cstdint>
#include <map>

namespace lielimits::oracle {

inline constexpr std::int64_t kDefaultBound = 5000;

// weight (fundamental coordinates) -> multiplicity
using WeightMultiset = std::map<Labels, std::int64_t>;

// Throws ResourceError when dim V(lambda) exceeds `bound`.
WeightMultiset freudenthal(const SimpleAlgebra& alg, const DominantWeight& lambda,
                           std::int64_t bound = kDefaultBound);

std::int64_t total_count(const WeightMultiset& ms);

// Invariance under each simple reflection s_i(mu) = mu - mu_i alpha_i.
bool is_weyl_symmetric(const SimpleAlgebra& alg, const WeightMultiset& ms);

// Sum over weights of mult * mu(h)^2 / (h, h) with h a long simple coroot.
// Throws InternalError if the trace is not an integer.
Integer trace_index(const SimpleAlgebra& alg, const DominantWeight& lambda, std::int64_t bound = kDefaultBound);

// The simple coroot used by trace_index (0-based).
int long_coroot_index(const SimpleAlgebra& alg);

// Weights of V(lambda) (x) V(mu).
WeightMultiset product(const WeightMultiset& a, const WeightMultiset& b);

// Splits a Weyl-symmetric weight multiset into irreducible characters by
// repeatedly removing the character of its highest weight.
ModuleDecomposition decompose_character(const SimpleAlgebra& alg, WeightMultiset ms,
                                        std::int64_t bound = kDefaultBound);

// V(lambda) (x) V(mu); dim V(lambda) * dim V(mu) must not exceed `bound`.
ModuleDecomposition tensor_decompose(const SimpleAlgebra& alg, const DominantWeight& lambda,
                                     const DominantWeight& mu, std::int64_t bound = kDefaultBound);

}  // namespace lielimits::oracle
