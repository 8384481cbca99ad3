#pragma once

#include "lielimits/decomposition.hpp"
#include "lielimits/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lielimits {

// (dim U / dim f) * (lambda, lambda + 2 rho). Always a non-negative integer;
// anything else throws InternalError.
Integer index_of_irrep(const SimpleAlgebra& alg, const DominantWeight& lambda);

// Index of the natural module: A 1, B 2, C 1, D 2. Checked against
// index_of_irrep the first time each algebra is seen.
std::int64_t natural_module_index(const SimpleAlgebra& alg);

// sum over summands of mult * prod_{i != factor} dim U_i * I(U_factor).
// `factor` is 0-based; throws DomainError when out of range.
Integer index_of_module(const ModuleDecomposition& decomp, std::size_t factor);

// One index per source factor. Validates the embedding first.
std::vector<std::int64_t> embedding_index(const Embedding& emb);

enum class EmbeddingKind { Standard, Diagonal, General };

struct EmbeddingClass {
    EmbeddingKind kind = EmbeddingKind::General;
    std::int64_t k = 0;  // copies of omega (self-dual omega counts here)
    std::int64_t l = 0;  // copies of omega* when omega* != omega
    std::int64_t t = 0;  // trivial multiplicity
    bool operator==(const EmbeddingClass&) const = default;
};

std::string to_string(const EmbeddingClass& c);

// Requires a simple source (DomainError otherwise).
EmbeddingClass classify_embedding(const Embedding& emb);

// Minimum index over dominant weights outside {0, omega, omega*} with
// dimension <= dim_bound. Throws DomainError("bound too small") when none.
struct NonDiagonalMinimum {
    std::int64_t index = 0;
    DominantWeight weight;
    std::int64_t scanned = 0;
};
NonDiagonalMinimum min_nondiagonal_index(const SimpleAlgebra& alg, std::int64_t dim_bound);

// Dominant weights of dimension <= bound in lexicographic label order.
std::vector<DominantWeight> dominant_weights_up_to(const SimpleAlgebra& alg, std::int64_t dim_bound);

// f -> k_1 + ... + k_l -> f'. `first[j]` is the map f -> k_j (its branching
// of the natural k_j-module over f); `second` embeds k_1 + ... + k_l in f'.
struct ComposeResult {
    std::int64_t sum_side = 0;     // sum_j I_f^{k_j} I_{k_j}^{f'}
    std::int64_t direct_side = 0;  // index of the composite branching
    // "tensor": composite branching built explicitly and split with the oracle;
    // "tensor-rule": per-factor restrictions combined by the tensor rule
    // because some factor is not omega/omega*/trivial or a product exceeds
    // the oracle bound.
    std::string route;
    std::optional<ModuleDecomposition> composite;  // present on the "tensor" route
    bool operator==(const ComposeResult&) const = default;
};

// Throws SpecError when the two sides disagree or the middle algebra does
// not match.
ComposeResult compose_index(const std::vector<Embedding>& first, const Embedding& second,
                            std::int64_t bound = oracle::kDefaultBound);

}  // namespace lielimits
