#pragma once

#include "lielimits/root_data.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lielimits {

// Ordered list of simple factors. Order is part of the identity.
struct SemisimpleAlgebra {
    std::vector<SimpleAlgebra> factors;

    SemisimpleAlgebra() = default;
    explicit SemisimpleAlgebra(std::vector<SimpleAlgebra> f);
    static SemisimpleAlgebra simple(const SimpleAlgebra& a) { return SemisimpleAlgebra({a}); }

    std::size_t size() const { return factors.size(); }
    std::string name() const;  // "A1+A1"
    bool operator==(const SemisimpleAlgebra&) const = default;
};

// One irreducible summand: an outer tensor product, one weight per factor.
struct Summand {
    std::vector<DominantWeight> weights;
    std::int64_t multiplicity = 1;

    bool is_trivial() const;
    // Whether the weight on factor j is non-zero.
    bool nontrivial_on(std::size_t j) const { return !weights.at(j).is_zero(); }
    bool operator==(const Summand&) const = default;
};

struct ModuleDecomposition {
    SemisimpleAlgebra algebra;
    std::vector<Summand> summands;

    // Checks weight counts and lengths, multiplicities > 0, non-empty total.
    void validate() const;
    Integer total_dimension() const;
    // Factorwise dual of every summand.
    ModuleDecomposition dual() const;
    // Merges equal weight tuples and sorts; used for multiset comparison.
    ModuleDecomposition normalized() const;
    bool operator==(const ModuleDecomposition&) const = default;
};

Integer summand_dimension(const SemisimpleAlgebra& alg, const Summand& s);

// A homomorphism source -> target, recorded as the restriction of the
// target's natural module.
struct Embedding {
    SemisimpleAlgebra source;
    SimpleAlgebra target;
    ModuleDecomposition branching;

    Embedding(SemisimpleAlgebra src, SimpleAlgebra tgt, ModuleDecomposition br);

    // Dimension must equal the natural dimension of the target; B/C/D targets
    // need a self-dual branching. Throws SpecError.
    void validate() const;
    bool operator==(const Embedding&) const = default;
};

}  // namespace lielimits
