#include "lielimits/decomposition.hpp"

#include "lielimits/error.hpp"

#include <algorithm>
#include <map>

namespace lielimits {

SemisimpleAlgebra::SemisimpleAlgebra(std::vector<SimpleAlgebra> f) : factors(std::move(f)) {
    if (factors.empty()) throw SpecError("a semisimple algebra needs at least one simple factor");
}

std::string SemisimpleAlgebra::name() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += '+';
        s += factors[i].name();
    }
    return s;
}

bool Summand::is_trivial() const {
    for (const auto& w : weights)
        if (!w.is_zero()) return false;
    return true;
}

Integer summand_dimension(const SemisimpleAlgebra& alg, const Summand& s) {
    Integer d = 1;
    for (std::size_t j = 0; j < alg.size(); ++j) d *= dimension(alg.factors[j], s.weights[j]);
    return d;
}

void ModuleDecomposition::validate() const {
    if (algebra.factors.empty()) throw SpecError("decomposition over an empty algebra");
    if (summands.empty()) throw SpecError("decomposition has no summands");
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const Summand& s = summands[i];
        if (s.weights.size() != algebra.size())
            throw SpecError("summand " + std::to_string(i + 1) + " has " + std::to_string(s.weights.size()) +
                            " weights for " + std::to_string(algebra.size()) + " factors");
        for (std::size_t j = 0; j < algebra.size(); ++j) require_rank(algebra.factors[j], s.weights[j].labels());
        if (s.multiplicity <= 0) throw SpecError("summand " + std::to_string(i + 1) + " has non-positive multiplicity");
    }
}

Integer ModuleDecomposition::total_dimension() const {
    Integer total = 0;
    for (const Summand& s : summands) total += summand_dimension(algebra, s) * Integer(static_cast<long>(s.multiplicity));
    return total;
}

ModuleDecomposition ModuleDecomposition::dual() const {
    ModuleDecomposition out{algebra, {}};
    for (const Summand& s : summands) {
        Summand d{{}, s.multiplicity};
        for (std::size_t j = 0; j < algebra.size(); ++j) d.weights.push_back(dual_weight(algebra.factors[j], s.weights[j]));
        out.summands.push_back(std::move(d));
    }
    return out;
}

ModuleDecomposition ModuleDecomposition::normalized() const {
    std::map<std::vector<Labels>, std::int64_t> merged;
    for (const Summand& s : summands) {
        std::vector<Labels> key;
        for (const auto& w : s.weights) key.push_back(w.labels());
        merged[key] += s.multiplicity;
    }
    ModuleDecomposition out{algebra, {}};
    for (const auto& [key, mult] : merged) {
        Summand s{{}, mult};
        for (std::size_t j = 0; j < key.size(); ++j) s.weights.emplace_back(algebra.factors[j], key[j]);
        out.summands.push_back(std::move(s));
    }
    return out;
}

Embedding::Embedding(SemisimpleAlgebra src, SimpleAlgebra tgt, ModuleDecomposition br)
    : source(std::move(src)), target(tgt), branching(std::move(br)) {}

void Embedding::validate() const {
    if (!(branching.algebra == source)) throw SpecError("branching is not over the embedding source " + source.name());
    branching.validate();
    const Integer total = branching.total_dimension();
    if (total != target.natural_dimension())
        throw SpecError("branching of the natural " + target.name() + "-module has dimension " + to_string(total) +
                        ", expected " + std::to_string(target.natural_dimension()));
    if (target.series() != Series::A && !(branching.normalized() == branching.dual().normalized()))
        throw SpecError("branching into " + target.name() + " is not self-dual");
}

}  // namespace lielimits
