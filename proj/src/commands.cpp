#include "lielimits/commands.hpp"

#include "lielimits/error.hpp"

#include <random>

namespace lielimits::commands {

report::IndexReport index_report(const SimpleAlgebra& alg, const DominantWeight& weight) {
    return {alg, weight, dimension(alg, weight), index_of_irrep(alg, weight)};
}

report::EmbedReport embed_report(const Embedding& emb) {
    report::EmbedReport r{emb, embedding_index(emb), std::nullopt};
    if (emb.source.size() == 1) r.classification = classify_embedding(emb);
    return r;
}

report::ComposeReport compose_report(const io::Chain& chain, std::int64_t bound) {
    return {chain, compose_index(chain.first, chain.second, bound)};
}

SystemSpec truncate_levels(SystemSpec spec, std::optional<int> levels) {
    if (!levels) return spec;
    const int n = *levels;
    if (n < 1 || n > static_cast<int>(spec.levels.size()))
        throw SpecError("--levels must lie between 1 and " + std::to_string(spec.levels.size()));
    spec.levels.erase(spec.levels.begin() + n, spec.levels.end());
    spec.edges.erase(spec.edges.begin() + (n - 1), spec.edges.end());
    return spec;
}

report::LimitReport limit_report(const SystemSpec& spec) {
    report::LimitReport r;
    r.graph = compute_labels(spec);
    for (int n = 0; n < r.graph.levels(); ++n)
        for (int j = 0; j < r.graph.width(n); ++j) {
            const Vertex v{n, j};
            const auto m0 = stabilization(r.graph, v);
            r.stability.push_back({v, level_sums(r.graph, v), m0});
            if (!m0) r.unstable.push_back(v);
        }
    r.stabilized = r.unstable.empty();
    if (r.stabilized) r.constituents = decompose(r.graph);
    return r;
}

report::RefineReport refine_report(const SystemSpec& spec, std::optional<int> constituent) {
    const BratteliGraph g = compute_labels(spec);
    return {extract_refinement(spec, g, constituent)};
}

report::SocleDocument socle_report(const SystemSpec& spec) {
    const BratteliGraph g = compute_labels(spec);
    return {lielimits::socle_report(spec, g)};
}

report::InvariantsReport invariants_report(const SystemSpec& spec, const std::vector<std::vector<int>>& subsets) {
    const BratteliGraph g = compute_labels(spec);
    return {standard_invariants(spec, g, subsets)};
}

namespace {

std::string input_name(const MaximalInput& in) {
    if (std::holds_alternative<Subspace>(in)) return "subspace";
    if (std::holds_alternative<DerivedToken>(in)) return "derived";
    return "form:" + to_string(std::get<FormToken>(in).form);
}

}  // namespace

report::MaximalReport maximal_report(AlgebraKind g, const MaximalInput& input, const std::optional<MaximalInput>& compare) {
    report::MaximalReport r;
    r.input = input_name(input);
    if (const auto* s = std::get_if<Subspace>(&input)) r.subspace = *s;
    r.verdict = classify_maximal(g, input);
    if (compare) {
        r.compared = classify_maximal(g, *compare);
        r.uniqueness = uniqueness_check(r.verdict, *r.compared);
    }
    return r;
}

report::OracleReport oracle_report(const SimpleAlgebra& alg, const DominantWeight& weight,
                                   const std::optional<DominantWeight>& tensor_with, std::int64_t bound) {
    report::OracleReport r{alg, weight, oracle::freudenthal(alg, weight, bound), 0, false, 0, tensor_with, std::nullopt};
    r.total = oracle::total_count(r.weights);
    r.weyl_symmetric = oracle::is_weyl_symmetric(alg, r.weights);
    r.trace_index = oracle::trace_index(alg, weight, bound);
    if (tensor_with) r.tensor = oracle::tensor_decompose(alg, weight, *tensor_with, bound);
    return r;
}

report::SampleReport sample_report(const std::vector<SimpleAlgebra>& algebras, int count, std::uint64_t seed,
                                   std::int64_t max_dimension) {
    if (algebras.empty()) throw DomainError("sampling needs at least one algebra");
    if (count < 0 || max_dimension < 1) throw DomainError("sample count and dimension bound must be positive");
    std::vector<std::vector<DominantWeight>> pools;
    for (const SimpleAlgebra& a : algebras) pools.push_back(dominant_weights_up_to(a, max_dimension));
    // Raw engine output keeps the draw identical across standard libraries.
    std::mt19937_64 rng(seed);
    report::SampleReport r{seed, max_dimension, {}, true};
    for (int i = 0; i < count; ++i) {
        const std::size_t a = static_cast<std::size_t>(rng() % algebras.size());
        const DominantWeight& w = pools[a][static_cast<std::size_t>(rng() % pools[a].size())];
        report::SampleRow row{algebras[a], w, dimension(algebras[a], w), index_of_irrep(algebras[a], w),
                              oracle::trace_index(algebras[a], w)};
        r.all_agree = r.all_agree && row.formula_index == row.trace_index;
        r.rows.push_back(std::move(row));
    }
    return r;
}

}  // namespace lielimits::commands
