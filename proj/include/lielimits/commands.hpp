#pragma once

// Builders for every report the command-line tool prints. They only combine
// library calls, so tests can produce exactly what the tool would print.

#include "lielimits/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lielimits::commands {

report::IndexReport index_report(const SimpleAlgebra& alg, const DominantWeight& weight);
report::EmbedReport embed_report(const Embedding& emb);
report::ComposeReport compose_report(const io::Chain& chain, std::int64_t bound = oracle::kDefaultBound);

// Keeps the first `levels` levels when given (SpecError when out of range).
SystemSpec truncate_levels(SystemSpec spec, std::optional<int> levels);

// Never throws InsufficientPrefix: an unstable prefix is recorded in the
// report (stabilized = false).
report::LimitReport limit_report(const SystemSpec& spec);
report::RefineReport refine_report(const SystemSpec& spec, std::optional<int> constituent);
report::SocleDocument socle_report(const SystemSpec& spec);
report::InvariantsReport invariants_report(const SystemSpec& spec, const std::vector<std::vector<int>>& subsets);

report::MaximalReport maximal_report(AlgebraKind g, const MaximalInput& input,
                                     const std::optional<MaximalInput>& compare = std::nullopt);

report::OracleReport oracle_report(const SimpleAlgebra& alg, const DominantWeight& weight,
                                   const std::optional<DominantWeight>& tensor_with,
                                   std::int64_t bound = oracle::kDefaultBound);

// `count` random dominant weights of dimension <= max_dimension, algebra
// chosen uniformly from `algebras`; fully determined by `seed`.
report::SampleReport sample_report(const std::vector<SimpleAlgebra>& algebras, int count, std::uint64_t seed,
                                   std::int64_t max_dimension);

}  // namespace lielimits::commands
