#pragma once

// Result documents of the command-line tool. Each has a structured form
// ("lielimits-report/1", exact values, deterministic key order) that parses
// back to an equal value, and a human-readable rendering.

#include "lielimits/index.hpp"
#include "lielimits/io.hpp"
#include "lielimits/maximal.hpp"
#include "lielimits/oracle.hpp"
#include "lielimits/socle.hpp"
#include "lielimits/system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lielimits::report {

inline constexpr const char* kReportFormat = "lielimits-report/1";

struct IndexReport {
    SimpleAlgebra algebra;
    DominantWeight weight;
    Integer dimension;
    Integer index;
    bool operator==(const IndexReport&) const = default;
};

struct EmbedReport {
    Embedding embedding;
    std::vector<std::int64_t> indices;  // one per source factor
    std::optional<EmbeddingClass> classification;  // simple sources only
    bool operator==(const EmbedReport&) const = default;
};

struct ComposeReport {
    io::Chain chain;
    ComposeResult result;
    bool operator==(const ComposeReport&) const = default;
};

struct VertexStability {
    Vertex origin;
    std::vector<std::int64_t> level_sums;  // a_m for m = origin level .. top
    std::optional<int> stabilization;      // m0 (0-based level)
    bool operator==(const VertexStability&) const = default;
};

struct LimitReport {
    BratteliGraph graph;
    std::vector<VertexStability> stability;
    bool stabilized = false;
    std::vector<Constituent> constituents;  // empty unless stabilized
    std::vector<Vertex> unstable;           // origins without stabilization
    bool operator==(const LimitReport&) const = default;
};

struct RefineReport {
    Refinement refinement;
    bool operator==(const RefineReport&) const = default;
};

struct SocleDocument {
    SocleReport socle;
    bool operator==(const SocleDocument&) const = default;
};

struct InvariantsReport {
    StandardInvariants invariants;
    bool operator==(const InvariantsReport&) const = default;
};

struct MaximalReport {
    std::string input;  // "subspace", "derived", "form:symmetric", "form:symplectic"
    std::optional<Subspace> subspace;
    Verdict verdict;
    std::optional<Verdict> compared;  // second verdict for a uniqueness check
    std::optional<UniquenessReport> uniqueness;
    bool operator==(const MaximalReport&) const = default;
};

struct OracleReport {
    SimpleAlgebra algebra;
    DominantWeight weight;
    oracle::WeightMultiset weights;
    std::int64_t total = 0;
    bool weyl_symmetric = false;
    Integer trace_index;
    std::optional<DominantWeight> tensor_with;
    std::optional<ModuleDecomposition> tensor;
    bool operator==(const OracleReport&) const = default;
};

struct SampleRow {
    SimpleAlgebra algebra;
    DominantWeight weight;
    Integer dimension;
    Integer formula_index;
    Integer trace_index;
    bool operator==(const SampleRow&) const = default;
};

// Seeded random comparison of the closed index formula with the trace oracle.
struct SampleReport {
    std::uint64_t seed = 0;
    std::int64_t max_dimension = 0;
    std::vector<SampleRow> rows;
    bool all_agree = false;
    bool operator==(const SampleReport&) const = default;
};

using Report = std::variant<IndexReport, EmbedReport, ComposeReport, LimitReport, RefineReport, SocleDocument,
                            InvariantsReport, MaximalReport, OracleReport, SampleReport>;

std::string command_of(const Report& r);

io::Json to_json(const Report& r);
Report from_json(const io::Json& j);  // ParseError on malformed documents

std::string render_json(const Report& r);   // pretty-printed, trailing newline
std::string render_human(const Report& r);  // trailing newline

// Pieces shared with the tests.
io::Json to_json(const ExtendedDim& d);
ExtendedDim extended_dim_from_json(const io::Json& j, const std::string& where);
io::Json to_json(const Verdict& v);
Verdict verdict_from_json(const io::Json& j, const std::string& where);

}  // namespace lielimits::report
