#pragma once

// Finite prefix s_1 -> s_2 -> ... of a direct system of semisimple algebras,
// each level sitting in a classical ambient g_n. The prefix is turned into a
// leveled graph whose vertex labels are ambient indices and whose edge labels
// are embedding indices; all further analysis runs on that graph.

#include "lielimits/decomposition.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lielimits {

struct LevelSpec {
    SemisimpleAlgebra components;
    SimpleAlgebra ambient;
    ModuleDecomposition ambient_branching;  // V(g_n) over the components
    // V(g_n)* over the components when it is not the factorwise dual of
    // ambient_branching (the restricted dual of the limit can be smaller).
    std::optional<ModuleDecomposition> conatural_branching;
};

struct EdgeSpec {
    // branchings[k]: natural module of component k of level n+1 over the
    // components of level n.
    std::vector<ModuleDecomposition> branchings;
};

struct SystemSpec {
    std::vector<LevelSpec> levels;
    std::vector<EdgeSpec> edges;  // edges[n] joins level n and n+1
};

// 0-based internally; printed 1-based as "(n,j)".
struct Vertex {
    int level = 0;
    int index = 0;
    auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

// Ambient families never mix: A, C, or the orthogonal pair B/D.
enum class AmbientKind { Linear, Symplectic, Orthogonal };
AmbientKind ambient_kind(Series s);

struct BratteliGraph {
    std::vector<std::vector<SimpleAlgebra>> algebras;    // [level][j]
    std::vector<std::vector<std::int64_t>> alpha;        // [level][j]
    std::vector<std::vector<std::vector<std::int64_t>>> beta;  // [level][j][k], 0 = no edge

    int levels() const { return static_cast<int>(alpha.size()); }
    int top() const { return levels() - 1; }
    int width(int level) const { return static_cast<int>(alpha.at(level).size()); }
    std::int64_t alpha_of(Vertex v) const { return alpha.at(v.level).at(v.index); }
    const SimpleAlgebra& algebra_of(Vertex v) const { return algebras.at(v.level).at(v.index); }
    bool contains(Vertex v) const;
    std::vector<Vertex> successors(Vertex v) const;
    std::vector<Vertex> predecessors(Vertex v) const;
    bool operator==(const BratteliGraph&) const = default;
};

// Validates every level and edge (SpecError), the ambient kind, and the
// consistency law alpha_n^j = sum_k beta_n^{j,k} alpha_{n+1}^k
// (InconsistentSystem naming the vertex); then re-derives every alpha from
// explicit path sums to the top level.
BratteliGraph compute_labels(const SystemSpec& spec);

// sum over paths gamma from v to the top level of beta(gamma) * alpha_top.
// Enumerates paths one by one; independent of the level-by-level check.
std::int64_t path_sum(const BratteliGraph& g, Vertex v);

// Vertices reachable from `origin` (inclusive), grouped by level.
std::vector<std::vector<Vertex>> subdiagram(const BratteliGraph& g, Vertex origin);

// a_m(origin) for m = origin.level .. top. Non-increasing; InternalError if not.
std::vector<std::int64_t> level_sums(const BratteliGraph& g, Vertex origin);

// Least level m0 < top (or m0 = top for a top-level origin) from which a_m is
// constant and the subdiagram is a disjoint union of strings: every vertex
// at levels m0..top-1 has exactly one successor and every vertex at levels
// m0+1..top exactly one predecessor inside the subdiagram.
std::optional<int> stabilization(const BratteliGraph& g, Vertex origin);

enum class ConstituentKind { FiniteSimple, SlInf, SoInf, SpInf, Undetermined };
std::string to_string(ConstituentKind k);
bool is_infinite(ConstituentKind k);

struct Constituent {
    int id = 0;
    ConstituentKind kind = ConstituentKind::Undetermined;
    std::optional<SimpleAlgebra> algebra;  // FiniteSimple only
    std::vector<Vertex> string;            // consecutive levels, ends at the top
    bool tail_assumed = false;
    bool operator==(const Constituent&) const = default;
};

// Number of trailing string levels examined by the tail classifier.
inline constexpr int kTailWindow = 3;

// One constituent per top-level vertex, ordered by index. Throws
// InsufficientPrefix listing every origin without stabilization.
std::vector<Constituent> decompose(const BratteliGraph& g);

struct RefinementStep {
    Vertex from;
    Vertex to;
    std::string classification;  // Standard / Diagonal(k,l,t) / General
    bool standard = false;
    bool operator==(const RefinementStep&) const = default;
};

struct Refinement {
    int constituent = 0;
    std::vector<Vertex> chain;
    std::vector<RefinementStep> steps;
    std::optional<int> standard_from;  // n0: every step from this level on is Standard
    bool operator==(const Refinement&) const = default;
};

// With no id, the decomposition must have exactly one infinite constituent
// (DomainError otherwise).
Refinement extract_refinement(const SystemSpec& spec, const BratteliGraph& g,
                              std::optional<int> constituent = std::nullopt);

// Restriction of a branching to one factor: each summand contributes its
// weight on `factor` with multiplicity times the dimensions of the rest.
ModuleDecomposition restrict_to_factor(const ModuleDecomposition& d, std::size_t factor);

}  // namespace lielimits
