#pragma once

// Natural and conatural modules over a locally semisimple subalgebra read off
// a finite prefix: multiplicities of the natural module of each infinite
// constituent, trivial complements, and the socle layer structure.

#include "lielimits/system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lielimits {

// Dimension judged from a finite window. Every verdict carries its evidence.
struct ExtendedDim {
    enum class Kind { Finite, Countable, Undetermined };
    Kind kind = Kind::Finite;
    std::int64_t value = 0;  // Finite: the dimension; Undetermined: lower bound
    std::vector<std::int64_t> evidence;  // per window level, oldest first
    bool operator==(const ExtendedDim&) const = default;
};

std::string to_string(const ExtendedDim& d);

// constant -> Finite; strictly increasing -> Countable; else Undetermined
// with the smallest window value as lower bound. Uses the last kTailWindow
// entries of `sequence`.
ExtendedDim judge_window(const std::vector<std::int64_t>& sequence);

struct Multiplicities {
    std::int64_t k = 0;
    std::int64_t l = 0;
    bool operator==(const Multiplicities&) const = default;
};

// Copies of omega (k) and omega* (l) of the string factor in V(g_n), counted
// at the two highest levels, oriented by the top vertex (a string link that
// restricts omega to omega* swaps k and l below it). Throws DomainError for a non-infinite
// constituent and InsufficientPrefix when the counts are not yet stable.
Multiplicities multiplicities(const SystemSpec& spec, const BratteliGraph& g, const Constituent& c);

struct TrivialDims {
    ExtendedDim natural;    // dim N
    ExtendedDim conatural;  // dim N_*
    bool operator==(const TrivialDims&) const = default;
};

TrivialDims trivial_dims(const SystemSpec& spec, const BratteliGraph& g, const Constituent& c);

struct InfinitePart {
    int constituent = 0;
    ConstituentKind kind = ConstituentKind::Undetermined;
    Multiplicities mult;
    TrivialDims trivial;
    bool operator==(const InfinitePart&) const = default;
};

// Isotypic component of V(g_top) over the finite constituents: weights on
// the finite constituents' top factors, in constituent order.
struct IsotypicEntry {
    std::vector<int> constituents;
    std::vector<Labels> weights;
    std::int64_t multiplicity = 0;
    bool operator==(const IsotypicEntry&) const = default;
};

struct SocleReport {
    std::vector<Constituent> constituents;
    std::vector<InfinitePart> infinite;
    std::vector<IsotypicEntry> finite_part;
    ExtendedDim quotient;            // dim V / V'
    ExtendedDim conatural_quotient;  // dim V_* / (V_*)'
    std::int64_t socle_dim_top = 0;  // dim of V' inside V(g_top)
    bool operator==(const SocleReport&) const = default;
};

// Throws InconsistentSystem when one ambient summand is non-trivial on the
// factors of two constituents.
SocleReport socle_report(const SystemSpec& spec, const BratteliGraph& g);

struct SubsetInvariants {
    std::vector<int> subset;  // constituent ids
    ExtendedDim natural_trivial;      // N^J
    ExtendedDim conatural_trivial;    // N_*^J
    ExtendedDim natural_quotient;     // V / V'_J
    ExtendedDim conatural_quotient;   // V_* / (V_*)'_J
    bool operator==(const SubsetInvariants&) const = default;
};

struct StandardInvariants {
    std::map<int, Multiplicities> multiplicities;
    std::vector<SubsetInvariants> subsets;
    bool operator==(const StandardInvariants&) const = default;
};

// Empty `subsets` selects every singleton plus the full infinite set. Ids
// that are out of range or not infinite throw DomainError.
StandardInvariants standard_invariants(const SystemSpec& spec, const BratteliGraph& g,
                                       const std::vector<std::vector<int>>& subsets = {});

}  // namespace lielimits
