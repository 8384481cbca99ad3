#pragma once

// Maximality of subalgebras of gl(V,V_*), sl(V,V_*), so(V) and sp(V) given as
// stabilizers of finitely presented subspaces, plus the two non-stabilizer
// shapes (the derived algebra inside gl, a form algebra inside sl).

#include "lielimits/subspace.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lielimits {

enum class AlgebraKind { Gl, Sl, So, Sp };
std::string to_string(AlgebraKind k);
AlgebraKind parse_algebra_kind(const std::string& s);  // ParseError on failure

enum class Outcome { Maximal, NotMaximal, NotProper };
std::string to_string(Outcome o);

enum class CaseTag { None, Ia, Ib, Ic, IIa, IIb, IIc, IIIa, IIIb, IIIc };
std::string to_string(CaseTag t);  // "ia", ..., "none"
CaseTag parse_case_tag(const std::string& s);

// m = [g,g] (meaningful for gl).
struct DerivedToken {
    bool operator==(const DerivedToken&) const = default;
};
// m = so(V) or sp(V) for a non-degenerate form asserted by the user (sl).
struct FormToken {
    Pairing form = Pairing::Symmetric;
    bool operator==(const FormToken&) const = default;
};

using MaximalInput = std::variant<Subspace, DerivedToken, FormToken>;

struct Witness {
    std::string description;
    std::optional<Subspace> subspace;  // intermediate stabilized subspace
    std::optional<FinSuppVec> vector;
    bool operator==(const Witness&) const = default;
};

struct Verdict {
    AlgebraKind algebra = AlgebraKind::Gl;
    Outcome outcome = Outcome::NotProper;
    CaseTag tag = CaseTag::None;
    std::string condition;    // the condition that selected the case
    std::string subalgebra;   // description of m
    // W for every stabilizer case; (W, W^perp) for iiia.
    std::vector<Subspace> invariants;
    std::optional<Witness> witness;  // NotMaximal only
    bool operator==(const Verdict&) const = default;
};

// Subspace inputs: gl/sl accept W in V or V_*, so/sp require W in V
// (SpecError otherwise). Tokens are valid for gl/sl only.
Verdict classify_maximal(AlgebraKind g, const MaximalInput& m);

struct UniquenessReport {
    bool same_invariant = false;
    std::optional<FinSuppVec> separating;  // lies in one invariant only
    bool operator==(const UniquenessReport&) const = default;
};

// Both verdicts must be Maximal stabilizer cases with the same tag
// (DomainError otherwise). iiia invariants compare as unordered pairs.
UniquenessReport uniqueness_check(const Verdict& a, const Verdict& b);

}  // namespace lielimits
