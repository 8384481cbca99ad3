#pragma once

// Finitely presented subspaces of V = span{v_1, v_2, ...} and of its
// restricted dual V_* = span{v_1^*, v_2^*, ...}. Every described subspace is
// either finite-dimensional or the common kernel of finitely many
// eventually-constant functionals; both forms have an exact canonical
// representative, so equality is decided by comparing representatives.

#include "lielimits/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lielimits {

enum class Space { V, VStar };
Space other(Space s);
std::string to_string(Space s);

// index (1-based) -> coefficient; zero coefficients are never stored.
using FinSuppVec = std::map<int, Rational>;
FinSuppVec clean(FinSuppVec v);
std::string to_string(const FinSuppVec& v);

// Value head[i-1] on basis vector i <= head.size(), `tail` beyond.
struct EvConstFunctional {
    std::vector<Rational> head;
    Rational tail;

    // Drops trailing head entries equal to the tail.
    EvConstFunctional canonical() const;
    Rational evaluate(const FinSuppVec& v) const;
    bool operator==(const EvConstFunctional&) const = default;
};

// (span(generators) + span{basis_i : i >= tail_from}) intersected with the
// kernels of `kernels`.
struct SubspaceDescriptor {
    Space space = Space::V;
    std::vector<FinSuppVec> generators;
    std::optional<int> tail_from;
    std::vector<EvConstFunctional> kernels;
    bool operator==(const SubspaceDescriptor&) const = default;
};

class Subspace {
public:
    enum class Form { Finite, Cofinite };
    using Row = std::vector<Rational>;

    // Throws SpecError on malformed input (indices < 1, tail_from < 1).
    static Subspace from_descriptor(const SubspaceDescriptor& d);
    static Subspace zero(Space s);
    static Subspace whole(Space s);
    // Basis rows: row[c-1] is the coefficient of basis vector c.
    static Subspace finite(Space s, std::vector<Row> basis);
    // Functional rows: row[0] is the eventual value t, row[c] = value on
    // basis vector c minus t.
    static Subspace cofinite(Space s, std::vector<Row> functionals);

    Space space() const { return space_; }
    Form form() const { return form_; }
    // Canonical rows (reduced echelon form, trailing zero columns trimmed).
    const std::vector<Row>& rows() const { return rows_; }

    bool is_zero() const { return form_ == Form::Finite && rows_.empty(); }
    bool is_whole() const { return form_ == Form::Cofinite && rows_.empty(); }
    std::optional<std::int64_t> dim() const;
    std::optional<std::int64_t> codim() const;
    // Largest basis index any row mentions.
    int support() const;

    bool contains(const FinSuppVec& v) const;
    std::vector<FinSuppVec> basis_vectors() const;          // Finite only
    std::vector<EvConstFunctional> functionals() const;     // Cofinite only

    SubspaceDescriptor to_descriptor() const;
    std::string str() const;

    bool operator==(const Subspace&) const = default;

private:
    Subspace(Space s, Form f, std::vector<Row> rows) : space_(s), form_(f), rows_(std::move(rows)) {}
    Space space_;
    Form form_;
    std::vector<Row> rows_;
};

// Binary operations require a common space (SpecError otherwise).
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
// small is contained in big.
bool includes(const Subspace& big, const Subspace& small);

// W intersected with span of the first m basis vectors.
Subspace truncate(const Subspace& w, int m);

// A vector of `big` that is not in `small`, if one exists.
std::optional<FinSuppVec> find_vector_outside(const Subspace& big, const Subspace& small);

// Gl: the pairing between V and V_*. Symmetric / Symplectic: the standard
// form on V with (v_{2i-1}, v_{2i}) = 1 and (v_{2i}, v_{2i-1}) = +1 / -1.
enum class Pairing { Gl, Symmetric, Symplectic };
std::string to_string(Pairing p);

Rational form_value(Pairing p, const FinSuppVec& x, const FinSuppVec& y);

// Gl: W in V gives a subspace of V_* and vice versa. Forms: W must lie in V.
Subspace perp(const Subspace& w, Pairing p);

struct ClosureCheck {
    bool closed = false;
    Subspace double_perp = Subspace::zero(Space::V);
    std::optional<FinSuppVec> witness;  // in W^perp^perp but not in W
};
ClosureCheck double_perp_closed(const Subspace& w, Pairing p);

bool is_isotropic(const Subspace& w, Pairing p);
bool is_nondegenerate(const Subspace& w, Pairing p);

}  // namespace lielimits
