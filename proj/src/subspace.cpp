#include "lielimits/subspace.hpp"

#include "lielimits/error.hpp"
#include "lielimits/linalg.hpp"

#include <algorithm>

namespace lielimits {

using Row = Subspace::Row;

Space other(Space s) { return s == Space::V ? Space::VStar : Space::V; }

std::string to_string(Space s) { return s == Space::V ? "V" : "V*"; }

std::string to_string(Pairing p) {
    switch (p) {
        case Pairing::Gl: return "gl";
        case Pairing::Symmetric: return "symmetric";
        case Pairing::Symplectic: return "symplectic";
    }
    return "gl";
}

FinSuppVec clean(FinSuppVec v) {
    for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
    return v;
}

std::string to_string(const FinSuppVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : v) {
        if (!s.empty()) s += " + ";
        s += (c == 1 ? std::string() : "(" + lielimits::to_string(c) + ")") + "e" + std::to_string(i);
    }
    return s;
}

EvConstFunctional EvConstFunctional::canonical() const {
    EvConstFunctional f = *this;
    while (!f.head.empty() && f.head.back() == f.tail) f.head.pop_back();
    return f;
}

Rational EvConstFunctional::evaluate(const FinSuppVec& v) const {
    Rational s = 0;
    for (const auto& [i, c] : v) s += c * (static_cast<std::size_t>(i) <= head.size() ? head[i - 1] : tail);
    return s;
}

namespace {

// Canonical echelon rows: reduced, zero rows dropped, trailing zero columns trimmed.
std::vector<Row> echelon(std::vector<Row> rows) {
    linalg::Matrix m;
    for (auto& r : rows) m.add_row(std::move(r));
    m = linalg::rref(std::move(m));
    std::size_t width = 0;
    for (const auto& r : m.rows)
        for (std::size_t c = r.size(); c-- > 0;)
            if (r[c] != 0) {
                width = std::max(width, c + 1);
                break;
            }
    for (auto& r : m.rows) r.resize(width);
    return m.rows;
}

Row to_row(const FinSuppVec& v) {
    Row r;
    for (const auto& [i, c] : v) {
        if (static_cast<std::size_t>(i) > r.size()) r.resize(i);
        r[i - 1] = c;
    }
    return r;
}

FinSuppVec to_vec(const Row& r) {
    FinSuppVec v;
    for (std::size_t c = 0; c < r.size(); ++c)
        if (r[c] != 0) v[static_cast<int>(c) + 1] = r[c];
    return v;
}

Row functional_row(const EvConstFunctional& f) {
    Row r(f.head.size() + 1);
    r[0] = f.tail;
    for (std::size_t i = 0; i < f.head.size(); ++i) r[i + 1] = f.head[i] - f.tail;
    return r;
}

Rational at(const Row& r, std::size_t i) { return i < r.size() ? r[i] : Rational(0); }

// Value of functional row f on vector row x.
Rational evaluate(const Row& f, const Row& x) {
    Rational s = 0;
    const Rational t = at(f, 0);
    for (std::size_t c = 0; c < x.size(); ++c)
        if (x[c] != 0) s += x[c] * (t + at(f, c + 1));
    return s;
}

Row combine(const std::vector<Row>& rows, const std::vector<Rational>& coeffs) {
    Row out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (rows[i].size() > out.size()) out.resize(rows[i].size());
        for (std::size_t c = 0; c < rows[i].size(); ++c) out[c] += coeffs[i] * rows[i][c];
    }
    return out;
}

// span(vectors) intersected with the kernels of `functionals`.
std::vector<Row> span_cap_kernels(const std::vector<Row>& vectors, const std::vector<Row>& functionals) {
    const std::vector<Row> basis = echelon(vectors);
    if (basis.empty()) return {};
    linalg::Matrix e(basis.size());
    for (const Row& f : functionals) {
        Row row(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) row[i] = evaluate(f, basis[i]);
        e.add_row(std::move(row));
    }
    std::vector<Row> out;
    for (const auto& c : linalg::nullspace(e)) out.push_back(combine(basis, c));
    return echelon(std::move(out));
}

// Intersection of two spans of plain coordinate rows.
std::vector<Row> span_intersection(const std::vector<Row>& a, const std::vector<Row>& b) {
    const std::vector<Row> ea = echelon(a), eb = echelon(b);
    if (ea.empty() || eb.empty()) return {};
    std::size_t width = 0;
    for (const Row& r : ea) width = std::max(width, r.size());
    for (const Row& r : eb) width = std::max(width, r.size());
    // Columns are the rows of a and -b; a null vector (x, y) gives x.a = y.b.
    linalg::Matrix m(ea.size() + eb.size());
    for (std::size_t c = 0; c < width; ++c) {
        Row row(ea.size() + eb.size());
        for (std::size_t i = 0; i < ea.size(); ++i) row[i] = at(ea[i], c);
        for (std::size_t j = 0; j < eb.size(); ++j) row[ea.size() + j] = -at(eb[j], c);
        m.add_row(std::move(row));
    }
    std::vector<Row> out;
    for (const auto& n : linalg::nullspace(m)) {
        std::vector<Rational> x(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(ea.size()));
        out.push_back(combine(ea, x));
    }
    return echelon(std::move(out));
}

void require_same_space(const Subspace& a, const Subspace& b) {
    if (a.space() != b.space())
        throw SpecError("subspaces live in different spaces (" + to_string(a.space()) + " and " + to_string(b.space()) + ")");
}

}  // namespace

Subspace Subspace::zero(Space s) { return Subspace(s, Form::Finite, {}); }
Subspace Subspace::whole(Space s) { return Subspace(s, Form::Cofinite, {}); }
Subspace Subspace::finite(Space s, std::vector<Row> basis) { return Subspace(s, Form::Finite, echelon(std::move(basis))); }
Subspace Subspace::cofinite(Space s, std::vector<Row> functionals) {
    return Subspace(s, Form::Cofinite, echelon(std::move(functionals)));
}

Subspace Subspace::from_descriptor(const SubspaceDescriptor& d) {
    std::vector<Row> gens;
    for (const FinSuppVec& g : d.generators) {
        for (const auto& [i, c] : g)
            if (i < 1) throw SpecError("basis index " + std::to_string(i) + " is not positive");
        gens.push_back(to_row(clean(g)));
    }
    std::vector<Row> kernels;
    for (const EvConstFunctional& f : d.kernels) kernels.push_back(functional_row(f.canonical()));
    if (!d.tail_from) return finite(d.space, span_cap_kernels(gens, kernels));
    const int n = *d.tail_from;
    if (n < 1) throw SpecError("tail_from must be at least 1, got " + std::to_string(n));
    // span(G) + tail = common kernel of the finitely supported functionals on
    // v_1..v_{n-1} that vanish on G.
    linalg::Matrix g(static_cast<std::size_t>(n - 1));
    for (const Row& r : gens) {
        Row head(static_cast<std::size_t>(n - 1));
        for (std::size_t c = 0; c < head.size() && c < r.size(); ++c) head[c] = r[c];
        g.add_row(std::move(head));
    }
    for (const auto& y : linalg::nullspace(g)) {
        Row f(y.size() + 1);
        for (std::size_t c = 0; c < y.size(); ++c) f[c + 1] = y[c];
        kernels.push_back(std::move(f));
    }
    return cofinite(d.space, std::move(kernels));
}

std::optional<std::int64_t> Subspace::dim() const {
    if (form_ == Form::Finite) return static_cast<std::int64_t>(rows_.size());
    return std::nullopt;
}

std::optional<std::int64_t> Subspace::codim() const {
    if (form_ == Form::Cofinite) return static_cast<std::int64_t>(rows_.size());
    return std::nullopt;
}

int Subspace::support() const {
    std::size_t w = 0;
    for (const Row& r : rows_) w = std::max(w, r.size());
    // Functional rows carry the tail value in column 0.
    if (form_ == Form::Cofinite && w > 0) --w;
    return static_cast<int>(w);
}

bool Subspace::contains(const FinSuppVec& v) const {
    const Row x = to_row(clean(v));
    if (form_ == Form::Cofinite) {
        for (const Row& f : rows_)
            if (evaluate(f, x) != 0) return false;
        return true;
    }
    linalg::Matrix m;
    for (const Row& r : rows_) m.add_row(r);
    return linalg::in_row_space(m, x);
}

std::vector<FinSuppVec> Subspace::basis_vectors() const {
    if (form_ != Form::Finite) throw InternalError("basis_vectors on a cofinite subspace");
    std::vector<FinSuppVec> out;
    for (const Row& r : rows_) out.push_back(to_vec(r));
    return out;
}

std::vector<EvConstFunctional> Subspace::functionals() const {
    if (form_ != Form::Cofinite) throw InternalError("functionals on a finite subspace");
    std::vector<EvConstFunctional> out;
    for (const Row& r : rows_) {
        EvConstFunctional f;
        f.tail = at(r, 0);
        for (std::size_t c = 1; c < r.size(); ++c) f.head.push_back(r[c] + f.tail);
        out.push_back(f.canonical());
    }
    return out;
}

SubspaceDescriptor Subspace::to_descriptor() const {
    SubspaceDescriptor d;
    d.space = space_;
    if (form_ == Form::Finite) {
        d.generators = basis_vectors();
    } else {
        d.tail_from = 1;
        d.kernels = functionals();
    }
    return d;
}

std::string Subspace::str() const {
    const std::string sp = to_string(space_);
    if (is_zero()) return "0 in " + sp;
    if (is_whole()) return sp;
    std::string s;
    if (form_ == Form::Finite) {
        s = "span{";
        bool first = true;
        for (const auto& v : basis_vectors()) {
            s += (first ? "" : ", ") + to_string(v);
            first = false;
        }
        return s + "} in " + sp;
    }
    s = "kernel of {";
    bool first = true;
    for (const auto& f : functionals()) {
        s += first ? "" : ", ";
        first = false;
        s += "[";
        for (std::size_t i = 0; i < f.head.size(); ++i) s += (i ? "," : "") + lielimits::to_string(f.head[i]);
        s += (f.head.empty() ? "" : ",") + std::string("...") + lielimits::to_string(f.tail) + "]";
    }
    return s + "} in " + sp;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_space(a, b);
    using F = Subspace::Form;
    if (a.form() == F::Cofinite && b.form() == F::Cofinite) {
        std::vector<Row> rows = a.rows();
        rows.insert(rows.end(), b.rows().begin(), b.rows().end());
        return Subspace::cofinite(a.space(), std::move(rows));
    }
    if (a.form() == F::Finite && b.form() == F::Finite)
        return Subspace::finite(a.space(), span_intersection(a.rows(), b.rows()));
    const Subspace& fin = a.form() == F::Finite ? a : b;
    const Subspace& cof = a.form() == F::Finite ? b : a;
    return Subspace::finite(a.space(), span_cap_kernels(fin.rows(), cof.rows()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_space(a, b);
    using F = Subspace::Form;
    if (a.form() == F::Finite && b.form() == F::Finite) {
        std::vector<Row> rows = a.rows();
        rows.insert(rows.end(), b.rows().begin(), b.rows().end());
        return Subspace::finite(a.space(), std::move(rows));
    }
    if (a.form() == F::Cofinite && b.form() == F::Cofinite)
        return Subspace::cofinite(a.space(), span_intersection(a.rows(), b.rows()));
    // ker A + span B is cut out by the functionals of span A vanishing on B.
    const Subspace& fin = a.form() == F::Finite ? a : b;
    const Subspace& cof = a.form() == F::Finite ? b : a;
    linalg::Matrix e(cof.rows().size());
    for (const Row& x : fin.rows()) {
        Row row(cof.rows().size());
        for (std::size_t i = 0; i < cof.rows().size(); ++i) row[i] = evaluate(cof.rows()[i], x);
        e.add_row(std::move(row));
    }
    std::vector<Row> out;
    for (const auto& c : linalg::nullspace(e)) out.push_back(combine(cof.rows(), c));
    return Subspace::cofinite(a.space(), std::move(out));
}

bool includes(const Subspace& big, const Subspace& small) { return sum(big, small) == big; }

Subspace truncate(const Subspace& w, int m) {
    if (m < 0) throw DomainError("truncation length must be non-negative");
    const std::size_t mm = static_cast<std::size_t>(m);
    if (w.form() == Subspace::Form::Finite) {
        std::vector<Row> cut;
        for (int c = m + 1; c <= w.support(); ++c) {
            Row f(static_cast<std::size_t>(c) + 1);
            f[static_cast<std::size_t>(c)] = 1;
            cut.push_back(std::move(f));
        }
        return Subspace::finite(w.space(), span_cap_kernels(w.rows(), cut));
    }
    linalg::Matrix a(mm);
    for (const Row& f : w.rows()) {
        Row row(mm);
        for (std::size_t c = 0; c < mm; ++c) row[c] = at(f, 0) + at(f, c + 1);
        a.add_row(std::move(row));
    }
    return Subspace::finite(w.space(), linalg::nullspace(a));
}

std::optional<FinSuppVec> find_vector_outside(const Subspace& big, const Subspace& small) {
    require_same_space(big, small);
    if (includes(small, big)) return std::nullopt;
    const int base = std::max(big.support(), small.support());
    const int slack = static_cast<int>(big.rows().size() + small.rows().size()) + 2;
    for (int m = std::max(1, base); m <= base + slack; ++m)
        for (const FinSuppVec& v : truncate(big, m).basis_vectors())
            if (!small.contains(v)) return v;
    throw InternalError("no separating vector found below index " + std::to_string(base + slack));
}

Rational form_value(Pairing p, const FinSuppVec& x, const FinSuppVec& y) {
    if (p == Pairing::Gl) throw DomainError("the gl pairing is not a form on V");
    const Rational eps = p == Pairing::Symmetric ? 1 : -1;
    Rational s = 0;
    for (const auto& [a, xa] : x) {
        const int partner = a % 2 == 1 ? a + 1 : a - 1;
        auto it = y.find(partner);
        if (it == y.end()) continue;
        s += xa * it->second * (a % 2 == 1 ? Rational(1) : eps);
    }
    return s;
}

Subspace perp(const Subspace& w, Pairing p) {
    using F = Subspace::Form;
    if (p == Pairing::Gl) {
        if (w.form() == F::Finite) {
            std::vector<Row> fs;
            for (const Row& r : w.rows()) {
                Row f(r.size() + 1);
                std::copy(r.begin(), r.end(), f.begin() + 1);
                fs.push_back(std::move(f));
            }
            return Subspace::cofinite(other(w.space()), std::move(fs));
        }
        // span(A) meets the restricted dual in the rows without a tail pivot.
        std::vector<Row> vs;
        for (const Row& f : w.rows())
            if (at(f, 0) == 0) vs.emplace_back(f.begin() + 1, f.end());
        return Subspace::finite(other(w.space()), std::move(vs));
    }
    if (w.space() != Space::V) throw SpecError("form orthogonals are taken inside V");
    const Rational eps = p == Pairing::Symmetric ? 1 : -1;
    const Subspace ann = perp(w, Pairing::Gl);
    // Pull back along x -> (x, .), which sends v_{2i-1} to v_{2i}^* and v_{2i} to eps v_{2i-1}^*.
    auto swap_pairs = [&](const Row& r, std::size_t offset) {
        Row out(r.size() + 1);
        for (std::size_t c = offset; c < r.size(); ++c) {
            const std::size_t idx = c - offset + 1;  // 1-based basis index
            if (r[c] == 0) continue;
            if (idx % 2 == 0) out[c - 1] += r[c];       // v_{2i}^* -> v_{2i-1}
            else out[c + 1] += eps * r[c];              // v_{2i-1}^* -> eps v_{2i}
        }
        return out;
    };
    std::vector<Row> rows;
    if (ann.form() == F::Finite) {
        for (const Row& r : ann.rows()) rows.push_back(swap_pairs(r, 0));
        return Subspace::finite(Space::V, std::move(rows));
    }
    for (const Row& f : ann.rows()) {
        if (at(f, 0) != 0) throw InternalError("orthogonal of a subspace of V has a functional with a tail");
        rows.push_back(swap_pairs(f, 1));
    }
    return Subspace::cofinite(Space::V, std::move(rows));
}

ClosureCheck double_perp_closed(const Subspace& w, Pairing p) {
    ClosureCheck c;
    c.double_perp = perp(perp(w, p), p);
    c.closed = c.double_perp == w;
    if (!c.closed) c.witness = find_vector_outside(c.double_perp, w);
    return c;
}

bool is_isotropic(const Subspace& w, Pairing p) { return includes(perp(w, p), w); }

bool is_nondegenerate(const Subspace& w, Pairing p) { return intersect(w, perp(w, p)).is_zero(); }

}  // namespace lielimits
