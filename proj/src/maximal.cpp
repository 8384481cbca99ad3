#include "lielimits/maximal.hpp"

#include "lielimits/error.hpp"

namespace lielimits {

std::string to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Gl: return "gl";
        case AlgebraKind::Sl: return "sl";
        case AlgebraKind::So: return "so";
        case AlgebraKind::Sp: return "sp";
    }
    return "gl";
}

AlgebraKind parse_algebra_kind(const std::string& s) {
    if (s == "gl") return AlgebraKind::Gl;
    if (s == "sl") return AlgebraKind::Sl;
    if (s == "so") return AlgebraKind::So;
    if (s == "sp") return AlgebraKind::Sp;
    throw ParseError("unknown algebra kind '" + s + "' (expected gl, sl, so or sp)");
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Maximal: return "Maximal";
        case Outcome::NotMaximal: return "NotMaximal";
        case Outcome::NotProper: return "NotProper";
    }
    return "NotProper";
}

namespace {
constexpr std::pair<CaseTag, const char*> kTags[] = {
    {CaseTag::None, "none"}, {CaseTag::Ia, "ia"},     {CaseTag::Ib, "ib"},     {CaseTag::Ic, "ic"},
    {CaseTag::IIa, "iia"},   {CaseTag::IIb, "iib"},   {CaseTag::IIc, "iic"},   {CaseTag::IIIa, "iiia"},
    {CaseTag::IIIb, "iiib"}, {CaseTag::IIIc, "iiic"},
};
}  // namespace

std::string to_string(CaseTag t) {
    for (const auto& [tag, name] : kTags)
        if (tag == t) return name;
    return "none";
}

CaseTag parse_case_tag(const std::string& s) {
    for (const auto& [tag, name] : kTags)
        if (s == name) return tag;
    throw ParseError("unknown case tag '" + s + "'");
}

namespace {

Verdict make(AlgebraKind g, Outcome o, CaseTag t, std::string condition, std::string subalgebra) {
    Verdict v;
    v.algebra = g;
    v.outcome = o;
    v.tag = t;
    v.condition = std::move(condition);
    v.subalgebra = std::move(subalgebra);
    return v;
}

Verdict not_maximal(AlgebraKind g, std::string condition, Witness w) {
    Verdict v = make(g, Outcome::NotMaximal, CaseTag::None, std::move(condition), "");
    v.witness = std::move(w);
    return v;
}

Pairing pairing_of(AlgebraKind g) {
    if (g == AlgebraKind::So) return Pairing::Symmetric;
    if (g == AlgebraKind::Sp) return Pairing::Symplectic;
    return Pairing::Gl;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0 || !mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(n, d);
}

FinSuppVec axpy(const Rational& x, const FinSuppVec& a, const FinSuppVec& b) {
    FinSuppVec out = b;
    for (const auto& [i, c] : a) out[i] += x * c;
    return clean(out);
}

// Isotropic line inside a two-dimensional non-degenerate space for a
// symmetric form; exact when the discriminant is a rational square.
Witness isotropic_line(const Subspace& u, const std::string& name) {
    const auto basis = u.basis_vectors();
    const FinSuppVec& e = basis.at(0);
    const FinSuppVec& f = basis.at(1);
    const Rational a = form_value(Pairing::Symmetric, e, e);
    const Rational b = form_value(Pairing::Symmetric, e, f);
    const Rational c = form_value(Pairing::Symmetric, f, f);
    Witness w;
    w.description = "dim " + name + " = 2: Stab W lies properly in the stabilizer of an isotropic line of " + name;
    std::optional<FinSuppVec> line;
    if (a == 0) line = e;
    else if (c == 0) line = f;
    else if (auto s = rational_sqrt(b * b - a * c)) line = axpy((-b + *s) / a, e, f);
    if (line) {
        w.vector = *line;
        SubspaceDescriptor d;
        d.generators = {*line};
        w.subspace = Subspace::from_descriptor(d);
    } else {
        const Rational disc = b * b - a * c;
        w.description += "; the line is spanned by x*(" + to_string(e) + ") + (" + to_string(f) + ") with x = (" +
                         to_string(-b) + " +- sqrt(" + to_string(disc) + "))/" + to_string(a) + ", defined over Q(sqrt(" +
                         to_string(disc) + "))";
    }
    return w;
}

Verdict classify_linear(AlgebraKind g, const Subspace& w) {
    const bool sl = g == AlgebraKind::Sl;
    if (w.is_zero() || w.is_whole())
        return make(g, Outcome::NotProper, CaseTag::None, "W = 0 or W = " + to_string(w.space()), "m = g");
    const Subspace p = perp(w, Pairing::Gl);
    const Subspace pp = perp(p, Pairing::Gl);
    const bool codim_one_dense = w.codim() == 1 && p.is_zero();
    const bool closed = pp == w;
    if (static_cast<int>(codim_one_dense) + static_cast<int>(closed) > 1)
        throw InternalError("maximality conditions overlap for " + w.str());

    if (codim_one_dense) {
        Verdict v = make(g, Outcome::Maximal, sl ? CaseTag::IIb : CaseTag::Ib,
                         "codim W = 1 and W^perp = 0 (W in " + to_string(w.space()) + ")",
                         std::string("m = Stab W, m isomorphic to ") + (sl ? "sl(inf)" : "gl(inf)"));
        v.invariants = {w};
        return v;
    }
    if (closed) {
        // A closed subspace of V_* has the same stabilizer as its perp in V.
        const Subspace inv = w.space() == Space::V ? w : p;
        Verdict v = make(g, Outcome::Maximal, sl ? CaseTag::IIc : CaseTag::Ic,
                         "W^perp^perp = W, W proper (W in V)", "m = Stab W = Stab W^perp");
        v.invariants = {inv};
        return v;
    }
    if (p.is_zero())
        throw InternalError("W^perp = 0 with codim W != 1 cannot occur in the descriptor class: " + w.str());
    Witness wit;
    wit.description = "W is properly contained in the proper subspace W^perp^perp, whose stabilizer properly contains Stab W";
    wit.subspace = pp;
    wit.vector = find_vector_outside(pp, w);
    return not_maximal(g, "W^perp != 0 and W^perp^perp != W", std::move(wit));
}

Verdict classify_form(AlgebraKind g, const Subspace& w) {
    if (w.space() != Space::V) throw SpecError("so and sp stabilizers take a subspace of V, got one of V*");
    const Pairing f = pairing_of(g);
    const std::string alg = g == AlgebraKind::So ? "so" : "sp";
    if (w.is_zero() || w.is_whole()) return make(g, Outcome::NotProper, CaseTag::None, "W = 0 or W = V", "m = g");
    const Subspace p = perp(w, f);
    const Subspace pp = perp(p, f);
    const Subspace meet = intersect(w, p);
    const bool nondeg = meet.is_zero();
    const bool splits = nondeg && sum(w, p).is_whole();
    const bool dense = nondeg && p.is_zero() && w.codim() == 1;
    const bool iso_closed = includes(p, w) && pp == w;
    if (static_cast<int>(splits) + static_cast<int>(dense) + static_cast<int>(iso_closed) > 1)
        throw InternalError("maximality conditions overlap for " + w.str());

    if (splits) {
        if (g == AlgebraKind::So && (w.dim() == 2 || p.dim() == 2)) {
            const bool w_small = w.dim() == 2;
            return not_maximal(g, "W + W^perp = V, W non-degenerate, dim " + std::string(w_small ? "W" : "W^perp") + " = 2",
                               isotropic_line(w_small ? w : p, w_small ? "W" : "W^perp"));
        }
        Verdict v = make(g, Outcome::Maximal, CaseTag::IIIa, "W non-degenerate and W + W^perp = V",
                         "m = " + alg + "(W) + " + alg + "(W^perp)");
        v.invariants = {w, p};
        return v;
    }
    if (dense) {
        Verdict v = make(g, Outcome::Maximal, CaseTag::IIIb, "W non-degenerate, W^perp = 0 and codim W = 1",
                         "m = " + alg + "(W)");
        v.invariants = {w};
        return v;
    }
    if (iso_closed) {
        Verdict v = make(g, Outcome::Maximal, CaseTag::IIIc, "W isotropic and W^perp^perp = W", "m = Stab W");
        v.invariants = {w};
        return v;
    }
    if (p.is_zero()) throw InternalError("W^perp = 0 with codim W != 1 cannot occur in the descriptor class: " + w.str());
    if (!(pp == w)) {
        Witness wit;
        wit.description = "W is properly contained in the proper subspace W^perp^perp, whose stabilizer properly contains Stab W";
        wit.subspace = pp;
        wit.vector = find_vector_outside(pp, w);
        return not_maximal(g, "W^perp != 0 and W^perp^perp != W", std::move(wit));
    }
    // Closed from here on.
    if (includes(w, p) && !(p == w)) {
        // W^perp is isotropic and closed, with the same stabilizer as W.
        Verdict v = make(g, Outcome::Maximal, CaseTag::IIIc, "W^perp isotropic and W^perp^perp^perp = W^perp",
                         "m = Stab W = Stab W^perp");
        v.invariants = {p};
        return v;
    }
    if (!nondeg) {
        Witness wit;
        wit.description = "W meets W^perp in a proper isotropic subspace of both, whose stabilizer properly contains Stab W";
        wit.subspace = meet;
        wit.vector = find_vector_outside(w, meet);
        return not_maximal(g, "0 != W cap W^perp, properly inside W and W^perp", std::move(wit));
    }
    Witness wit;
    const Subspace both = sum(w, p);
    wit.description = "W + W^perp is a proper subspace whose stabilizer properly contains Stab W";
    wit.subspace = both;
    wit.vector = find_vector_outside(Subspace::whole(Space::V), both);
    return not_maximal(g, "W non-degenerate and W + W^perp != V", std::move(wit));
}

}  // namespace

Verdict classify_maximal(AlgebraKind g, const MaximalInput& m) {
    if (const auto* w = std::get_if<Subspace>(&m))
        return g == AlgebraKind::Gl || g == AlgebraKind::Sl ? classify_linear(g, *w) : classify_form(g, *w);
    if (g == AlgebraKind::So || g == AlgebraKind::Sp) throw SpecError("the derived and form inputs apply to gl and sl only");
    if (std::holds_alternative<DerivedToken>(m)) {
        if (g == AlgebraKind::Sl) return make(g, Outcome::NotProper, CaseTag::None, "[g,g] = g", "m = g");
        return make(g, Outcome::Maximal, CaseTag::Ia, "m = [g,g]", "m = [g,g] = sl(V,V_*)");
    }
    const std::string alg = std::get<FormToken>(m).form == Pairing::Symplectic ? "sp(V)" : "so(V)";
    if (std::get<FormToken>(m).form == Pairing::Gl) throw SpecError("the form input needs a symmetric or symplectic form");
    if (g == AlgebraKind::Sl)
        return make(g, Outcome::Maximal, CaseTag::IIa, "m = " + alg + " for a non-degenerate form", "m = " + alg);
    Witness wit;
    wit.description = alg + " lies properly inside [g,g] = sl(V,V_*), a proper subalgebra of gl(V,V_*)";
    return not_maximal(g, "m = " + alg + " inside gl", std::move(wit));
}

UniquenessReport uniqueness_check(const Verdict& a, const Verdict& b) {
    if (a.outcome != Outcome::Maximal || b.outcome != Outcome::Maximal || a.tag != b.tag || a.invariants.empty() ||
        b.invariants.empty())
        throw DomainError("uniqueness compares two maximal stabilizer verdicts of the same case");
    UniquenessReport r;
    if (a.tag == CaseTag::IIIa) {
        const auto& x = a.invariants;
        const auto& y = b.invariants;
        r.same_invariant = (x[0] == y[0] && x[1] == y[1]) || (x[0] == y[1] && x[1] == y[0]);
        if (!r.same_invariant) {
            const std::size_t i = x[0] == y[0] ? 1 : 0;
            r.separating = find_vector_outside(x[i], y[i]);
            if (!r.separating) r.separating = find_vector_outside(y[i], x[i]);
        }
        return r;
    }
    const Subspace& s = a.invariants[0];
    const Subspace& t = b.invariants[0];
    r.same_invariant = s == t;
    if (!r.same_invariant) {
        if (s.space() != t.space()) throw DomainError("invariants live in different spaces");
        r.separating = find_vector_outside(s, t);
        if (!r.separating) r.separating = find_vector_outside(t, s);
    }
    return r;
}

}  // namespace lielimits
