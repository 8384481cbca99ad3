#include "support.hpp"

#include <doctest.h>

using namespace lielimits;
using testsupport::load_subspace;

namespace {

FinSuppVec e(int i, Rational c = 1) { return FinSuppVec{{i, c}}; }

Subspace from(SubspaceDescriptor d) { return Subspace::from_descriptor(d); }

SubspaceDescriptor tail(int from, Space s = Space::V) {
    SubspaceDescriptor d;
    d.space = s;
    d.tail_from = from;
    return d;
}

SubspaceDescriptor all_ones_kernel() {
    SubspaceDescriptor d = tail(1);
    d.kernels.push_back({{}, 1});
    return d;
}

}  // namespace

TEST_CASE("descriptor canonical forms") {
    const Subspace t2 = from(tail(2));
    CHECK(t2.form() == Subspace::Form::Cofinite);
    CHECK(t2.codim() == 1);
    CHECK_FALSE(t2.contains(e(1)));
    CHECK(t2.contains(e(7)));

    SubspaceDescriptor copy = tail(2);
    copy.generators.push_back(e(2, 3));
    CHECK(from(copy) == t2);

    const Subspace k = from(all_ones_kernel());
    CHECK(k.codim() == 1);
    CHECK(k.contains(FinSuppVec{{1, 1}, {5, -1}}));
    CHECK_FALSE(k.contains(e(3)));

    // without a tail the kernel condition cuts a finite span
    SubspaceDescriptor fin;
    fin.generators = {e(1), e(2)};
    fin.kernels.push_back({{}, 1});
    const Subspace f = from(fin);
    CHECK(f.dim() == 1);
    CHECK(f.contains(FinSuppVec{{1, 1}, {2, -1}}));

    CHECK(from(SubspaceDescriptor{}).is_zero());
    CHECK(from(tail(1)).is_whole());

    SubspaceDescriptor bad;
    bad.generators.push_back(e(0));
    CHECK_THROWS_AS(from(bad), SpecError);
    CHECK_THROWS_AS(from(tail(0)), SpecError);
}

TEST_CASE("canonical descriptor round trip") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const Subspace w = from(testsupport::random_descriptor(rng, i % 2 ? Space::V : Space::VStar));
        CHECK(from(w.to_descriptor()) == w);
    }
}

TEST_CASE("functional canonical form") {
    EvConstFunctional f{{1, 2, 2, 2}, 2};
    CHECK(f.canonical() == EvConstFunctional{{1}, 2});
    CHECK(f.evaluate(FinSuppVec{{1, 1}, {9, 1}}) == 3);
}

TEST_CASE("sum, intersection and inclusion") {
    const Subspace v1 = from(SubspaceDescriptor{Space::V, {e(1)}, std::nullopt, {}});
    const Subspace t2 = from(tail(2));
    CHECK(sum(v1, t2).is_whole());
    CHECK(intersect(v1, t2).is_zero());
    CHECK(includes(from(tail(1)), t2));
    CHECK_FALSE(includes(t2, v1));
    const Subspace k = from(all_ones_kernel());
    CHECK(intersect(k, t2).codim() == 2);
    CHECK(truncate(k, 3).dim() == 2);
    const auto out = find_vector_outside(from(tail(1)), k);
    REQUIRE(out);
    CHECK_FALSE(k.contains(*out));
    CHECK_FALSE(find_vector_outside(k, from(tail(1))).has_value());
    CHECK_THROWS_AS(sum(v1, from(tail(1, Space::VStar))), SpecError);
}

TEST_CASE("gl perps") {
    const Subspace p = perp(from(tail(2)), Pairing::Gl);
    CHECK(p.space() == Space::VStar);
    CHECK(p == from(SubspaceDescriptor{Space::VStar, {e(1)}, std::nullopt, {}}));
    CHECK(perp(from(all_ones_kernel()), Pairing::Gl).is_zero());
    CHECK(perp(Subspace::zero(Space::V), Pairing::Gl).is_whole());
}

TEST_CASE("form perps") {
    const Subspace v1 = from(SubspaceDescriptor{Space::V, {e(1)}, std::nullopt, {}});
    const Subspace p = perp(v1, Pairing::Symplectic);
    CHECK(p.codim() == 1);
    CHECK(p.contains(e(1)));
    CHECK_FALSE(p.contains(e(2)));
    CHECK(p.contains(e(3)));
    CHECK(form_value(Pairing::Symplectic, e(2), e(1)) == -1);
    CHECK(form_value(Pairing::Symmetric, e(2), e(1)) == 1);
    CHECK(is_isotropic(v1, Pairing::Symplectic));
    CHECK(is_nondegenerate(from(SubspaceDescriptor{Space::V, {e(1), e(2)}, std::nullopt, {}}), Pairing::Symmetric));
    CHECK_THROWS_AS(perp(from(tail(1, Space::VStar)), Pairing::Symmetric), SpecError);
}

TEST_CASE("double perp closure") {
    CHECK(double_perp_closed(from(tail(2)), Pairing::Gl).closed);
    const ClosureCheck k = double_perp_closed(from(all_ones_kernel()), Pairing::Gl);
    CHECK_FALSE(k.closed);
    REQUIRE(k.witness);
    CHECK_FALSE(from(all_ones_kernel()).contains(*k.witness));
    CHECK(k.double_perp.is_whole());
    CHECK(double_perp_closed(Subspace::zero(Space::V), Pairing::Gl).closed);
}

TEST_CASE("Galois connection on random descriptors") {
    std::mt19937_64 rng(4242);
    const Pairing pairings[] = {Pairing::Gl, Pairing::Symmetric, Pairing::Symplectic};
    for (int i = 0; i < 200; ++i) {
        const Pairing p = pairings[i % 3];
        const Space s = (p == Pairing::Gl && i % 2) ? Space::VStar : Space::V;
        const Subspace w = from(testsupport::random_descriptor(rng, s));
        const Subspace u = from(testsupport::random_descriptor(rng, s));
        CAPTURE(w.str());
        const Subspace wp = perp(w, p);
        CHECK(includes(perp(wp, p), w));
        CHECK(perp(perp(wp, p), p) == wp);
        // perp reverses inclusion: W is inside W + U
        CHECK(includes(wp, perp(sum(w, u), p)));
        CHECK(perp(sum(w, u), p) == intersect(wp, perp(u, p)));
        // every vector of W pairs to zero with every sampled vector of W^perp
        const int m = std::max(w.support(), wp.support()) + 4;
        for (const FinSuppVec& x : testsupport::sample_vectors(w, m))
            for (const FinSuppVec& y : testsupport::sample_vectors(wp, m)) CHECK(testsupport::pair_by_hand(p, x, y) == 0);
    }
}

TEST_CASE("fixture subspaces load") {
    CHECK(load_subspace("codim1_kernel.json") == from(all_ones_kernel()));
    CHECK(load_subspace("codim1_kernel_dual.json").space() == Space::VStar);
    CHECK(load_subspace("tail_from2.json") == load_subspace("tail_from2_copy.json"));
    CHECK(load_subspace("span_v1_v4.json").dim() == 4);
    CHECK(load_subspace("codim2_kernel.json").codim() == 2);
}
