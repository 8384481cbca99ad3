#include "support.hpp"

#include <doctest.h>

using namespace lielimits;

namespace {

const std::vector<SimpleAlgebra> kSmall = {
    SimpleAlgebra(Series::A, 1), SimpleAlgebra(Series::A, 2), SimpleAlgebra(Series::A, 3), SimpleAlgebra(Series::B, 2),
    SimpleAlgebra(Series::B, 3), SimpleAlgebra(Series::C, 2), SimpleAlgebra(Series::C, 3), SimpleAlgebra(Series::D, 4),
    SimpleAlgebra(Series::D, 5)};

}  // namespace

TEST_CASE("algebra literals and rank floors") {
    CHECK(SimpleAlgebra::parse("A3").name() == "A3");
    CHECK(SimpleAlgebra::parse("B12").natural_dimension() == 25);
    CHECK(SimpleAlgebra::parse("C2").natural_dimension() == 4);
    CHECK(SimpleAlgebra::parse("D4").dimension() == 28);
    CHECK_THROWS_AS(SimpleAlgebra::parse("D3"), DomainError);
    CHECK_THROWS_AS(SimpleAlgebra::parse("D2"), DomainError);
    CHECK_THROWS_AS(SimpleAlgebra::parse("B1"), DomainError);
    CHECK_THROWS_AS(SimpleAlgebra::parse("A0"), DomainError);
    CHECK_THROWS_AS(SimpleAlgebra::parse("E6"), ParseError);
    CHECK_THROWS_AS(SimpleAlgebra::parse("A"), ParseError);
}

TEST_CASE("dominant weights validate length and sign") {
    const SimpleAlgebra a2(Series::A, 2);
    CHECK_THROWS_AS(DominantWeight(a2, {1}), DimensionError);
    CHECK_THROWS_AS(DominantWeight(a2, {1, -1}), DomainError);
    CHECK(DominantWeight::parse(a2, "1,0") == DominantWeight(a2, {1, 0}));
    CHECK_THROWS_AS(DominantWeight::parse(a2, "1,x"), ParseError);
    CHECK(DominantWeight::rho(a2).labels() == Labels{1, 1});
}

TEST_CASE("weight form values") {
    const SimpleAlgebra a1(Series::A, 1), a2(Series::A, 2);
    CHECK(weight_form(a1, {1}, {1}) == Rational(1, 2));
    CHECK(weight_form(a2, {1, 0}, {1, 0}) == Rational(2, 3));
    for (const SimpleAlgebra& a : kSmall) {
        const Labels zero(static_cast<std::size_t>(a.rank()), 0);
        CHECK(weight_form(a, zero, DominantWeight::rho(a).labels()) == 0);
    }
    CHECK_THROWS_AS(weight_form(a2, {1}, {1, 0}), DimensionError);
}

TEST_CASE("gram matrix is dual to the simple coroots") {
    for (const SimpleAlgebra& a : kSmall) {
        CAPTURE(a.name());
        const RootSystem& rs = root_system(a);
        const int n = a.rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational pairing = 0;
                for (int k = 0; k < n; ++k) pairing += rs.gram()[i][k] * rs.cartan()[j][k];
                pairing /= rs.half_norms()[j];
                CHECK(pairing == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("long roots have squared length two") {
    for (const SimpleAlgebra& a : kSmall) {
        CAPTURE(a.name());
        for (const PositiveRoot& r : root_system(a).positive_roots()) {
            const Rational norm = weight_form(a, r.weight, r.weight);
            CHECK(norm == (r.is_long ? Rational(2) : Rational(1)));
        }
    }
}

TEST_CASE("positive roots count and sum to twice rho") {
    CHECK(positive_roots(SimpleAlgebra(Series::A, 2)).size() == 3);
    CHECK(positive_roots(SimpleAlgebra(Series::B, 2)).size() == 4);
    for (const SimpleAlgebra& a : kSmall) {
        CAPTURE(a.name());
        const auto roots = positive_roots(a);
        CHECK(static_cast<int>(roots.size()) == a.positive_root_count());
        Labels sum(static_cast<std::size_t>(a.rank()), 0);
        for (const Labels& r : roots)
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r[i];
        for (int s : sum) CHECK(s == 2);
    }
}

TEST_CASE("Weyl dimension examples") {
    CHECK(dimension(SimpleAlgebra(Series::A, 1), DominantWeight(SimpleAlgebra(Series::A, 1), {1})) == 2);
    CHECK(dimension(SimpleAlgebra(Series::A, 2), DominantWeight(SimpleAlgebra(Series::A, 2), {1, 1})) == 8);
    CHECK(dimension(SimpleAlgebra(Series::B, 2), DominantWeight(SimpleAlgebra(Series::B, 2), {0, 1})) == 4);
    for (const SimpleAlgebra& a : kSmall) {
        CHECK(dimension(a, DominantWeight::natural(a)) == a.natural_dimension());
        CHECK(dimension(a, DominantWeight::zero(a)) == 1);
    }
}

TEST_CASE("Weyl dimension matches the Freudenthal weight count") {
    for (const SimpleAlgebra& a : kSmall) {
        CAPTURE(a.name());
        for (const DominantWeight& w : dominant_weights_up_to(a, 200)) {
            CAPTURE(w.str());
            CHECK(dimension(a, w) == oracle::total_count(oracle::freudenthal(a, w)));
        }
    }
}

TEST_CASE("dual weights") {
    const SimpleAlgebra a2(Series::A, 2), c3(Series::C, 3), d4(Series::D, 4), d5(Series::D, 5);
    CHECK(dual_weight(a2, DominantWeight(a2, {1, 0})).labels() == Labels{0, 1});
    CHECK(dual_weight(c3, DominantWeight(c3, {1, 0, 0})).labels() == Labels{1, 0, 0});
    CHECK(dual_weight(d4, DominantWeight(d4, {0, 0, 1, 0})).labels() == Labels{0, 0, 1, 0});
    CHECK(dual_weight(d5, DominantWeight(d5, {0, 0, 0, 1, 0})).labels() == Labels{0, 0, 0, 0, 1});
    // dual of dual is the identity, and dimensions agree
    for (const SimpleAlgebra& a : kSmall)
        for (const DominantWeight& w : dominant_weights_up_to(a, 100)) {
            const DominantWeight d = dual_weight(a, w);
            CHECK(dual_weight(a, d) == w);
            CHECK(dimension(a, d) == dimension(a, w));
        }
}

TEST_CASE("root system cache returns one object per algebra") {
    const SimpleAlgebra b3(Series::B, 3);
    CHECK(&root_system(b3) == &root_system(SimpleAlgebra::parse("B3")));
}
