#include "support.hpp"

#include "lielimits/socle.hpp"

#include <doctest.h>

using namespace lielimits;
using testsupport::load_system;

namespace {

ExtendedDim fin(std::int64_t v) { return ExtendedDim{ExtendedDim::Kind::Finite, v, {}}; }

bool same_verdict(const ExtendedDim& a, const ExtendedDim& b) { return a.kind == b.kind && a.value == b.value; }

struct Loaded {
    SystemSpec spec;
    BratteliGraph graph;
    std::vector<Constituent> cs;
};

Loaded load(const char* name) {
    Loaded l{load_system(name), {}, {}};
    l.graph = compute_labels(l.spec);
    l.cs = decompose(l.graph);
    return l;
}

}  // namespace

TEST_CASE("window judgement") {
    CHECK(same_verdict(judge_window({4, 5, 5, 5}), fin(5)));
    CHECK(judge_window({1, 2, 3}).kind == ExtendedDim::Kind::Countable);
    const ExtendedDim u = judge_window({3, 1, 2});
    CHECK(u.kind == ExtendedDim::Kind::Undetermined);
    CHECK(u.value == 1);
    CHECK(judge_window({1, 2, 3, 4}).evidence == std::vector<std::int64_t>{2, 3, 4});
    CHECK(to_string(fin(1)) == "finite(1)");
}

TEST_CASE("multiplicities of omega and omega*") {
    const Loaded s2 = load("S2.json");
    for (const Constituent& c : s2.cs) CHECK(multiplicities(s2.spec, s2.graph, c) == Multiplicities{1, 0});

    const Loaded s1 = load("S1.json");
    CHECK(multiplicities(s1.spec, s1.graph, s1.cs[0]) == Multiplicities{1, 0});

    const Loaded s3 = load("S3.json");
    CHECK_THROWS_AS(multiplicities(s3.spec, s3.graph, s3.cs[0]), DomainError);
}

TEST_CASE("multiplicities of diagonal and dual-pair ambients") {
    // A_n inside A_{2n+1} via omega + omega, then via omega + omega*
    for (int kind = 1; kind <= 2; ++kind) {
        SystemSpec spec;
        for (int n = 2; n <= 5; ++n) {
            const SimpleAlgebra a(Series::A, n);
            const SemisimpleAlgebra s = SemisimpleAlgebra::simple(a);
            std::vector<testsupport::Piece> ps = {{0, 1, 1}, {0, kind, 1}};
            if (kind == 1) ps = {{0, 1, 2}};
            spec.levels.push_back(LevelSpec{s, SimpleAlgebra(Series::A, 2 * n + 1), testsupport::pieces_module(s, ps), std::nullopt});
            if (n > 2) {
                const SemisimpleAlgebra below = SemisimpleAlgebra::simple(SimpleAlgebra(Series::A, n - 1));
                spec.edges.push_back({{testsupport::pieces_module(below, {{0, 1, 1}, {-1, 0, 1}})}});
            }
        }
        const BratteliGraph g = compute_labels(spec);
        const auto cs = decompose(g);
        REQUIRE(cs.size() == 1);
        const Multiplicities m = multiplicities(spec, g, cs[0]);
        if (kind == 1) CHECK(m == Multiplicities{2, 0});
        else CHECK(m == Multiplicities{1, 1});
    }
}

TEST_CASE("trivial parts") {
    const Loaded e4 = load("example4.json");
    const TrivialDims t4 = trivial_dims(e4.spec, e4.graph, e4.cs[0]);
    CHECK(same_verdict(t4.natural, fin(1)));
    CHECK(same_verdict(t4.conatural, fin(0)));

    const Loaded s2 = load("S2.json");
    for (const Constituent& c : s2.cs) {
        const TrivialDims t = trivial_dims(s2.spec, s2.graph, c);
        CHECK(t.natural.kind == ExtendedDim::Kind::Countable);
        CHECK(t.conatural.kind == ExtendedDim::Kind::Countable);
    }

    const Loaded s1 = load("S1.json");
    const TrivialDims t1 = trivial_dims(s1.spec, s1.graph, s1.cs[0]);
    CHECK(same_verdict(t1.natural, fin(0)));
    CHECK(same_verdict(t1.conatural, fin(0)));
}

TEST_CASE("socle reports") {
    const Loaded e3 = load("example3.json");
    const SocleReport r3 = socle_report(e3.spec, e3.graph);
    CHECK(same_verdict(r3.quotient, fin(1)));
    CHECK(r3.socle_dim_top == 8);
    CHECK(r3.infinite.empty());
    // every ambient summand of the top level is accounted for: finite part or trivial
    std::int64_t accounted = r3.socle_dim_top + r3.quotient.value;
    CHECK(accounted == e3.spec.levels.back().ambient.natural_dimension());

    const Loaded s1 = load("S1.json");
    const SocleReport r1 = socle_report(s1.spec, s1.graph);
    CHECK(same_verdict(r1.quotient, fin(0)));

    const Loaded s2 = load("S2.json");
    const SocleReport r2 = socle_report(s2.spec, s2.graph);
    CHECK(same_verdict(r2.quotient, fin(0)));
    REQUIRE(r2.infinite.size() == 2);
    for (const InfinitePart& p : r2.infinite) CHECK(p.mult.k == 1);
}

TEST_CASE("depth of the socle filtration is at most two") {
    // V(g_top) splits exactly into omega-copies, omega*-copies, finite
    // isotypic parts and trivial lines.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const SystemSpec spec = testsupport::random_diagonal_system(rng, 5, 3, 30);
        const BratteliGraph g = compute_labels(spec);
        std::vector<Constituent> cs;
        try {
            cs = decompose(g);
        } catch (const InsufficientPrefix&) {
            continue;
        }
        const SocleReport r = socle_report(spec, g);
        std::int64_t total = r.socle_dim_top;
        total += r.quotient.evidence.empty() ? r.quotient.value : r.quotient.evidence.back();
        CHECK(total == spec.levels.back().ambient.natural_dimension());
    }
}

TEST_CASE("standard invariants") {
    const Loaded e4 = load("example4.json");
    const StandardInvariants inv = standard_invariants(e4.spec, e4.graph, {{0}});
    REQUIRE(inv.subsets.size() == 1);
    const SubsetInvariants& s = inv.subsets[0];
    CHECK(same_verdict(s.natural_trivial, fin(1)));
    CHECK(same_verdict(s.conatural_trivial, fin(0)));
    CHECK(same_verdict(s.natural_quotient, fin(1)));
    CHECK(same_verdict(s.conatural_quotient, fin(0)));

    const Loaded s2 = load("S2.json");
    const StandardInvariants all = standard_invariants(s2.spec, s2.graph, {{0, 1}});
    CHECK(same_verdict(all.subsets[0].natural_trivial, fin(0)));
    CHECK(all.multiplicities.at(0) == Multiplicities{1, 0});

    const StandardInvariants defaults = standard_invariants(s2.spec, s2.graph);
    CHECK(defaults.subsets.size() == 3);

    CHECK_THROWS_AS(standard_invariants(s2.spec, s2.graph, {{5}}), DomainError);
}
