#include "support.hpp"

#include <doctest.h>

using namespace lielimits;
using testsupport::omega_labels;
using testsupport::omega_star_labels;

namespace {

SimpleAlgebra alg(const char* s) { return SimpleAlgebra::parse(s); }
DominantWeight wt(const char* a, Labels l) { return DominantWeight(alg(a), std::move(l)); }

Embedding simple_embedding(const char* src, const char* tgt, std::vector<std::pair<Labels, std::int64_t>> parts) {
    const SemisimpleAlgebra s = SemisimpleAlgebra::simple(alg(src));
    ModuleDecomposition d{s, {}};
    for (auto& [l, m] : parts) d.summands.push_back({{DominantWeight(alg(src), l)}, m});
    return Embedding(s, alg(tgt), d);
}

Integer a1_closed_form(long d) { return Integer(d * (d * d - 1) / 6); }

}  // namespace

TEST_CASE("index of irreducible modules") {
    CHECK(index_of_irrep(alg("A1"), wt("A1", {1})) == 1);
    CHECK(index_of_irrep(alg("A1"), wt("A1", {2})) == 4);
    CHECK(index_of_irrep(alg("A2"), wt("A2", {1, 1})) == 6);
    CHECK(index_of_irrep(alg("B3"), wt("B3", {1, 0, 0})) == 2);
    CHECK(index_of_irrep(alg("C3"), wt("C3", {0, 0, 0})) == 0);
    for (long d = 1; d <= 20; ++d) CHECK(index_of_irrep(alg("A1"), wt("A1", {static_cast<int>(d - 1)})) == a1_closed_form(d));
}

TEST_CASE("adjoint module index equals twice the dual Coxeter number") {
    // h^vee: A_n n+1, B_n 2n-1, C_n n+1, D_n 2n-2
    const std::vector<std::pair<const char*, Labels>> adj = {
        {"A3", {1, 0, 1}}, {"B3", {0, 1, 0}}, {"C3", {2, 0, 0}}, {"D4", {0, 1, 0, 0}}};
    const std::vector<int> hvee = {4, 5, 4, 6};
    for (std::size_t i = 0; i < adj.size(); ++i) {
        const SimpleAlgebra a = alg(adj[i].first);
        const DominantWeight w(a, adj[i].second);
        REQUIRE(dimension(a, w) == a.dimension());
        CHECK(index_of_irrep(a, w) == 2 * hvee[i]);
    }
}

TEST_CASE("natural module index table") {
    CHECK(natural_module_index(alg("A4")) == 1);
    CHECK(natural_module_index(alg("B2")) == 2);
    CHECK(natural_module_index(alg("C5")) == 1);
    CHECK(natural_module_index(alg("D6")) == 2);
}

TEST_CASE("index of a module on one factor") {
    const SemisimpleAlgebra aa({alg("A1"), alg("A1")});
    ModuleDecomposition d{aa, {{{wt("A1", {1}), wt("A1", {1})}, 1}}};
    CHECK(index_of_module(d, 0) == 2);
    CHECK(index_of_module(d, 1) == 2);
    CHECK_THROWS_AS(index_of_module(d, 2), DomainError);

    const SemisimpleAlgebra a1 = SemisimpleAlgebra::simple(alg("A1"));
    ModuleDecomposition e{a1, {{{wt("A1", {2})}, 1}, {{wt("A1", {0})}, 1}}};
    CHECK(index_of_module(e, 0) == 4);
    ModuleDecomposition z{aa, {{{wt("A1", {0}), wt("A1", {0})}, 3}}};
    CHECK(index_of_module(z, 0) == 0);
}

TEST_CASE("tensor product index agrees with the index of its decomposition") {
    std::mt19937_64 rng(11);
    for (const char* name : {"A1", "A2"}) {
        const SimpleAlgebra a = alg(name);
        const auto pool = dominant_weights_up_to(a, 15);
        for (int trial = 0; trial < 25; ++trial) {
            const DominantWeight& l = pool[rng() % pool.size()];
            const DominantWeight& m = pool[rng() % pool.size()];
            CAPTURE(l.str());
            CAPTURE(m.str());
            const Integer by_rule = dimension(a, m) * index_of_irrep(a, l) + dimension(a, l) * index_of_irrep(a, m);
            Integer by_parts = 0;
            for (const Summand& s : oracle::tensor_decompose(a, l, m).summands)
                by_parts += s.multiplicity * index_of_irrep(a, s.weights[0]);
            CHECK(by_rule == by_parts);
        }
    }
}

TEST_CASE("index is monotone along dominant order") {
    for (const char* name : {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "D4"}) {
        const SimpleAlgebra a = alg(name);
        CAPTURE(name);
        const auto pool = dominant_weights_up_to(a, 500);
        std::map<Labels, Integer> idx;
        for (const DominantWeight& w : pool) idx[w.labels()] = index_of_irrep(a, w);
        for (const DominantWeight& w : pool) {
            if (w.is_zero()) continue;
            for (int i = 0; i < a.rank(); ++i) {
                Labels up = w.labels();
                up[static_cast<std::size_t>(i)] += 1;
                if (auto it = idx.find(up); it != idx.end()) CHECK(it->second >= idx[w.labels()]);
            }
        }
    }
}

TEST_CASE("embedding indices") {
    CHECK(embedding_index(simple_embedding("A3", "A3", {{{1, 0, 0}, 1}})) == std::vector<std::int64_t>{1});
    CHECK(embedding_index(simple_embedding("A1", "A3", {{{1}, 2}})) == std::vector<std::int64_t>{2});
    CHECK(embedding_index(simple_embedding("B3", "A6", {{{1, 0, 0}, 1}})) == std::vector<std::int64_t>{2});
    CHECK(embedding_index(simple_embedding("B3", "B3", {{{1, 0, 0}, 1}})) == std::vector<std::int64_t>{1});
    CHECK(embedding_index(simple_embedding("C2", "A3", {{{1, 0}, 1}})) == std::vector<std::int64_t>{1});
}

TEST_CASE("embedding validation") {
    CHECK_THROWS_AS(simple_embedding("A1", "A3", {{{1}, 1}}).validate(), SpecError);
    CHECK_THROWS_AS(simple_embedding("A2", "D4", {{{1, 0}, 1}, {{0, 0}, 5}}).validate(), SpecError);
    CHECK_THROWS_AS(embedding_index(simple_embedding("A1", "A3", {{{1}, 1}})), SpecError);
    CHECK_NOTHROW(simple_embedding("A2", "D4", {{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 2}}).validate());
}

TEST_CASE("embedding classes") {
    CHECK(classify_embedding(simple_embedding("A5", "A9", {{{1, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 0}, 4}})).kind ==
          EmbeddingKind::Standard);
    const EmbeddingClass dual = classify_embedding(simple_embedding("A5", "A5", {{{0, 0, 0, 0, 1}, 1}}));
    CHECK(dual.kind == EmbeddingKind::Standard);
    const EmbeddingClass d = classify_embedding(simple_embedding("A5", "A11", {{{1, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 1}, 1}}));
    CHECK(d == EmbeddingClass{EmbeddingKind::Diagonal, 1, 1, 0});
    CHECK(to_string(d) == "Diagonal(1,1,0)");
    CHECK(classify_embedding(simple_embedding("A1", "A2", {{{2}, 1}})).kind == EmbeddingKind::General);
    const EmbeddingClass so = classify_embedding(simple_embedding("D5", "D6", {{{1, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 0}, 2}}));
    CHECK(so == EmbeddingClass{EmbeddingKind::Standard, 1, 0, 2});

    const SemisimpleAlgebra aa({alg("A1"), alg("A1")});
    Embedding two(aa, alg("A3"), ModuleDecomposition{aa, {{{wt("A1", {1}), wt("A1", {1})}, 1}}});
    CHECK_THROWS_AS(classify_embedding(two), DomainError);
}

TEST_CASE("smallest non-diagonal index") {
    CHECK(min_nondiagonal_index(alg("A1"), 10).index == 4);
    const auto a2 = min_nondiagonal_index(alg("A2"), 10);
    CHECK(a2.index == 5);
    CHECK((a2.weight.labels() == Labels{2, 0} || a2.weight.labels() == Labels{0, 2}));
    // the second exterior power of C^4 has dimension 6
    const auto a3 = min_nondiagonal_index(alg("A3"), 6);
    CHECK(a3.weight.labels() == Labels{0, 1, 0});
    CHECK(a3.index == 2);
    CHECK_THROWS_WITH_AS(min_nondiagonal_index(alg("A3"), 5), doctest::Contains("bound too small"), DomainError);
}

TEST_CASE("composite index through a direct sum") {
    const SemisimpleAlgebra a1 = SemisimpleAlgebra::simple(alg("A1"));
    const SemisimpleAlgebra aa({alg("A1"), alg("A1")});
    const Embedding id(a1, alg("A1"), ModuleDecomposition{a1, {{{wt("A1", {1})}, 1}}});
    const std::vector<Embedding> diag = {id, id};

    Embedding sum(aa, alg("A3"), ModuleDecomposition{aa, {{{wt("A1", {1}), wt("A1", {0})}, 1}, {{wt("A1", {0}), wt("A1", {1})}, 1}}});
    const ComposeResult r1 = compose_index(diag, sum);
    CHECK(r1.sum_side == 2);
    CHECK(r1.direct_side == 2);

    Embedding prod(aa, alg("A3"), ModuleDecomposition{aa, {{{wt("A1", {1}), wt("A1", {1})}, 1}}});
    const ComposeResult r2 = compose_index(diag, prod);
    CHECK(r2.sum_side == 4);
    CHECK(r2.direct_side == 4);
    CHECK(r2.route == "tensor");
    REQUIRE(r2.composite);
    CHECK(r2.composite->normalized().summands.size() == 2);

    // trivial second factor: only k_1 contributes
    Embedding only_first(aa, alg("A2"), ModuleDecomposition{aa, {{{wt("A1", {1}), wt("A1", {0})}, 1}, {{wt("A1", {0}), wt("A1", {0})}, 1}}});
    const ComposeResult r3 = compose_index(diag, only_first);
    CHECK(r3.sum_side == 1);
    CHECK(r3.direct_side == 1);

    // mismatched middle algebra
    const std::vector<Embedding> wrong = {id};
    CHECK_THROWS_AS(compose_index(wrong, sum), SpecError);
}

TEST_CASE("seeded chains satisfy the sum formula") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) {
        const auto c = testsupport::random_chain(rng);
        const ComposeResult r = compose_index(c.first, c.second);
        CHECK(r.sum_side == c.expected_sum);
        CHECK(r.direct_side == c.expected_sum);
    }
}
