#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "recol/module.hpp"

using namespace recol;

TEST_CASE("A2 has the three-path basis") {
    auto a = fixtures::a2();
    CHECK(a->dim() == 3);
    // two trivial paths and the arrow
    int trivial = 0, len1 = 0;
    for (int b = 0; b < a->dim(); ++b) (a->len(b) == 0 ? trivial : len1)++;
    CHECK(trivial == 2);
    CHECK(len1 == 1);
}

TEST_CASE("loop with x^2 = 0 has basis {e, x}") {
    auto a = fixtures::loop2();
    CHECK(a->dim() == 2);
    const int x = a->arrow_index(0);
    CHECK(a->mult(x, x) == std::vector<std::uint32_t>(2, 0));
}

TEST_CASE("A3 path count") {
    auto a = fixtures::a3();
    CHECK(a->dim() == 6);  // e1 e2 e3 a b ab
}

TEST_CASE("unbounded cycle is rejected") {
    Quiver q;
    q.vertex_names = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    CHECK_THROWS_WITH(build_algebra(q, FieldSpec::of(2), {}),
                      Catch::Matchers::ContainsSubstring("infinite-dimensional"));
}

TEST_CASE("non-admissible relation is rejected") {
    Quiver q;
    q.vertex_names = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    Relation r = {RelationTerm{1, {0}}};  // a single arrow
    CHECK_THROWS(build_algebra(q, FieldSpec::of(2), {r}));
}

TEST_CASE("commutativity square relation") {
    // 1 -a-> 2 -c-> 4, 1 -b-> 3 -d-> 4, relation ac - bd
    Quiver q;
    q.vertex_names = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"c", 1, 3}, {"b", 0, 2}, {"d", 2, 3}};
    Relation r = {RelationTerm{1, {0, 1}}, RelationTerm{1, {2, 3}}};  // ac + bd; over GF(2) same as ac - bd
    auto alg = build_algebra(q, FieldSpec::of(2), {r});
    // paths: 4 trivial + 4 arrows + the single surviving length-2 class
    CHECK(alg->dim() == 9);
}

TEST_CASE("opposite algebra has the same dimension") {
    for (auto alg : {fixtures::a2(), fixtures::a3(), fixtures::loop2(), fixtures::prod()}) {
        auto op = opposite_algebra(*alg);
        CHECK(op->dim() == alg->dim());
    }
}

TEST_CASE("standard modules over A2") {
    auto a = fixtures::a2();
    auto sm = standard_modules(a);
    CHECK(sm.projectives[0].dims == std::vector<int>{1, 1});  // P1
    CHECK(sm.projectives[1].dims == std::vector<int>{0, 1});  // P2 = S2
    CHECK(sm.injectives[0].dims == std::vector<int>{1, 0});   // I1 = S1
    CHECK(sm.injectives[1].dims == std::vector<int>{1, 1});   // I2
    for (auto& list : {sm.simples, sm.projectives, sm.injectives})
        for (const auto& m : list) CHECK(module_is_valid(m));
}

TEST_CASE("loop algebra is self-injective") {
    auto a = fixtures::loop2();
    auto sm = standard_modules(a);
    CHECK(sm.projectives[0].dims == std::vector<int>{2});
    CHECK(sm.injectives[0].dims == std::vector<int>{2});
    CHECK(sm.simples[0].dims == std::vector<int>{1});
    CHECK(module_is_valid(sm.projectives[0]));
    CHECK(module_is_valid(sm.injectives[0]));
}

TEST_CASE("algebra dimension equals the sum of projective dimensions") {
    for (auto alg : {fixtures::a2(), fixtures::a3(), fixtures::loop2(), fixtures::prod()}) {
        int total = 0;
        for (int v = 0; v < alg->quiver.vertex_count(); ++v)
            total += projective_module(alg, v).total_dim();
        CHECK(total == alg->dim());
    }
}
