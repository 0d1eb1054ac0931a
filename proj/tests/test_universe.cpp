#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "recol/universe.hpp"

using namespace recol;

TEST_CASE("A2 universe at dmax 2") {
    auto uni = enumerate_indecomposables(fixtures::a2(), 2);
    REQUIRE(uni->size() == 3);  // S1, S2, P1
    CHECK(uni->names[0] == "D0,1#0");
    CHECK(uni->names[1] == "D1,0#0");
    CHECK(uni->names[2] == "D1,1#0");
    for (const auto& m : uni->classes) CHECK(is_indecomposable(m));
}

TEST_CASE("loop universe at dmax 2") {
    auto uni = enumerate_indecomposables(fixtures::loop2(), 2);
    REQUIRE(uni->size() == 2);  // S and the regular module
    CHECK(uni->classes[0].total_dim() == 1);
    CHECK(uni->classes[1].total_dim() == 2);
}

TEST_CASE("A3 universe at dmax 3 consists of the six interval modules") {
    auto uni = enumerate_indecomposables(fixtures::a3(), 3);
    REQUIRE(uni->size() == 6);
    std::set<std::vector<int>> dims;
    for (const auto& m : uni->classes) dims.insert(m.dims);
    std::set<std::vector<int>> expect = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                         {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
    CHECK(dims == expect);
}

TEST_CASE("PROD universe at dmax 3 is the A2 universe plus the extra simple") {
    auto uni = enumerate_indecomposables(fixtures::prod(), 3);
    REQUIRE(uni->size() == 4);
}

TEST_CASE("class lookup and decomposition into classes") {
    auto a = fixtures::a2();
    auto uni = enumerate_indecomposables(a, 2);
    auto sm = standard_modules(a);
    const int p1 = uni->class_of(sm.projectives[0]);
    const int s2 = uni->class_of(sm.simples[1]);
    REQUIRE(p1 >= 0);
    REQUIRE(s2 >= 0);
    Module m = direct_sum(a, {sm.projectives[0], sm.simples[1], sm.simples[1]}).sum;
    auto classes = uni->decompose_into_classes(m);
    std::vector<int> expect = {p1, s2, s2};
    std::sort(expect.begin(), expect.end());
    CHECK(classes == expect);
}

TEST_CASE("names resolve back to indices") {
    auto uni = enumerate_indecomposables(fixtures::a3(), 3);
    for (int i = 0; i < uni->size(); ++i) CHECK(uni->index_of_name(uni->names[i]) == i);
    CHECK_THROWS(uni->index_of_name("D9,9,9#0"));
}

TEST_CASE("universe over the zero algebra is empty") {
    Quiver q;  // no vertices
    auto z = build_algebra(q, FieldSpec::of(2), {});
    auto uni = enumerate_indecomposables(z, 3);
    CHECK(uni->size() == 0);
}
