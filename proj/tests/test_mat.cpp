#include <catch2/catch_amalgamated.hpp>

#include "recol/mat.hpp"

using namespace recol;

static Mat mat2(FieldSpec f, std::size_t r, std::size_t c, std::vector<std::uint32_t> e) {
    return Mat::from_rows(r, c, f, std::move(e));
}

TEST_CASE("rref_solve on the zero map") {
    auto f = FieldSpec::of(2);
    Mat a(2, 2, f);
    auto sol = rref_solve(a);
    CHECK(sol.rank == 0);
    CHECK(sol.kernel_basis.size() == 2);
}

TEST_CASE("rref_solve identity with rhs") {
    auto f = FieldSpec::of(5);
    Mat a = Mat::identity(3, f);
    Mat b = Mat::col_vector(f, {1, 2, 3});
    auto sol = rref_solve(a, b);
    CHECK(sol.rank == 3);
    CHECK(sol.kernel_basis.empty());
    REQUIRE(sol.particular);
    CHECK(*sol.particular == b);
}

TEST_CASE("rank-1 all-ones matrix over GF(2)") {
    // hand elimination: rows coincide, kernel spanned by (1,1)
    auto f = FieldSpec::of(2);
    Mat a = mat2(f, 2, 2, {1, 1, 1, 1});
    auto sol = rref_solve(a);
    CHECK(sol.rank == 1);
    REQUIRE(sol.kernel_basis.size() == 1);
    CHECK(sol.kernel_basis[0] == Mat::col_vector(f, {1, 1}));
}

TEST_CASE("invert identity and involutions") {
    auto f = FieldSpec::of(2);
    CHECK(*invert(Mat::identity(2, f)) == Mat::identity(2, f));
    Mat swap = mat2(f, 2, 2, {0, 1, 1, 0});
    CHECK(*invert(swap) == swap);
    Mat u = mat2(f, 2, 2, {1, 1, 0, 1});
    auto uinv = invert(u);
    REQUIRE(uinv);
    CHECK((u * *uinv).is_identity());
    CHECK(*uinv == u);  // unipotent of order 2 in characteristic 2
}

TEST_CASE("singular matrices have no inverse") {
    auto f = FieldSpec::of(3);
    Mat a = mat2(f, 2, 2, {1, 2, 2, 4 % 3});
    CHECK(!invert(a));
}

TEST_CASE("rank-nullity across random-ish small matrices") {
    auto f = FieldSpec::of(3);
    // deterministic sweep over all 2x3 matrices with entries in {0,1,2}
    for (int code = 0; code < 729; ++code) {
        int c = code;
        std::vector<std::uint32_t> e(6);
        for (auto& x : e) {
            x = c % 3;
            c /= 3;
        }
        Mat a = mat2(f, 2, 3, e);
        auto sol = rref_solve(a);
        CHECK(sol.rank + sol.kernel_basis.size() == 3);
        for (const auto& k : sol.kernel_basis) CHECK((a * k).is_zero());
    }
}

TEST_CASE("solutions are exact") {
    auto f = FieldSpec::of(5);
    Mat a = mat2(f, 3, 2, {1, 2, 3, 4, 0, 1});
    Mat x = Mat::col_vector(f, {2, 3});
    Mat b = a * x;
    auto sol = rref_solve(a, b);
    REQUIRE(sol.particular);
    CHECK(a * *sol.particular == b);
}

TEST_CASE("inconsistent system has no particular solution") {
    auto f = FieldSpec::of(2);
    Mat a = mat2(f, 2, 1, {0, 0});
    Mat b = Mat::col_vector(f, {1, 0});
    auto sol = rref_solve(a, b);
    CHECK(!sol.particular);
}

TEST_CASE("RowSpan membership and coordinates") {
    auto f = FieldSpec::of(2);
    RowSpan s(3, f);
    CHECK(s.insert({1, 1, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK(!s.insert({1, 0, 1}));  // sum of the two
    CHECK(s.dim() == 2);
    CHECK(s.contains({1, 0, 1}));
    CHECK(!s.contains({0, 0, 1}));
    CHECK(s.free_columns().size() == 1);
}
