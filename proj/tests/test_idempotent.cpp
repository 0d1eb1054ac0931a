#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "recol/idempotent.hpp"

using namespace recol;

namespace {

Presented quotient_presented(AlgebraPtr a, std::vector<int> vs) {
    auto e = VertexIdempotent::of(a, std::move(vs));
    return present_as_bound_quiver(idempotent_quotient_abstract(*a, e).abs);
}

Presented corner_presented(AlgebraPtr a, std::vector<int> vs) {
    auto e = VertexIdempotent::of(a, std::move(vs));
    return present_as_bound_quiver(corner_abstract(*a, e).abs);
}

}  // namespace

TEST_CASE("A2 quotients and corners at single vertices") {
    auto a = fixtures::a2();
    // AeA = span{e2, a} for E = {2}: the quotient is k at vertex 1
    auto q2 = quotient_presented(a, {1});
    CHECK(q2.alg->dim() == 1);
    CHECK(q2.alg->quiver.vertex_names == std::vector<std::string>{"1"});
    auto q1 = quotient_presented(a, {0});
    CHECK(q1.alg->dim() == 1);
    CHECK(q1.alg->quiver.vertex_names == std::vector<std::string>{"2"});
    CHECK(corner_presented(a, {1}).alg->dim() == 1);
    CHECK(corner_presented(a, {0}).alg->dim() == 1);
}

TEST_CASE("quotient by all vertices is the zero algebra") {
    auto a = fixtures::a2();
    auto q = quotient_presented(a, {0, 1});
    CHECK(q.alg->is_zero_algebra());
    CHECK(q.alg->dim() == 0);
}

TEST_CASE("dimension additivity dim A = dim AeA + dim A/AeA") {
    for (auto a : {fixtures::a2(), fixtures::a3(), fixtures::loop2(), fixtures::prod()}) {
        const int nv = a->quiver.vertex_count();
        for (int mask = 1; mask < (1 << nv); ++mask) {
            std::vector<int> vs;
            for (int v = 0; v < nv; ++v)
                if (mask & (1 << v)) vs.push_back(v);
            auto e = VertexIdempotent::of(a, vs);
            auto ideal = two_sided_ideal_of_idempotent(*a, e);
            auto quo = idempotent_quotient_abstract(*a, e);
            CHECK(static_cast<int>(ideal.dim()) + quo.abs.dim == a->dim());
        }
    }
}

TEST_CASE("corner of A3 at the two ends is an A2-shaped algebra") {
    auto a = fixtures::a3();
    auto c = corner_presented(a, {0, 2});
    CHECK(c.alg->dim() == 3);
    CHECK(c.alg->quiver.arrow_count() == 1);  // the class of the length-2 path
    CHECK(c.alg->quiver.vertex_names == std::vector<std::string>{"1", "3"});
}

TEST_CASE("A3 quotient at the middle vertex is k x k") {
    auto a = fixtures::a3();
    auto q = quotient_presented(a, {1});
    CHECK(q.alg->dim() == 2);
    CHECK(q.alg->quiver.arrow_count() == 0);
}

TEST_CASE("PROD splits off its isolated factor") {
    auto a = fixtures::prod();
    auto q = quotient_presented(a, {2});
    CHECK(q.alg->dim() == 3);
    CHECK(q.alg->quiver.arrow_count() == 1);  // an A2 copy
    auto c = corner_presented(a, {2});
    CHECK(c.alg->dim() == 1);
}

TEST_CASE("corner of the loop algebra at its vertex is the whole algebra") {
    auto a = fixtures::loop2();
    auto c = corner_presented(a, {0});
    CHECK(c.alg->dim() == 2);
    CHECK(c.alg->quiver.arrow_count() == 1);
    CHECK(c.alg->relations.size() >= 1);  // the loop squares to zero
}

TEST_CASE("presentation isomorphism respects multiplication") {
    auto a = fixtures::a3();
    auto e = VertexIdempotent::of(a, {0, 2});
    auto abs = corner_abstract(*a, e).abs;
    auto pres = present_as_bound_quiver(abs);
    // iota(x * y) = iota(x) * iota(y) over all presented basis pairs
    const int d = pres.alg->dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            std::vector<std::uint32_t> xi(d, 0), xj(d, 0);
            xi[i] = 1;
            xj[j] = 1;
            auto lhs = pres.to_abstract(pres.alg->mult(i, j));
            auto rhs = abs.mult_vec(pres.to_abstract(xi), pres.to_abstract(xj));
            CHECK(lhs == rhs);
        }
    }
}
