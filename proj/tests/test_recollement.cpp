#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "recol/axioms.hpp"

using namespace recol;

namespace {

Recollement rec(AlgebraPtr a, std::vector<int> vs) {
    return build_recollement(a, VertexIdempotent::of(a, std::move(vs)));
}

}  // namespace

TEST_CASE("outer algebras of the A2 recollements") {
    auto a = fixtures::a2();
    auto r2 = rec(a, {1});
    CHECK(r2.a_part()->dim() == 1);
    CHECK(r2.c_part()->dim() == 1);
    CHECK(r2.b_part()->dim() == 3);
    auto r12 = rec(a, {0, 1});
    CHECK(r12.a_part()->is_zero_algebra());
    CHECK(r12.c_part()->dim() == 3);
    auto rp = rec(fixtures::prod(), {2});
    CHECK(rp.a_part()->dim() == 3);  // the A2 factor
    CHECK(rp.c_part()->dim() == 1);
}

TEST_CASE("exactness verdicts on the fixtures") {
    auto a = fixtures::a2();
    auto r1 = rec(a, {0});
    CHECK(r1.exact.i_shriek);
    CHECK(!r1.exact.i_star);
    auto r2 = rec(a, {1});
    CHECK(r2.exact.i_star);
    CHECK(!r2.exact.i_shriek);
    auto rp = rec(fixtures::prod(), {2});
    CHECK(rp.exact.i_star);
    CHECK(rp.exact.i_shriek);
    CHECK(rp.exact.j_shriek);
    CHECK(rp.exact.j_lower_star);
}

TEST_CASE("functor values on A2 with E = {2}") {
    auto a = fixtures::a2();
    auto r = rec(a, {1});
    Module p1 = projective_module(a, 0);

    Module jp1 = apply_j_star(r.ctx, p1);
    CHECK(jp1.total_dim() == 1);  // P1 e2 = span{a}

    Module ip1 = apply_i_star(r.ctx, p1);
    CHECK(ip1.total_dim() == 1);  // the top S1 over A/AeA = k

    // j_*(k) is the 2-dimensional module (iso to I2), j_!(k) = S2
    Module k = simple_module(r.c_part(), 0);
    Module js = apply_j_lower_star(r.ctx, k);
    CHECK(js.dims == std::vector<int>{1, 1});
    CHECK(is_isomorphic(js, injective_module(a, 1)));
    Module jb = apply_j_shriek(r.ctx, k);
    CHECK(jb.dims == std::vector<int>{0, 1});
}

TEST_CASE("annihilator functor on A2 with E = {1}") {
    auto a = fixtures::a2();
    auto r = rec(a, {0});
    Module p1 = projective_module(a, 0);
    Module soc = apply_i_shriek(r.ctx, p1);
    CHECK(soc.total_dim() == 1);
}

TEST_CASE("canonical sequences") {
    auto a = fixtures::a2();
    Module p1 = projective_module(a, 0);

    auto r2 = rec(a, {1});
    auto left = canonical_ses(r2, p1, SesSide::Left);
    CHECK(left.exact);
    CHECK(left.first.source.dims == std::vector<int>{0, 1});   // j_! j^* P1 = S2
    CHECK(left.second.target.dims == std::vector<int>{1, 0});  // i_* i^* P1 = S1
    CHECK_THROWS_WITH(canonical_ses(r2, p1, SesSide::Right),
                      Catch::Matchers::ContainsSubstring("i^!"));

    auto r1 = rec(a, {0});
    auto right = canonical_ses(r1, p1, SesSide::Right);
    CHECK(right.exact);
    CHECK(right.first.source.total_dim() == 1);  // the socle

    auto z = canonical_ses(r2, zero_module(a), SesSide::Left);
    CHECK(z.exact);
}

TEST_CASE("axiom suite passes on every fixture recollement") {
    struct Fixture { AlgebraPtr alg; std::vector<int> vs; };
    std::vector<Fixture> fixtures = {
        {fixtures::a2(), {0}},
        {fixtures::a2(), {1}},
        {fixtures::prod(), {2}},
        {fixtures::a2(), {0, 1}},  // degenerate
    };
    for (const auto& fx : fixtures) {
        auto r = rec(fx.alg, fx.vs);
        auto u = enumerate_parts(r, 2);
        auto rep = check_axioms(r, u);
        INFO("idempotent vertex count " << fx.vs.size());
        for (const auto& e : rep.entries) {
            INFO(e.id << " on " << e.object << ": " << e.note);
            CHECK(e.verdict != CheckEntry::V::Fail);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("ext adjunction equalities hold where gated on") {
    auto a = fixtures::a2();
    for (auto vs : {std::vector<int>{0}, std::vector<int>{1}}) {
        auto r = rec(a, vs);
        auto u = enumerate_parts(r, 2);
        auto rep = ext_adjunction_check(r, u, 3);
        CHECK(rep.all_pass());
        // at least one clause runs and one is gated off on these fixtures
        int skipped = 0, ran = 0;
        for (const auto& e : rep.entries)
            (e.verdict == CheckEntry::V::Skipped ? skipped : ran)++;
        CHECK(skipped > 0);
        CHECK(ran > 0);
    }
}

TEST_CASE("functors preserve identity and composition") {
    auto a = fixtures::prod();
    auto r = rec(a, {2});
    auto u = enumerate_parts(r, 2);

    // deterministic sweep: compose pairs of hom-basis elements between
    // universe members and compare images
    auto check_functor = [&](Functor fun, const Universe& dom) {
        for (int i = 0; i < dom.size(); ++i) {
            Module fm = apply_functor(r.ctx, fun, dom.at(i));
            ModuleMap fid = apply_functor(r.ctx, fun, identity_map(dom.at(i)));
            CHECK(fid.is_valid());
            for (std::size_t v = 0; v < fid.vertex_maps.size(); ++v)
                CHECK(fid.vertex_maps[v].is_identity());
            (void)fm;
            for (int j = 0; j < dom.size(); ++j) {
                auto fs = hom_basis(dom.at(i), dom.at(j));
                for (int k = 0; k < dom.size(); ++k) {
                    auto gs = hom_basis(dom.at(j), dom.at(k));
                    for (const auto& f : fs)
                        for (const auto& g : gs) {
                            ModuleMap lhs = apply_functor(r.ctx, fun, compose(g, f));
                            ModuleMap rhs = compose(apply_functor(r.ctx, fun, g),
                                                    apply_functor(r.ctx, fun, f));
                            CHECK(lhs.vertex_maps == rhs.vertex_maps);
                        }
                }
            }
        }
    };
    check_functor(Functor::IStar, *u.B);
    check_functor(Functor::IShriek, *u.B);
    check_functor(Functor::JStar, *u.B);
    check_functor(Functor::ILowerStar, *u.A);
    check_functor(Functor::JShriek, *u.C);
    check_functor(Functor::JLowerStar, *u.C);
}

TEST_CASE("degenerate recollement: corner side is an equivalence") {
    auto a = fixtures::a2();
    auto r = rec(a, {0, 1});
    auto u = enumerate_parts(r, 2);
    CHECK(u.A->size() == 0);
    CHECK(u.C->size() == u.B->size());
    for (int i = 0; i < u.C->size(); ++i) {
        ModuleMap unit = unit_j_shriek(r.ctx, u.C->at(i));
        CHECK(unit.is_valid());
        CHECK(unit.is_isomorphism());
    }
}
