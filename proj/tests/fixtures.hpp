#pragma once

// Shared test fixtures: the small algebras every suite exercises.

#include "recol/algebra.hpp"

namespace recol::fixtures {

// linear A2 quiver: 1 -a-> 2, no relations
inline AlgebraPtr a2(std::uint32_t p = 2) {
    Quiver q;
    q.vertex_names = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return build_algebra(q, FieldSpec::of(p), {});
}

// linear A3 quiver: 1 -a-> 2 -b-> 3, no relations
inline AlgebraPtr a3(std::uint32_t p = 2) {
    Quiver q;
    q.vertex_names = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    return build_algebra(q, FieldSpec::of(p), {});
}

// one vertex with a loop x, relation x^2 (dual numbers k[x]/(x^2))
inline AlgebraPtr loop2(std::uint32_t p = 2) {
    Quiver q;
    q.vertex_names = {"1"};
    q.arrows = {{"x", 0, 0}};
    Relation r = {RelationTerm{1, {0, 0}}};
    return build_algebra(q, FieldSpec::of(p), {r});
}

// A2 together with an isolated vertex 3 (product algebra A2 x k)
inline AlgebraPtr prod(std::uint32_t p = 2) {
    Quiver q;
    q.vertex_names = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}};
    return build_algebra(q, FieldSpec::of(p), {});
}

}  // namespace recol::fixtures
