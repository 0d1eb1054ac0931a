#pragma once

#include "recol/module.hpp"

namespace recol {

/// e = sum of the trivial-path idempotents over a set of vertices. The only
/// idempotents this library works with: corner and quotient stay bound quiver
/// algebras computable by path filtering.
struct VertexIdempotent {
    AlgebraPtr algebra;
    std::vector<int> vertices;  // sorted, unique, nonempty

    static VertexIdempotent of(AlgebraPtr alg, std::vector<int> vs) {
        if (vs.empty()) throw std::invalid_argument("vertex idempotent: empty vertex set");
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs)
            if (v < 0 || v >= alg->quiver.vertex_count())
                throw std::invalid_argument("vertex idempotent: vertex out of range");
        return VertexIdempotent{alg, std::move(vs)};
    }

    bool contains(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    bool is_all_vertices() const {
        return static_cast<int>(vertices.size()) == algebra->quiver.vertex_count();
    }
};

/// A finite-dimensional associative algebra by structure constants, with
/// orthogonal primitive idempotents and a radical spanning set. Intermediate
/// form of A/AeA and eAe before re-presentation as bound quiver algebras.
struct AbstractAlgebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::vector<std::uint32_t>> mult;  // [i*dim+j] -> coeff vector
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<std::uint32_t>> idempotents;  // one per label
    std::vector<std::vector<std::uint32_t>> radical;      // spanning set

    const std::vector<std::uint32_t>& basis_mult(int i, int j) const { return mult[i * dim + j]; }

    std::vector<std::uint32_t> mult_vec(const std::vector<std::uint32_t>& x,
                                        const std::vector<std::uint32_t>& y) const {
        std::vector<std::uint32_t> out(dim, 0);
        for (int i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < dim; ++j) {
                if (!y[j]) continue;
                const std::uint32_t c = field.mul(x[i], y[j]);
                const auto& prod = basis_mult(i, j);
                for (int k = 0; k < dim; ++k)
                    if (prod[k]) out[k] = field.add(out[k], field.mul(c, prod[k]));
            }
        }
        return out;
    }
};

/// The two-sided ideal AeA as a subspace of A.
inline RowSpan two_sided_ideal_of_idempotent(const BoundQuiverAlgebra& alg,
                                             const VertexIdempotent& e) {
    RowSpan span(alg.dim(), alg.field);
    for (int i = 0; i < alg.dim(); ++i) {
        for (int j = 0; j < alg.dim(); ++j) {
            if (alg.tgt(i) != alg.src(j)) continue;
            if (!e.contains(alg.tgt(i))) continue;
            span.insert(alg.mult(i, j));
        }
    }
    return span;
}

struct QuotientData {
    AbstractAlgebra abs;
    std::vector<std::size_t> free_coords;  // ambient basis indices of the complement
    RowSpan ideal;                          // AeA

    std::vector<std::uint32_t> class_of(const std::vector<std::uint32_t>& x) const {
        return ideal.coords_mod(x);
    }
};

inline QuotientData idempotent_quotient_abstract(const BoundQuiverAlgebra& alg,
                                                 const VertexIdempotent& e) {
    QuotientData out{AbstractAlgebra{alg.field}, {}, two_sided_ideal_of_idempotent(alg, e)};
    out.free_coords = out.ideal.free_columns();
    const int d = static_cast<int>(out.free_coords.size());
    out.abs.dim = d;
    out.abs.mult.assign(static_cast<std::size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out.abs.mult[i * d + j] = out.class_of(
                alg.mult(static_cast<int>(out.free_coords[i]), static_cast<int>(out.free_coords[j])));
    for (int v = 0; v < alg.quiver.vertex_count(); ++v) {
        if (e.contains(v)) continue;
        out.abs.vertex_labels.push_back(alg.vertex_name(v));
        std::vector<std::uint32_t> unit(alg.dim(), 0);
        unit[alg.idempotent_index(v)] = 1;
        out.abs.idempotents.push_back(out.class_of(unit));
    }
    for (int b : alg.radical_basis()) {
        std::vector<std::uint32_t> unit(alg.dim(), 0);
        unit[b] = 1;
        auto cls = out.class_of(unit);
        if (std::any_of(cls.begin(), cls.end(), [](std::uint32_t c) { return c != 0; }))
            out.abs.radical.push_back(std::move(cls));
    }
    return out;
}

struct CornerData {
    AbstractAlgebra abs;
    std::vector<int> corner_basis;  // ambient basis indices (paths E -> E)

    std::vector<std::uint32_t> embed(const std::vector<std::uint32_t>& x, int ambient_dim) const {
        std::vector<std::uint32_t> out(ambient_dim, 0);
        for (std::size_t i = 0; i < corner_basis.size(); ++i) out[corner_basis[i]] = x[i];
        return out;
    }

    std::vector<std::uint32_t> restrict_to_corner(const std::vector<std::uint32_t>& x) const {
        std::vector<std::uint32_t> out(corner_basis.size(), 0);
        for (std::size_t i = 0; i < corner_basis.size(); ++i) out[i] = x[corner_basis[i]];
        return out;
    }
};

inline CornerData corner_abstract(const BoundQuiverAlgebra& alg, const VertexIdempotent& e) {
    CornerData out;
    out.abs.field = alg.field;
    for (int b = 0; b < alg.dim(); ++b)
        if (e.contains(alg.src(b)) && e.contains(alg.tgt(b))) out.corner_basis.push_back(b);
    const int d = static_cast<int>(out.corner_basis.size());
    out.abs.dim = d;
    out.abs.mult.assign(static_cast<std::size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& prod = alg.mult(out.corner_basis[i], out.corner_basis[j]);
            // the reduction of an E-to-E path is supported on E-to-E paths
            out.abs.mult[i * d + j] = out.restrict_to_corner(prod);
        }
    for (int v : e.vertices) {
        out.abs.vertex_labels.push_back(alg.vertex_name(v));
        std::vector<std::uint32_t> unit(d, 0);
        for (int i = 0; i < d; ++i)
            if (out.corner_basis[i] == alg.idempotent_index(v)) unit[i] = 1;
        out.abs.idempotents.push_back(std::move(unit));
    }
    for (int i = 0; i < d; ++i) {
        if (alg.len(out.corner_basis[i]) >= 1) {
            std::vector<std::uint32_t> unit(d, 0);
            unit[i] = 1;
            out.abs.radical.push_back(std::move(unit));
        }
    }
    return out;
}

/// A bound quiver presentation of an abstract algebra, with the isomorphism
/// between presented basis classes and abstract coordinates.
struct Presented {
    AlgebraPtr alg;
    std::vector<std::vector<std::uint32_t>> arrow_rep;  // abstract coords per arrow
    Mat iota;      // presented basis -> abstract coords
    Mat iota_inv;

    std::vector<std::uint32_t> to_presented(const std::vector<std::uint32_t>& abs_vec) const {
        Mat col = iota_inv * Mat::col_vector(alg->field, abs_vec);
        std::vector<std::uint32_t> out(alg->dim());
        for (int i = 0; i < alg->dim(); ++i) out[i] = col.at(i, 0);
        return out;
    }

    std::vector<std::uint32_t> to_abstract(const std::vector<std::uint32_t>& p_vec) const {
        Mat col = iota * Mat::col_vector(alg->field, p_vec);
        std::vector<std::uint32_t> out(iota.rows());
        for (std::size_t i = 0; i < iota.rows(); ++i) out[i] = col.at(i, 0);
        return out;
    }
};

/// Recover a quiver presentation: vertices from the idempotent labels, arrows
/// from a complement of rad^2 in rad per vertex pair, relations from the
/// kernel of the resulting path-algebra surjection (complete once paths reach
/// the nilpotency index of the radical).
inline Presented present_as_bound_quiver(const AbstractAlgebra& abs, BuildOptions opts = {}) {
    Presented out;
    const FieldSpec f = abs.field;
    const int nv = static_cast<int>(abs.vertex_labels.size());
    if (abs.dim == 0) {
        Quiver q;
        out.alg = build_algebra(q, f, {});
        out.iota = Mat(0, 0, f);
        out.iota_inv = Mat(0, 0, f);
        return out;
    }

    auto sandwich = [&](const std::vector<std::uint32_t>& x, int u, int w) {
        return abs.mult_vec(abs.idempotents[u], abs.mult_vec(x, abs.idempotents[w]));
    };

    // rad^2 spanning set
    std::vector<std::vector<std::uint32_t>> rad2;
    for (const auto& x : abs.radical)
        for (const auto& y : abs.radical) rad2.push_back(abs.mult_vec(x, y));

    Quiver q;
    q.vertex_names = abs.vertex_labels;
    std::vector<std::vector<std::uint32_t>> arrow_rep;
    for (int u = 0; u < nv; ++u) {
        for (int w = 0; w < nv; ++w) {
            RowSpan span(abs.dim, f);
            for (const auto& z : rad2) span.insert(sandwich(z, u, w));
            int k = 0;
            for (const auto& x : abs.radical) {
                auto cand = sandwich(x, u, w);
                if (span.insert(cand)) {
                    q.arrows.push_back({"g" + std::to_string(arrow_rep.size()), u, w});
                    arrow_rep.push_back(cand);
                    ++k;
                }
            }
            (void)k;
        }
    }

    // nilpotency index of the radical
    int nilp = 1;
    {
        std::vector<std::vector<std::uint32_t>> power = abs.radical;
        while (true) {
            RowSpan s(abs.dim, f);
            bool nonzero = false;
            for (const auto& x : power)
                if (s.insert(x)) nonzero = true;
            if (!nonzero) break;
            ++nilp;
            std::vector<std::vector<std::uint32_t>> next;
            for (const auto& x : s.basis())
                for (const auto& y : abs.radical) next.push_back(abs.mult_vec(x, y));
            power = std::move(next);
            if (nilp > abs.dim + 1) throw std::logic_error("radical is not nilpotent");
        }
    }

    auto pe = detail::PathEnum::up_to(q, nilp, opts.max_paths);
    std::vector<std::vector<std::uint32_t>> image(pe.paths.size());
    for (std::size_t i = 0; i < pe.paths.size(); ++i) {
        const PathWord& w = pe.paths[i];
        std::vector<std::uint32_t> acc = abs.idempotents[w.source];
        for (int a : w.arrows) acc = abs.mult_vec(acc, arrow_rep[a]);
        image[i] = std::move(acc);
    }

    // kernel of the surjection, grouped by (source, target)
    std::vector<Relation> rels;
    for (int u = 0; u < nv; ++u) {
        for (int w = 0; w < nv; ++w) {
            std::vector<std::size_t> group;
            for (std::size_t i = 0; i < pe.paths.size(); ++i)
                if (pe.paths[i].source == u && pe.paths[i].target == w) group.push_back(i);
            if (group.empty()) continue;
            Mat sys(abs.dim, group.size(), f);
            for (std::size_t c = 0; c < group.size(); ++c)
                for (int r = 0; r < abs.dim; ++r) sys.at(r, c) = image[group[c]][r];
            for (const Mat& kv : rref_solve(sys).kernel_basis) {
                Relation rel;
                for (std::size_t c = 0; c < group.size(); ++c) {
                    if (kv.at(c, 0) == 0) continue;
                    const PathWord& pw = pe.paths[group[c]];
                    if (pw.length() < 2)
                        throw std::logic_error(
                            "presentation kernel touches a path of length < 2");
                    rel.push_back(RelationTerm{kv.at(c, 0), pw.arrows});
                }
                if (!rel.empty()) rels.push_back(std::move(rel));
            }
        }
    }

    out.alg = build_algebra(q, f, rels, opts);
    if (out.alg->dim() != abs.dim)
        throw std::logic_error("presented algebra dimension mismatch: got " +
                               std::to_string(out.alg->dim()) + " expected " +
                               std::to_string(abs.dim));
    out.arrow_rep = arrow_rep;
    out.iota = Mat(abs.dim, out.alg->dim(), f);
    for (int b = 0; b < out.alg->dim(); ++b) {
        const PathWord& w = out.alg->basis[b];
        std::vector<std::uint32_t> acc = abs.idempotents[w.source];
        for (int a : w.arrows) acc = abs.mult_vec(acc, arrow_rep[a]);
        for (int r = 0; r < abs.dim; ++r) out.iota.at(r, b) = acc[r];
    }
    auto inv = invert(out.iota);
    if (!inv) throw std::logic_error("presentation is not an isomorphism");
    out.iota_inv = *inv;
    return out;
}

}  // namespace recol
