#pragma once

#include "recol/hom.hpp"

namespace recol {

/// rad M: at each vertex the sum of the images of the incoming arrow maps.
/// Already arrow-closed, so no closure iteration is needed.
inline SubmodulePair radical_submodule(const Module& m) {
    const int nv = m.alg->quiver.vertex_count();
    std::vector<std::vector<std::vector<std::uint32_t>>> gens(nv);
    for (int a = 0; a < m.alg->quiver.arrow_count(); ++a) {
        const int w = m.alg->quiver.arrows[a].target;
        const Mat& mat = m.arrow_maps[a];
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            std::vector<std::uint32_t> col(mat.rows());
            for (std::size_t r = 0; r < mat.rows(); ++r) col[r] = mat.at(r, c);
            gens[w].push_back(std::move(col));
        }
    }
    return submodule_from_spans(m, gens);
}

struct ProjectiveCover {
    Module cover;
    ModuleMap epi;
};

/// Minimal projective cover: P = sum of P_v to the multiplicity of top(M) at
/// v, with the epi lifting a chosen basis of the top. ker(epi) lies in rad P.
inline ProjectiveCover projective_cover(const Module& m) {
    const AlgebraPtr alg = m.alg;
    const FieldSpec f = alg->field;
    const int nv = alg->quiver.vertex_count();

    if (m.is_zero()) {
        Module z = zero_module(alg);
        return ProjectiveCover{z, zero_map(z, m)};
    }

    auto rad = radical_submodule(m);
    // top representatives: unit vectors at the free coordinates of rad_v
    std::vector<std::vector<std::vector<std::uint32_t>>> reps(nv);
    for (int v = 0; v < nv; ++v) {
        RowSpan s(m.dims[v], f);
        const Mat& iv = rad.inclusion.vertex_maps[v];
        for (std::size_t c = 0; c < iv.cols(); ++c) {
            std::vector<std::uint32_t> col(iv.rows());
            for (std::size_t r = 0; r < iv.rows(); ++r) col[r] = iv.at(r, c);
            s.insert(col);
        }
        for (std::size_t free : s.free_columns()) {
            std::vector<std::uint32_t> unit(m.dims[v], 0);
            unit[free] = 1;
            reps[v].push_back(std::move(unit));
        }
    }

    std::vector<Module> parts;
    struct Gen { int v; std::vector<std::uint32_t> rep; };
    std::vector<Gen> gens;
    for (int v = 0; v < nv; ++v)
        for (const auto& rep : reps[v]) {
            parts.push_back(projective_module(alg, v));
            gens.push_back({v, rep});
        }
    auto ds = direct_sum(alg, parts);

    // epi on the (v, rep) copy of P_v: basis path b (v -> w) |-> rep . b
    ModuleMap epi = zero_map(ds.sum, m);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        ModuleMap comp = zero_map(parts[g], m);
        std::vector<std::vector<int>> basis_at(nv);
        for (int b = 0; b < alg->dim(); ++b)
            if (alg->src(b) == gens[g].v) basis_at[alg->tgt(b)].push_back(b);
        for (int w = 0; w < nv; ++w) {
            Mat mat(m.dims[w], basis_at[w].size(), f);
            for (std::size_t c = 0; c < basis_at[w].size(); ++c) {
                Mat img = path_action(m, alg->basis[basis_at[w][c]]) *
                          Mat::col_vector(f, gens[g].rep);
                for (int r = 0; r < m.dims[w]; ++r) mat.at(r, c) = img.at(r, 0);
            }
            comp.vertex_maps[w] = std::move(mat);
        }
        for (int w = 0; w < nv; ++w)
            epi.vertex_maps[w] = epi.vertex_maps[w] +
                                 comp.vertex_maps[w] * ds.projections[g].vertex_maps[w];
    }
    if (!epi.is_valid() || !epi.is_surjective())
        throw std::logic_error("projective cover construction failed");
    return ProjectiveCover{ds.sum, epi};
}

inline bool is_projective(const Module& m) {
    if (m.is_zero()) return true;
    auto pc = projective_cover(m);
    return pc.cover.total_dim() == m.total_dim();
}

/// First syzygy: kernel of the minimal cover.
inline SubmodulePair syzygy(const Module& m) {
    auto pc = projective_cover(m);
    auto kc = kernel_cokernel(pc.epi);
    return SubmodulePair{kc.ker, kc.ker_inclusion};
}

namespace detail {

// coordinates of f in a hom basis (must be expressible; solver asserts)
inline std::vector<std::uint32_t> coords_in_hom_basis(const ModuleMap& f,
                                                      const std::vector<ModuleMap>& basis) {
    const auto target_vec = hom_to_coords(f);
    if (basis.empty()) {
        for (auto v : target_vec)
            if (v) throw std::logic_error("coords_in_hom_basis: nonzero map, empty basis");
        return {};
    }
    Mat sys(target_vec.size(), basis.size(), f.source.alg->field);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto col = hom_to_coords(basis[c]);
        for (std::size_t r = 0; r < col.size(); ++r) sys.at(r, c) = col[r];
    }
    Mat rhs = Mat::col_vector(f.source.alg->field, target_vec);
    auto sol = rref_solve(sys, rhs);
    if (!sol.particular) throw std::logic_error("coords_in_hom_basis: map not in span");
    std::vector<std::uint32_t> out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] = sol.particular->at(i, 0);
    return out;
}

}  // namespace detail

/// dim Ext^i(M, N) from a minimal projective resolution of M; Ext^0 = Hom.
inline int ext_dim(const Module& m, const Module& n, int degree) {
    if (m.alg != n.alg) throw std::invalid_argument("ext_dim: algebra mismatch");
    if (degree < 0) throw std::invalid_argument("ext_dim: negative degree");
    if (degree == 0) return hom_dim(m, n);
    if (m.is_zero() || n.is_zero()) return 0;

    // resolution ... -> P_1 -d1-> P_0 -> M -> 0 up to P_{degree+1}
    std::vector<Module> projs;
    std::vector<ModuleMap> diffs;  // d_k : P_k -> P_{k-1}
    auto pc = projective_cover(m);
    projs.push_back(pc.cover);
    Module current = m;
    ModuleMap current_epi = pc.epi;
    for (int k = 1; k <= degree + 1; ++k) {
        auto kc = kernel_cokernel(current_epi);
        if (kc.ker.is_zero()) {
            // resolution terminated early: Ext^i = 0 for i >= k
            if (degree >= k) return 0;
        }
        auto next = projective_cover(kc.ker);
        diffs.push_back(compose(kc.ker_inclusion, next.epi));
        projs.push_back(next.cover);
        current_epi = next.epi;
    }

    // Hom complex 0 -> Hom(P_0,N) -> Hom(P_1,N) -> ...
    auto basis_prev = hom_basis(projs[degree - 1], n);
    auto basis_cur = hom_basis(projs[degree], n);

    // stacked coordinates of h o d for h in `from`; ranks of these matrices
    // give the image/kernel dimensions of the precomposition maps
    auto precompose_matrix = [&](const std::vector<ModuleMap>& from, const ModuleMap& d) {
        if (from.empty()) return Mat(0, 0, n.alg->field);
        auto first = detail::hom_to_coords(compose(from[0], d));
        Mat raw(first.size(), from.size(), n.alg->field);
        for (std::size_t c = 0; c < from.size(); ++c) {
            auto col = c == 0 ? first : detail::hom_to_coords(compose(from[c], d));
            for (std::size_t r = 0; r < col.size(); ++r) raw.at(r, c) = col[r];
        }
        return raw;
    };

    const std::size_t rank_in = rank_of(precompose_matrix(basis_prev, diffs[degree - 1]));
    const std::size_t dim_ker_out =
        basis_cur.size() - rank_of(precompose_matrix(basis_cur, diffs[degree]));
    return static_cast<int>(dim_ker_out - rank_in);
}

}  // namespace recol
