#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "recol/module.hpp"

namespace recol {

/// Raised when an exhaustive search would exceed its cap. Never a wrong
/// answer: callers must treat this as "cannot decide at this budget".
struct UndecidedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Stacked coordinates for a homomorphism candidate: all vertex matrices
// flattened in vertex order, row-major.
inline std::size_t hom_coord_count(const Module& m, const Module& n) {
    std::size_t t = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        t += static_cast<std::size_t>(m.dims[v]) * n.dims[v];
    return t;
}

inline ModuleMap hom_from_coords(const Module& m, const Module& n,
                                 const std::vector<std::uint32_t>& x) {
    ModuleMap f{m, n, {}};
    std::size_t pos = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Mat mat(n.dims[v], m.dims[v], m.alg->field);
        for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = x[pos++];
        f.vertex_maps.push_back(std::move(mat));
    }
    return f;
}

inline std::vector<std::uint32_t> hom_to_coords(const ModuleMap& f) {
    std::vector<std::uint32_t> x;
    for (const auto& mat : f.vertex_maps)
        x.insert(x.end(), mat.entries().begin(), mat.entries().end());
    return x;
}

}  // namespace detail

/// A basis of Hom(M, N): solutions of the commuting-square linear system.
inline std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
    if (m.alg != n.alg) throw std::invalid_argument("hom_basis: algebra mismatch");
    const FieldSpec f = m.alg->field;
    const std::size_t ncoords = detail::hom_coord_count(m, n);
    if (ncoords == 0) return {};

    // coordinate offsets per vertex
    std::vector<std::size_t> off(m.dims.size() + 1, 0);
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(m.dims[v]) * n.dims[v];

    std::size_t nrows = 0;
    const auto& q = m.alg->quiver;
    for (int a = 0; a < q.arrow_count(); ++a)
        nrows += static_cast<std::size_t>(n.dims[q.arrows[a].target]) *
                 m.dims[q.arrows[a].source];

    Mat sys(nrows, ncoords, f);
    std::size_t row = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int u = q.arrows[a].source, w = q.arrows[a].target;
        const Mat& ma = m.arrow_maps[a];
        const Mat& na = n.arrow_maps[a];
        // equation: N_a f_u - f_w M_a = 0, entry (r, c): r < n.dims[w], c < m.dims[u]
        for (int r = 0; r < n.dims[w]; ++r) {
            for (int c = 0; c < m.dims[u]; ++c) {
                // sum_k N_a(r,k) f_u(k,c)
                for (int k = 0; k < n.dims[u]; ++k) {
                    const std::size_t idx = off[u] + static_cast<std::size_t>(k) * m.dims[u] + c;
                    sys.at(row, idx) = f.add(sys.at(row, idx), na.at(r, k));
                }
                // - sum_k f_w(r,k) M_a(k,c)
                for (int k = 0; k < m.dims[w]; ++k) {
                    const std::size_t idx = off[w] + static_cast<std::size_t>(r) * m.dims[w] + k;
                    sys.at(row, idx) = f.sub(sys.at(row, idx), ma.at(k, c));
                }
                ++row;
            }
        }
    }

    std::vector<ModuleMap> basis;
    for (const Mat& kvec : rref_solve(sys).kernel_basis) {
        std::vector<std::uint32_t> x(ncoords);
        for (std::size_t i = 0; i < ncoords; ++i) x[i] = kvec.at(i, 0);
        basis.push_back(detail::hom_from_coords(m, n, x));
    }
    return basis;
}

inline int hom_dim(const Module& m, const Module& n) {
    return static_cast<int>(hom_basis(m, n).size());
}

/// Submodule spanned by given vectors per vertex, closed under the arrow
/// action; returns the module and its inclusion.
struct SubmodulePair {
    Module sub;
    ModuleMap inclusion;
};

inline SubmodulePair submodule_from_spans(const Module& m,
                                          const std::vector<std::vector<std::vector<std::uint32_t>>>& gens) {
    const FieldSpec f = m.alg->field;
    const int nv = m.alg->quiver.vertex_count();
    std::vector<RowSpan> span;
    for (int v = 0; v < nv; ++v) span.emplace_back(m.dims[v], f);
    for (int v = 0; v < nv; ++v)
        for (const auto& g : gens[v]) span[v].insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < m.alg->quiver.arrow_count(); ++a) {
            const int u = m.alg->quiver.arrows[a].source, w = m.alg->quiver.arrows[a].target;
            for (const auto& bvec : std::vector<std::vector<std::uint32_t>>(span[u].basis())) {
                Mat col = Mat::col_vector(f, bvec);
                Mat img = m.arrow_maps[a] * col;
                std::vector<std::uint32_t> iv(m.dims[w]);
                for (int r = 0; r < m.dims[w]; ++r) iv[r] = img.at(r, 0);
                if (span[w].insert(iv)) grew = true;
            }
        }
    }
    SubmodulePair out;
    out.sub = zero_module(m.alg);
    std::vector<Mat> incl(nv);
    for (int v = 0; v < nv; ++v) {
        const auto& basis = span[v].basis();
        out.sub.dims[v] = static_cast<int>(basis.size());
        Mat mat(m.dims[v], basis.size(), f);
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (int r = 0; r < m.dims[v]; ++r) mat.at(r, c) = basis[c][r];
        incl[v] = std::move(mat);
    }
    for (int a = 0; a < m.alg->quiver.arrow_count(); ++a) {
        const int u = m.alg->quiver.arrows[a].source, w = m.alg->quiver.arrows[a].target;
        // solve incl_w * X = M_a * incl_u  (unique: incl_w has full column rank)
        Mat rhs = m.arrow_maps[a] * incl[u];
        auto sol = rref_solve(incl[w], rhs);
        if (!sol.particular)
            throw std::logic_error("submodule_from_spans: span not arrow-closed");
        out.sub.arrow_maps[a] = *sol.particular;
    }
    out.inclusion = ModuleMap{out.sub, m, incl};
    return out;
}

/// Quotient of m by the image of a map into m (or by a submodule via its
/// inclusion); returns the module and the projection.
struct QuotientPair {
    Module quot;
    ModuleMap projection;
};

inline QuotientPair quotient_by_image(const Module& m, const ModuleMap& into_m) {
    const FieldSpec f = m.alg->field;
    const int nv = m.alg->quiver.vertex_count();
    std::vector<RowSpan> span;
    std::vector<Mat> proj(nv);
    QuotientPair out;
    out.quot = zero_module(m.alg);
    for (int v = 0; v < nv; ++v) {
        RowSpan s(m.dims[v], f);
        const Mat& mv = into_m.vertex_maps[v];
        for (std::size_t c = 0; c < mv.cols(); ++c) {
            std::vector<std::uint32_t> col(m.dims[v]);
            for (int r = 0; r < m.dims[v]; ++r) col[r] = mv.at(r, c);
            s.insert(col);
        }
        const auto free = s.free_columns();
        out.quot.dims[v] = static_cast<int>(free.size());
        Mat p(free.size(), m.dims[v], f);
        for (int c = 0; c < m.dims[v]; ++c) {
            std::vector<std::uint32_t> unit(m.dims[v], 0);
            unit[c] = 1;
            auto coords = s.coords_mod(unit);
            for (std::size_t r = 0; r < coords.size(); ++r) p.at(r, c) = coords[r];
        }
        proj[v] = std::move(p);
        span.push_back(std::move(s));
    }
    for (int a = 0; a < m.alg->quiver.arrow_count(); ++a) {
        const int u = m.alg->quiver.arrows[a].source, w = m.alg->quiver.arrows[a].target;
        // section of proj_u: unit vectors at the free coordinates
        const auto free_u = span[u].free_columns();
        Mat sec(m.dims[u], free_u.size(), f);
        for (std::size_t c = 0; c < free_u.size(); ++c) sec.at(free_u[c], c) = 1;
        out.quot.arrow_maps[a] = proj[w] * (m.arrow_maps[a] * sec);
    }
    out.projection = ModuleMap{m, out.quot, proj};
    return out;
}

struct KernelCokernel {
    Module ker;
    ModuleMap ker_inclusion;   // ker -> source
    Module coker;
    ModuleMap coker_projection;  // target -> coker
};

inline KernelCokernel kernel_cokernel(const ModuleMap& f) {
    const Module& m = f.source;
    const Module& n = f.target;
    const FieldSpec fld = m.alg->field;
    const int nv = m.alg->quiver.vertex_count();

    KernelCokernel out;
    out.ker = zero_module(m.alg);
    std::vector<Mat> incl(nv);
    for (int v = 0; v < nv; ++v) {
        auto sol = rref_solve(f.vertex_maps[v]);
        out.ker.dims[v] = static_cast<int>(sol.kernel_basis.size());
        Mat mat(m.dims[v], sol.kernel_basis.size(), fld);
        for (std::size_t c = 0; c < sol.kernel_basis.size(); ++c)
            for (int r = 0; r < m.dims[v]; ++r) mat.at(r, c) = sol.kernel_basis[c].at(r, 0);
        incl[v] = std::move(mat);
    }
    for (int a = 0; a < m.alg->quiver.arrow_count(); ++a) {
        const int u = m.alg->quiver.arrows[a].source, w = m.alg->quiver.arrows[a].target;
        Mat rhs = m.arrow_maps[a] * incl[u];
        auto sol = rref_solve(incl[w], rhs);
        if (!sol.particular) throw std::logic_error("kernel is not arrow-closed");
        out.ker.arrow_maps[a] = *sol.particular;
    }
    out.ker_inclusion = ModuleMap{out.ker, m, incl};

    auto q = quotient_by_image(n, f);
    out.coker = std::move(q.quot);
    out.coker_projection = std::move(q.projection);
    return out;
}

/// Exactness of 0 -> ker(f) -> A -f-> B -g-> coker(g) style data: checks that
/// 0 -> A -f-> B -g-> C -> 0 is a short exact sequence.
inline bool is_short_exact(const ModuleMap& f, const ModuleMap& g) {
    if (!(f.target == g.source)) return false;
    if (!f.is_valid() || !g.is_valid()) return false;
    if (!f.is_injective() || !g.is_surjective()) return false;
    if (!compose(g, f).is_zero()) return false;
    // im f = ker g per vertex: rank f_v = dim ker g_v
    for (std::size_t v = 0; v < f.vertex_maps.size(); ++v) {
        const std::size_t rk_f = rank_of(f.vertex_maps[v]);
        const std::size_t dim_ker_g = g.vertex_maps[v].cols() - rank_of(g.vertex_maps[v]);
        if (rk_f != dim_ker_g) return false;
    }
    return true;
}

struct IsoOptions {
    long long search_cap = 1 << 20;
};

/// Isomorphism witness via exhaustive search over the Hom space (coefficients
/// in GF(p)^dim Hom). Returns the first invertible combination or nothing.
/// Throws UndecidedError if the search space exceeds the cap.
inline std::optional<ModuleMap> is_isomorphic(const Module& m, const Module& n,
                                              IsoOptions opts = {}) {
    if (m.alg != n.alg) throw std::invalid_argument("is_isomorphic: algebra mismatch");
    if (m.dims != n.dims) return std::nullopt;
    if (m.is_zero()) return zero_map(m, n);
    auto basis = hom_basis(m, n);
    if (basis.empty()) return std::nullopt;
    const std::uint32_t p = m.alg->field.p;
    long long total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        total *= p;
        if (total > opts.search_cap)
            throw UndecidedError("isomorphism search space exceeds cap (" +
                                 std::to_string(basis.size()) + " hom basis elements)");
    }
    std::vector<std::uint32_t> c(basis.size(), 0);
    while (true) {
        // advance odometer
        std::size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) break;  // wrapped: all combinations tried
        ModuleMap f = zero_map(m, n);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (c[k]) f = map_sum(f, map_scaled(basis[k], c[k]));
        if (f.is_isomorphism()) return f;
    }
    return std::nullopt;
}

namespace detail {

// phi^N for N large enough that rank stabilizes (Fitting).
inline ModuleMap stable_power(const ModuleMap& phi) {
    ModuleMap acc = phi;
    int iters = 1;
    int td = phi.source.total_dim();
    while ((1 << iters) <= 2 * td + 2) ++iters;
    for (int i = 0; i < iters; ++i) acc = compose(acc, acc);
    return acc;
}

inline int total_rank(const ModuleMap& f) {
    int r = 0;
    for (const auto& m : f.vertex_maps) r += static_cast<int>(rank_of(m));
    return r;
}

// Try to split m along an endomorphism: returns the two summands or nothing.
inline std::optional<std::pair<Module, Module>> fitting_split(const Module& m,
                                                              const ModuleMap& phi) {
    ModuleMap pw = stable_power(phi);
    const int r = total_rank(pw);
    if (r == 0 || r == m.total_dim()) return std::nullopt;
    auto kc = kernel_cokernel(pw);
    // image submodule: spanned by the columns of pw
    const int nv = m.alg->quiver.vertex_count();
    std::vector<std::vector<std::vector<std::uint32_t>>> gens(nv);
    for (int v = 0; v < nv; ++v) {
        const Mat& mv = pw.vertex_maps[v];
        for (std::size_t c = 0; c < mv.cols(); ++c) {
            std::vector<std::uint32_t> col(mv.rows());
            for (std::size_t rr = 0; rr < mv.rows(); ++rr) col[rr] = mv.at(rr, c);
            gens[v].push_back(std::move(col));
        }
    }
    auto img = submodule_from_spans(m, gens);
    return std::make_pair(kc.ker, img.sub);
}

}  // namespace detail

/// Complete decomposition into indecomposables by exhaustive Fitting search
/// over End(M). For a f.d. algebra every non-local endomorphism ring contains
/// an element that is neither nilpotent nor invertible, so "no element
/// splits" certifies indecomposability.
inline std::vector<Module> decompose(const Module& m, IsoOptions opts = {}) {
    if (m.is_zero()) return {};
    auto end_basis = hom_basis(m, m);
    const std::uint32_t p = m.alg->field.p;

    // fast path: basis elements first
    for (const auto& phi : end_basis) {
        if (auto sp = detail::fitting_split(m, phi)) {
            auto left = decompose(sp->first, opts);
            auto right = decompose(sp->second, opts);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
    long long total = 1;
    for (std::size_t i = 0; i < end_basis.size(); ++i) {
        total *= p;
        if (total > opts.search_cap)
            throw UndecidedError("endomorphism search space exceeds cap in decompose");
    }
    std::vector<std::uint32_t> c(end_basis.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) break;
        ModuleMap phi = zero_map(m, m);
        for (std::size_t k = 0; k < end_basis.size(); ++k)
            if (c[k]) phi = map_sum(phi, map_scaled(end_basis[k], c[k]));
        if (auto sp = detail::fitting_split(m, phi)) {
            auto left = decompose(sp->first, opts);
            auto right = decompose(sp->second, opts);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
    return {m};
}

inline bool is_indecomposable(const Module& m, IsoOptions opts = {}) {
    if (m.is_zero()) return false;
    return decompose(m, opts).size() == 1;
}

}  // namespace recol
