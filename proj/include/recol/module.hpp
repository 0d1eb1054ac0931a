#pragma once

#include <string>
#include <vector>

#include "recol/algebra.hpp"

namespace recol {

/// A finite-dimensional right module over a bound quiver algebra, stored as a
/// representation: a space per vertex and a matrix per arrow. For an arrow
/// a: u -> v the matrix maps the u-component to the v-component (paths act
/// left to right).
struct Module {
    AlgebraPtr alg;
    std::vector<int> dims;       // per vertex
    std::vector<Mat> arrow_maps; // per arrow: dims[target] x dims[source]

    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Module& o) const {
        return alg == o.alg && dims == o.dims && arrow_maps == o.arrow_maps;
    }

    std::string dim_vector_string() const {
        std::string s;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(dims[i]);
        }
        return s;
    }
};

inline Module zero_module(AlgebraPtr alg) {
    Module m;
    m.alg = alg;
    m.dims.assign(alg->quiver.vertex_count(), 0);
    for (int a = 0; a < alg->quiver.arrow_count(); ++a)
        m.arrow_maps.push_back(Mat(0, 0, alg->field));
    return m;
}

inline Module make_module(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> maps) {
    Module m;
    m.alg = alg;
    m.dims = std::move(dims);
    m.arrow_maps = std::move(maps);
    return m;
}

/// The matrix of a path acting on M (composite of the arrow maps, first arrow
/// applied first).
inline Mat path_action(const Module& m, const PathWord& w) {
    const auto& q = m.alg->quiver;
    Mat acc = Mat::identity(m.dims[w.source], m.alg->field);
    for (int a : w.arrows) {
        (void)q;
        acc = m.arrow_maps[a] * acc;
    }
    return acc;
}

/// Action of a parallel algebra element (all basis paths in the support share
/// source u and target w): a matrix M_u -> M_w.
inline Mat act_parallel(const Module& m, int u, int w, const std::vector<std::uint32_t>& coeffs) {
    Mat acc(m.dims[w], m.dims[u], m.alg->field);
    for (int b = 0; b < m.alg->dim(); ++b) {
        if (!coeffs[b]) continue;
        if (m.alg->src(b) != u || m.alg->tgt(b) != w)
            throw std::invalid_argument("act_parallel: element is not parallel (u,w)");
        acc = acc + path_action(m, m.alg->basis[b]).scaled(coeffs[b]);
    }
    return acc;
}

/// Split an algebra element into its (source, target)-graded components.
inline std::vector<std::tuple<int, int, std::vector<std::uint32_t>>> graded_components(
    const BoundQuiverAlgebra& alg, const std::vector<std::uint32_t>& v) {
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> parts;
    for (int b = 0; b < alg.dim(); ++b) {
        if (!v[b]) continue;
        auto& p = parts[{alg.src(b), alg.tgt(b)}];
        if (p.empty()) p.assign(alg.dim(), 0);
        p[b] = v[b];
    }
    std::vector<std::tuple<int, int, std::vector<std::uint32_t>>> out;
    for (auto& [k, vec] : parts) out.emplace_back(k.first, k.second, std::move(vec));
    return out;
}

/// Checks the defining conditions: matrix shapes and vanishing of every
/// relation on M.
inline bool module_is_valid(const Module& m, std::string* why = nullptr) {
    const auto& q = m.alg->quiver;
    if (static_cast<int>(m.dims.size()) != q.vertex_count()) {
        if (why) *why = "dimension vector length mismatch";
        return false;
    }
    if (static_cast<int>(m.arrow_maps.size()) != q.arrow_count()) {
        if (why) *why = "arrow map count mismatch";
        return false;
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
        const auto& mat = m.arrow_maps[a];
        if (static_cast<int>(mat.rows()) != m.dims[q.arrows[a].target] ||
            static_cast<int>(mat.cols()) != m.dims[q.arrows[a].source]) {
            if (why) *why = "arrow map shape mismatch on '" + q.arrows[a].name + "'";
            return false;
        }
    }
    for (const auto& rel : m.alg->relations) {
        const int s = q.arrows[rel.front().arrows.front()].source;
        const int t = q.arrows[rel.front().arrows.back()].target;
        Mat acc(m.dims[t], m.dims[s], m.alg->field);
        for (const auto& term : rel) {
            PathWord w{s, t, term.arrows};
            acc = acc + path_action(m, w).scaled(term.coeff);
        }
        if (!acc.is_zero()) {
            if (why) *why = "a relation does not act by zero";
            return false;
        }
    }
    return true;
}

/// A morphism of modules: one matrix per vertex, commuting with all arrow
/// maps.
struct ModuleMap {
    Module source;
    Module target;
    std::vector<Mat> vertex_maps;  // target.dims[v] x source.dims[v]

    bool is_valid() const {
        if (source.alg != target.alg) return false;
        const auto& q = source.alg->quiver;
        for (int v = 0; v < q.vertex_count(); ++v) {
            if (static_cast<int>(vertex_maps[v].rows()) != target.dims[v] ||
                static_cast<int>(vertex_maps[v].cols()) != source.dims[v])
                return false;
        }
        for (int a = 0; a < q.arrow_count(); ++a) {
            const int u = q.arrows[a].source, w = q.arrows[a].target;
            if (!(target.arrow_maps[a] * vertex_maps[u] ==
                  vertex_maps[w] * source.arrow_maps[a]))
                return false;
        }
        return true;
    }

    bool is_zero() const {
        return std::all_of(vertex_maps.begin(), vertex_maps.end(),
                           [](const Mat& m) { return m.is_zero(); });
    }

    bool is_injective() const {
        for (const auto& m : vertex_maps)
            if (rank_of(m) != m.cols()) return false;
        return true;
    }

    bool is_surjective() const {
        for (const auto& m : vertex_maps)
            if (rank_of(m) != m.rows()) return false;
        return true;
    }

    bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

inline ModuleMap identity_map(const Module& m) {
    ModuleMap f{m, m, {}};
    for (int d : m.dims) f.vertex_maps.push_back(Mat::identity(d, m.alg->field));
    return f;
}

inline ModuleMap zero_map(const Module& src, const Module& tgt) {
    ModuleMap f{src, tgt, {}};
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        f.vertex_maps.push_back(Mat(tgt.dims[v], src.dims[v], src.alg->field));
    return f;
}

inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {  // g after f
    if (!(f.target == g.source)) throw std::invalid_argument("compose: target/source mismatch");
    ModuleMap h{f.source, g.target, {}};
    for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
        h.vertex_maps.push_back(g.vertex_maps[v] * f.vertex_maps[v]);
    return h;
}

inline ModuleMap map_sum(const ModuleMap& f, const ModuleMap& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw std::invalid_argument("map_sum: shape mismatch");
    ModuleMap h = f;
    for (std::size_t v = 0; v < h.vertex_maps.size(); ++v)
        h.vertex_maps[v] = f.vertex_maps[v] + g.vertex_maps[v];
    return h;
}

inline ModuleMap map_scaled(const ModuleMap& f, std::uint32_t c) {
    ModuleMap h = f;
    for (auto& m : h.vertex_maps) m = m.scaled(c);
    return h;
}

/// Direct sum with component inclusions and projections.
struct DirectSum {
    Module sum;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};

inline DirectSum direct_sum(AlgebraPtr alg, const std::vector<Module>& parts) {
    const int nv = alg->quiver.vertex_count();
    const int na = alg->quiver.arrow_count();
    Module s = zero_module(alg);
    std::vector<int> offsets_per_part_vertex;  // flattened offsets
    std::vector<std::vector<int>> offs(parts.size(), std::vector<int>(nv, 0));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].alg != alg) throw std::invalid_argument("direct_sum: algebra mismatch");
        for (int v = 0; v < nv; ++v) {
            offs[i][v] = s.dims[v];
            s.dims[v] += parts[i].dims[v];
        }
    }
    for (int a = 0; a < na; ++a) {
        const int u = alg->quiver.arrows[a].source, w = alg->quiver.arrows[a].target;
        Mat m(s.dims[w], s.dims[u], alg->field);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const Mat& pm = parts[i].arrow_maps[a];
            for (std::size_t r = 0; r < pm.rows(); ++r)
                for (std::size_t c = 0; c < pm.cols(); ++c)
                    m.at(offs[i][w] + r, offs[i][u] + c) = pm.at(r, c);
        }
        s.arrow_maps[a] = std::move(m);
    }
    DirectSum out;
    out.sum = s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ModuleMap inc{parts[i], s, {}}, prj{s, parts[i], {}};
        for (int v = 0; v < nv; ++v) {
            Mat mi(s.dims[v], parts[i].dims[v], alg->field);
            Mat mp(parts[i].dims[v], s.dims[v], alg->field);
            for (int r = 0; r < parts[i].dims[v]; ++r) {
                mi.at(offs[i][v] + r, r) = 1;
                mp.at(r, offs[i][v] + r) = 1;
            }
            inc.vertex_maps.push_back(std::move(mi));
            prj.vertex_maps.push_back(std::move(mp));
        }
        out.inclusions.push_back(std::move(inc));
        out.projections.push_back(std::move(prj));
    }
    (void)offsets_per_part_vertex;
    return out;
}

struct StandardModules {
    std::vector<Module> simples;
    std::vector<Module> projectives;
    std::vector<Module> injectives;
};

inline Module simple_module(AlgebraPtr alg, int v) {
    Module m = zero_module(alg);
    m.dims[v] = 1;
    for (int a = 0; a < alg->quiver.arrow_count(); ++a) {
        const auto& ar = alg->quiver.arrows[a];
        m.arrow_maps[a] = Mat(m.dims[ar.target], m.dims[ar.source], alg->field);
    }
    return m;
}

/// P_v = e_v A: basis the normal paths starting at v, right action by path
/// composition and reduction.
inline Module projective_module(AlgebraPtr alg, int v) {
    const int nv = alg->quiver.vertex_count();
    std::vector<std::vector<int>> comp(nv);  // basis indices per target vertex
    for (int b = 0; b < alg->dim(); ++b)
        if (alg->src(b) == v) comp[alg->tgt(b)].push_back(b);
    Module m = zero_module(alg);
    for (int w = 0; w < nv; ++w) m.dims[w] = static_cast<int>(comp[w].size());
    for (int a = 0; a < alg->quiver.arrow_count(); ++a) {
        const int u = alg->quiver.arrows[a].source, w = alg->quiver.arrows[a].target;
        Mat mat(m.dims[w], m.dims[u], alg->field);
        for (int c = 0; c < m.dims[u]; ++c) {
            const auto& prod = alg->mult(comp[u][c], alg->arrow_index(a));
            for (int r = 0; r < m.dims[w]; ++r) mat.at(r, c) = prod[comp[w][r]];
        }
        m.arrow_maps[a] = std::move(mat);
    }
    return m;
}

/// I_v = D(A e_v): component at w is the dual of the span of normal paths
/// w -> v; the arrow action is the transpose of left multiplication.
inline Module injective_module(AlgebraPtr alg, int v) {
    const int nv = alg->quiver.vertex_count();
    std::vector<std::vector<int>> comp(nv);  // paths w -> v per source vertex w
    for (int b = 0; b < alg->dim(); ++b)
        if (alg->tgt(b) == v) comp[alg->src(b)].push_back(b);
    Module m = zero_module(alg);
    for (int w = 0; w < nv; ++w) m.dims[w] = static_cast<int>(comp[w].size());
    for (int a = 0; a < alg->quiver.arrow_count(); ++a) {
        const int u = alg->quiver.arrows[a].source, w = alg->quiver.arrows[a].target;
        // left multiplication by a: (A e_v at w) -> (A e_v at u); transpose it
        Mat lmul(m.dims[u], m.dims[w], alg->field);
        for (int c = 0; c < m.dims[w]; ++c) {
            const auto& prod = alg->mult(alg->arrow_index(a), comp[w][c]);
            for (int r = 0; r < m.dims[u]; ++r) lmul.at(r, c) = prod[comp[u][r]];
        }
        m.arrow_maps[a] = lmul.transpose();
    }
    return m;
}

inline StandardModules standard_modules(AlgebraPtr alg) {
    StandardModules sm;
    for (int v = 0; v < alg->quiver.vertex_count(); ++v) {
        sm.simples.push_back(simple_module(alg, v));
        sm.projectives.push_back(projective_module(alg, v));
        sm.injectives.push_back(injective_module(alg, v));
    }
    return sm;
}

inline Module regular_module(AlgebraPtr alg) {
    std::vector<Module> parts;
    for (int v = 0; v < alg->quiver.vertex_count(); ++v)
        parts.push_back(projective_module(alg, v));
    if (parts.empty()) return zero_module(alg);
    return direct_sum(alg, parts).sum;
}

}  // namespace recol
