#pragma once

#include "recol/idempotent.hpp"
#include "recol/universe.hpp"

namespace recol {

/// Everything derived from one algebra and one vertex idempotent: the ideal
/// BeB, the quotient and corner presented as bound quiver algebras, vertex
/// index translations and arrow lifts back into B.
struct RecollementContext {
    AlgebraPtr B;
    VertexIdempotent e;
    QuotientData quo_data;
    Presented quo;
    CornerData cor_data;
    Presented cor;
    std::vector<int> quo_vertex_of_B;  // B vertex -> quotient vertex (or -1)
    std::vector<int> B_vertex_of_quo;
    std::vector<int> cor_vertex_of_B;  // B vertex -> corner vertex (or -1)
    std::vector<int> B_vertex_of_cor;
    // per quotient arrow: a parallel lift in B coordinates, endpoints in B
    std::vector<std::vector<std::uint32_t>> quo_arrow_lift;
    // per corner arrow: the representative as a parallel element of B
    std::vector<std::vector<std::uint32_t>> cor_arrow_lift;

    // action of a corner abstract element on a module over the presented corner
    Mat corner_action(const Module& n, int cu, int cw,
                      const std::vector<std::uint32_t>& abs_vec) const {
        return act_parallel(n, cu, cw, cor.to_presented(abs_vec));
    }
};

inline RecollementContext build_context(AlgebraPtr B, const VertexIdempotent& e,
                                        BuildOptions opts = {}) {
    RecollementContext ctx;
    ctx.B = B;
    ctx.e = e;
    ctx.quo_data = idempotent_quotient_abstract(*B, e);
    ctx.quo = present_as_bound_quiver(ctx.quo_data.abs, opts);
    ctx.cor_data = corner_abstract(*B, e);
    ctx.cor = present_as_bound_quiver(ctx.cor_data.abs, opts);

    const int nv = B->quiver.vertex_count();
    ctx.quo_vertex_of_B.assign(nv, -1);
    ctx.cor_vertex_of_B.assign(nv, -1);
    for (int qv = 0; qv < ctx.quo.alg->quiver.vertex_count(); ++qv) {
        int bv = B->quiver.vertex_index(ctx.quo.alg->quiver.vertex_names[qv]);
        ctx.quo_vertex_of_B[bv] = qv;
        ctx.B_vertex_of_quo.push_back(bv);
    }
    for (int cv = 0; cv < ctx.cor.alg->quiver.vertex_count(); ++cv) {
        int bv = B->quiver.vertex_index(ctx.cor.alg->quiver.vertex_names[cv]);
        ctx.cor_vertex_of_B[bv] = cv;
        ctx.B_vertex_of_cor.push_back(bv);
    }

    for (int a = 0; a < ctx.quo.alg->quiver.arrow_count(); ++a) {
        // canonical lift: abstract coordinates sit on the complement basis
        std::vector<std::uint32_t> lift(B->dim(), 0);
        const auto& rep = ctx.quo.arrow_rep[a];
        for (std::size_t i = 0; i < ctx.quo_data.free_coords.size(); ++i)
            lift[ctx.quo_data.free_coords[i]] = rep[i];
        ctx.quo_arrow_lift.push_back(std::move(lift));
    }
    for (int a = 0; a < ctx.cor.alg->quiver.arrow_count(); ++a)
        ctx.cor_arrow_lift.push_back(ctx.cor_data.embed(ctx.cor.arrow_rep[a], B->dim()));
    return ctx;
}

// ---------------------------------------------------------------------------
// i_* : inflation along B ->> B/BeB
// ---------------------------------------------------------------------------

inline Module apply_i_lower_star(const RecollementContext& ctx, const Module& n) {
    if (n.alg != ctx.quo.alg)
        throw std::invalid_argument("i_*: module is not over the quotient algebra");
    Module m = zero_module(ctx.B);
    for (int bv = 0; bv < ctx.B->quiver.vertex_count(); ++bv) {
        const int qv = ctx.quo_vertex_of_B[bv];
        m.dims[bv] = qv >= 0 ? n.dims[qv] : 0;
    }
    for (int a = 0; a < ctx.B->quiver.arrow_count(); ++a) {
        const int u = ctx.B->quiver.arrows[a].source, w = ctx.B->quiver.arrows[a].target;
        if (m.dims[u] == 0 || m.dims[w] == 0) {
            m.arrow_maps[a] = Mat(m.dims[w], m.dims[u], ctx.B->field);
            continue;
        }
        // the class of the arrow in the quotient, pulled back to the
        // presented algebra, acting on n
        std::vector<std::uint32_t> unit(ctx.B->dim(), 0);
        unit[ctx.B->arrow_index(a)] = 1;
        auto abs = ctx.quo_data.class_of(unit);
        auto pres = ctx.quo.to_presented(abs);
        m.arrow_maps[a] =
            act_parallel(n, ctx.quo_vertex_of_B[u], ctx.quo_vertex_of_B[w], pres);
    }
    return m;
}

inline ModuleMap apply_i_lower_star(const RecollementContext& ctx, const ModuleMap& f) {
    ModuleMap out{apply_i_lower_star(ctx, f.source), apply_i_lower_star(ctx, f.target), {}};
    for (int bv = 0; bv < ctx.B->quiver.vertex_count(); ++bv) {
        const int qv = ctx.quo_vertex_of_B[bv];
        out.vertex_maps.push_back(qv >= 0 ? f.vertex_maps[qv] : Mat(0, 0, ctx.B->field));
    }
    return out;
}

// ---------------------------------------------------------------------------
// i^* : M |-> M / M.BeB  and  i^! : M |-> {m : m.BeB = 0}
// ---------------------------------------------------------------------------

struct IStarData {
    Module result;                 // over the quotient algebra
    std::vector<Mat> projections;  // per B vertex: coords mod M.BeB
    std::vector<Mat> sections;     // unit lifts of the free coordinates
};

inline IStarData apply_i_star_data(const RecollementContext& ctx, const Module& m) {
    if (m.alg != ctx.B) throw std::invalid_argument("i^*: module is not over the middle algebra");
    const FieldSpec f = ctx.B->field;
    const int nv = ctx.B->quiver.vertex_count();
    std::vector<RowSpan> sub;
    for (int v = 0; v < nv; ++v) sub.emplace_back(m.dims[v], f);
    for (const auto& row : ctx.quo_data.ideal.basis()) {
        for (const auto& [u, w, comp] : graded_components(*ctx.B, row)) {
            Mat img = act_parallel(m, u, w, comp);
            for (std::size_t c = 0; c < img.cols(); ++c) {
                std::vector<std::uint32_t> col(img.rows());
                for (std::size_t r = 0; r < img.rows(); ++r) col[r] = img.at(r, c);
                sub[w].insert(col);
            }
        }
    }
    IStarData out;
    out.result = zero_module(ctx.quo.alg);
    out.projections.resize(nv);
    out.sections.resize(nv);
    for (int v = 0; v < nv; ++v) {
        const auto free = sub[v].free_columns();
        Mat proj(free.size(), m.dims[v], f);
        for (int c = 0; c < m.dims[v]; ++c) {
            std::vector<std::uint32_t> unit(m.dims[v], 0);
            unit[c] = 1;
            auto coords = sub[v].coords_mod(unit);
            for (std::size_t r = 0; r < coords.size(); ++r) proj.at(r, c) = coords[r];
        }
        Mat sec(m.dims[v], free.size(), f);
        for (std::size_t c = 0; c < free.size(); ++c) sec.at(free[c], c) = 1;
        out.projections[v] = std::move(proj);
        out.sections[v] = std::move(sec);
        const int qv = ctx.quo_vertex_of_B[v];
        if (qv >= 0)
            out.result.dims[qv] = static_cast<int>(free.size());
        else if (!free.empty())
            throw std::logic_error("i^*: idempotent vertex survived the quotient");
    }
    for (int a = 0; a < ctx.quo.alg->quiver.arrow_count(); ++a) {
        const int qu = ctx.quo.alg->quiver.arrows[a].source;
        const int qw = ctx.quo.alg->quiver.arrows[a].target;
        const int bu = ctx.B_vertex_of_quo[qu], bw = ctx.B_vertex_of_quo[qw];
        Mat act = act_parallel(m, bu, bw, ctx.quo_arrow_lift[a]);
        out.result.arrow_maps[a] = out.projections[bw] * (act * out.sections[bu]);
    }
    return out;
}

inline Module apply_i_star(const RecollementContext& ctx, const Module& m) {
    return apply_i_star_data(ctx, m).result;
}

inline ModuleMap apply_i_star(const RecollementContext& ctx, const ModuleMap& f) {
    auto src = apply_i_star_data(ctx, f.source);
    auto tgt = apply_i_star_data(ctx, f.target);
    ModuleMap out{src.result, tgt.result, {}};
    out.vertex_maps.resize(ctx.quo.alg->quiver.vertex_count(), Mat());
    for (int qv = 0; qv < ctx.quo.alg->quiver.vertex_count(); ++qv) {
        const int bv = ctx.B_vertex_of_quo[qv];
        out.vertex_maps[qv] = tgt.projections[bv] * (f.vertex_maps[bv] * src.sections[bv]);
    }
    return out;
}

struct IShriekData {
    Module result;                // over the quotient algebra
    std::vector<Mat> inclusions;  // per B vertex: kernel basis columns
};

inline IShriekData apply_i_shriek_data(const RecollementContext& ctx, const Module& m) {
    if (m.alg != ctx.B) throw std::invalid_argument("i^!: module is not over the middle algebra");
    const FieldSpec f = ctx.B->field;
    const int nv = ctx.B->quiver.vertex_count();
    IShriekData out;
    out.result = zero_module(ctx.quo.alg);
    out.inclusions.resize(nv);
    for (int v = 0; v < nv; ++v) {
        // stack the actions of all graded ideal components with source v
        std::vector<Mat> stack;
        for (const auto& row : ctx.quo_data.ideal.basis())
            for (const auto& [u, w, comp] : graded_components(*ctx.B, row))
                if (u == v) stack.push_back(act_parallel(m, u, w, comp));
        Mat sys(0, m.dims[v], f);
        for (const auto& s : stack) sys = Mat::vstack(sys, s);
        auto sol = rref_solve(sys);
        Mat incl(m.dims[v], sol.kernel_basis.size(), f);
        for (std::size_t c = 0; c < sol.kernel_basis.size(); ++c)
            for (int r = 0; r < m.dims[v]; ++r) incl.at(r, c) = sol.kernel_basis[c].at(r, 0);
        out.inclusions[v] = std::move(incl);
        const int qv = ctx.quo_vertex_of_B[v];
        if (qv >= 0)
            out.result.dims[qv] = static_cast<int>(sol.kernel_basis.size());
        else if (!sol.kernel_basis.empty())
            throw std::logic_error("i^!: idempotent vertex survived the annihilator");
    }
    for (int a = 0; a < ctx.quo.alg->quiver.arrow_count(); ++a) {
        const int qu = ctx.quo.alg->quiver.arrows[a].source;
        const int qw = ctx.quo.alg->quiver.arrows[a].target;
        const int bu = ctx.B_vertex_of_quo[qu], bw = ctx.B_vertex_of_quo[qw];
        Mat act = act_parallel(m, bu, bw, ctx.quo_arrow_lift[a]);
        auto sol = rref_solve(out.inclusions[bw], act * out.inclusions[bu]);
        if (!sol.particular) throw std::logic_error("i^!: annihilator not arrow-closed");
        out.result.arrow_maps[a] = *sol.particular;
    }
    return out;
}

inline Module apply_i_shriek(const RecollementContext& ctx, const Module& m) {
    return apply_i_shriek_data(ctx, m).result;
}

inline ModuleMap apply_i_shriek(const RecollementContext& ctx, const ModuleMap& f) {
    auto src = apply_i_shriek_data(ctx, f.source);
    auto tgt = apply_i_shriek_data(ctx, f.target);
    ModuleMap out{src.result, tgt.result, {}};
    out.vertex_maps.resize(ctx.quo.alg->quiver.vertex_count(), Mat());
    for (int qv = 0; qv < ctx.quo.alg->quiver.vertex_count(); ++qv) {
        const int bv = ctx.B_vertex_of_quo[qv];
        auto sol = rref_solve(tgt.inclusions[bv], f.vertex_maps[bv] * src.inclusions[bv]);
        if (!sol.particular) throw std::logic_error("i^! on a map: image leaves the annihilator");
        out.vertex_maps[qv] = *sol.particular;
    }
    return out;
}

// ---------------------------------------------------------------------------
// j^* : restriction to the corner
// ---------------------------------------------------------------------------

inline Module apply_j_star(const RecollementContext& ctx, const Module& m) {
    if (m.alg != ctx.B) throw std::invalid_argument("j^*: module is not over the middle algebra");
    Module n = zero_module(ctx.cor.alg);
    for (int cv = 0; cv < ctx.cor.alg->quiver.vertex_count(); ++cv)
        n.dims[cv] = m.dims[ctx.B_vertex_of_cor[cv]];
    for (int a = 0; a < ctx.cor.alg->quiver.arrow_count(); ++a) {
        const int cu = ctx.cor.alg->quiver.arrows[a].source;
        const int cw = ctx.cor.alg->quiver.arrows[a].target;
        n.arrow_maps[a] = act_parallel(m, ctx.B_vertex_of_cor[cu], ctx.B_vertex_of_cor[cw],
                                       ctx.cor_arrow_lift[a]);
    }
    return n;
}

inline ModuleMap apply_j_star(const RecollementContext& ctx, const ModuleMap& f) {
    ModuleMap out{apply_j_star(ctx, f.source), apply_j_star(ctx, f.target), {}};
    for (int cv = 0; cv < ctx.cor.alg->quiver.vertex_count(); ++cv)
        out.vertex_maps.push_back(f.vertex_maps[ctx.B_vertex_of_cor[cv]]);
    return out;
}

// ---------------------------------------------------------------------------
// j_! : N |-> N (x)_{eBe} eB
// ---------------------------------------------------------------------------

struct TensorStructure {
    Module result;  // over B
    // generators per B vertex: (eb index, local basis index of N at the
    // corner vertex of the eb element's source)
    std::vector<int> eb;  // B basis indices with source in E
    std::vector<std::vector<std::pair<int, int>>> gens;  // per B vertex
    std::vector<RowSpan> rels;                            // per B vertex
    std::vector<std::vector<std::size_t>> free;           // per B vertex

    std::vector<std::uint32_t> project(int v, const std::vector<std::uint32_t>& full) const {
        return rels[v].coords_mod(full);
    }
};

inline TensorStructure build_tensor(const RecollementContext& ctx, const Module& n) {
    if (n.alg != ctx.cor.alg)
        throw std::invalid_argument("j_!: module is not over the corner algebra");
    const FieldSpec f = ctx.B->field;
    const int nv = ctx.B->quiver.vertex_count();
    TensorStructure ts;
    for (int b = 0; b < ctx.B->dim(); ++b)
        if (ctx.e.contains(ctx.B->src(b))) ts.eb.push_back(b);

    auto eb_pos = [&](int b) {
        for (std::size_t i = 0; i < ts.eb.size(); ++i)
            if (ts.eb[i] == b) return static_cast<int>(i);
        return -1;
    };

    ts.gens.resize(nv);
    for (std::size_t i = 0; i < ts.eb.size(); ++i) {
        const int x = ts.eb[i];
        const int cw = ctx.cor_vertex_of_B[ctx.B->src(x)];
        for (int k = 0; k < n.dims[cw]; ++k)
            ts.gens[ctx.B->tgt(x)].push_back({static_cast<int>(i), k});
    }
    auto gen_pos = [&](int v, int ebi, int k) {
        for (std::size_t g = 0; g < ts.gens[v].size(); ++g)
            if (ts.gens[v][g] == std::make_pair(ebi, k)) return g;
        throw std::logic_error("tensor generator lookup failed");
    };

    for (int v = 0; v < nv; ++v) ts.rels.emplace_back(ts.gens[v].size(), f);

    // relations (n.c) (x) x - n (x) (c.x) for corner basis c and eb basis x
    for (std::size_t ci = 0; ci < ctx.cor_data.corner_basis.size(); ++ci) {
        const int cb = ctx.cor_data.corner_basis[ci];
        const int c_src = ctx.B->src(cb), c_tgt = ctx.B->tgt(cb);
        std::vector<std::uint32_t> c_abs(ctx.cor_data.corner_basis.size(), 0);
        c_abs[ci] = 1;
        for (std::size_t xi = 0; xi < ts.eb.size(); ++xi) {
            const int x = ts.eb[xi];
            if (ctx.B->src(x) != c_tgt) continue;
            const int v = ctx.B->tgt(x);
            Mat act = ctx.corner_action(n, ctx.cor_vertex_of_B[c_src],
                                        ctx.cor_vertex_of_B[c_tgt], c_abs);
            const auto& cx = ctx.B->mult(cb, x);  // c.x in B, supported on eb
            for (int k = 0; k < n.dims[ctx.cor_vertex_of_B[c_src]]; ++k) {
                std::vector<std::uint32_t> rel(ts.gens[v].size(), 0);
                // (n_k . c) (x) x
                for (std::size_t r = 0; r < act.rows(); ++r) {
                    if (!act.at(r, k)) continue;
                    const std::size_t g = gen_pos(v, static_cast<int>(xi), static_cast<int>(r));
                    rel[g] = f.add(rel[g], act.at(r, k));
                }
                // - n_k (x) (c.x)
                for (int y = 0; y < ctx.B->dim(); ++y) {
                    if (!cx[y]) continue;
                    const int ypos = eb_pos(y);
                    if (ypos < 0) throw std::logic_error("c.x left the eB span");
                    const std::size_t g = gen_pos(v, ypos, k);
                    rel[g] = f.sub(rel[g], cx[y]);
                }
                ts.rels[v].insert(rel);
            }
        }
    }

    ts.result = zero_module(ctx.B);
    ts.free.resize(nv);
    for (int v = 0; v < nv; ++v) {
        ts.free[v] = ts.rels[v].free_columns();
        ts.result.dims[v] = static_cast<int>(ts.free[v].size());
    }
    for (int a = 0; a < ctx.B->quiver.arrow_count(); ++a) {
        const int u = ctx.B->quiver.arrows[a].source, w = ctx.B->quiver.arrows[a].target;
        Mat mat(ts.result.dims[w], ts.result.dims[u], f);
        for (std::size_t c = 0; c < ts.free[u].size(); ++c) {
            const auto [xi, k] = ts.gens[u][ts.free[u][c]];
            const auto& xa = ctx.B->mult(ts.eb[xi], ctx.B->arrow_index(a));
            std::vector<std::uint32_t> full(ts.gens[w].size(), 0);
            for (int y = 0; y < ctx.B->dim(); ++y) {
                if (!xa[y]) continue;
                const int ypos = eb_pos(y);
                if (ypos < 0) throw std::logic_error("x.a left the eB span");
                const std::size_t g = gen_pos(w, ypos, k);
                full[g] = f.add(full[g], xa[y]);
            }
            auto coords = ts.project(w, full);
            for (std::size_t r = 0; r < coords.size(); ++r) mat.at(r, c) = coords[r];
        }
        ts.result.arrow_maps[a] = std::move(mat);
    }
    return ts;
}

inline Module apply_j_shriek(const RecollementContext& ctx, const Module& n) {
    return build_tensor(ctx, n).result;
}

inline ModuleMap apply_j_shriek(const RecollementContext& ctx, const ModuleMap& fmap) {
    auto src = build_tensor(ctx, fmap.source);
    auto tgt = build_tensor(ctx, fmap.target);
    const FieldSpec f = ctx.B->field;
    ModuleMap out{src.result, tgt.result, {}};
    for (int v = 0; v < ctx.B->quiver.vertex_count(); ++v) {
        Mat mat(tgt.result.dims[v], src.result.dims[v], f);
        for (std::size_t c = 0; c < src.free[v].size(); ++c) {
            const auto [xi, k] = src.gens[v][src.free[v][c]];
            const int cw = ctx.cor_vertex_of_B[ctx.B->src(src.eb[xi])];
            std::vector<std::uint32_t> full(tgt.gens[v].size(), 0);
            const Mat& fv = fmap.vertex_maps[cw];
            for (std::size_t r = 0; r < fv.rows(); ++r) {
                if (!fv.at(r, k)) continue;
                // same eb element, mapped coefficient
                for (std::size_t g = 0; g < tgt.gens[v].size(); ++g)
                    if (tgt.gens[v][g] == std::make_pair(xi, static_cast<int>(r)))
                        full[g] = f.add(full[g], fv.at(r, k));
            }
            auto coords = tgt.project(v, full);
            for (std::size_t r = 0; r < coords.size(); ++r) mat.at(r, c) = coords[r];
        }
        out.vertex_maps.push_back(std::move(mat));
    }
    return out;
}

// ---------------------------------------------------------------------------
// j_* : N |-> Hom_{eBe}(Be, N)
// ---------------------------------------------------------------------------

struct HomFunctorStructure {
    Module result;  // over B
    std::vector<int> be;  // B basis indices with target in E
    std::vector<std::vector<int>> comp;  // be positions per source vertex
    // unknown layout per vertex v: for each x (position in comp[v]), a block
    // of N.dims[corner vertex of tgt(x)] coefficients
    std::vector<std::vector<std::vector<std::uint32_t>>> solutions;  // per v: basis of solutions
};

inline HomFunctorStructure build_hom_functor(const RecollementContext& ctx, const Module& n) {
    if (n.alg != ctx.cor.alg)
        throw std::invalid_argument("j_*: module is not over the corner algebra");
    const FieldSpec f = ctx.B->field;
    const int nv = ctx.B->quiver.vertex_count();
    HomFunctorStructure hs;
    for (int b = 0; b < ctx.B->dim(); ++b)
        if (ctx.e.contains(ctx.B->tgt(b))) hs.be.push_back(b);
    hs.comp.resize(nv);
    for (std::size_t i = 0; i < hs.be.size(); ++i)
        hs.comp[ctx.B->src(hs.be[i])].push_back(static_cast<int>(i));

    auto block_layout = [&](int v) {
        std::vector<std::size_t> offset;
        std::size_t total = 0;
        for (int pos : hs.comp[v]) {
            offset.push_back(total);
            total += n.dims[ctx.cor_vertex_of_B[ctx.B->tgt(hs.be[pos])]];
        }
        return std::make_pair(offset, total);
    };
    auto be_local = [&](int v, int b) {
        for (std::size_t i = 0; i < hs.comp[v].size(); ++i)
            if (hs.be[hs.comp[v][i]] == b) return static_cast<int>(i);
        return -1;
    };

    hs.result = zero_module(ctx.B);
    hs.solutions.resize(nv);
    for (int v = 0; v < nv; ++v) {
        auto [offset, total] = block_layout(v);
        if (total == 0) {
            hs.result.dims[v] = 0;
            continue;
        }
        std::vector<std::vector<std::uint32_t>> eqs;
        for (std::size_t ci = 0; ci < ctx.cor_data.corner_basis.size(); ++ci) {
            const int cb = ctx.cor_data.corner_basis[ci];
            const int c_src = ctx.B->src(cb), c_tgt = ctx.B->tgt(cb);
            std::vector<std::uint32_t> c_abs(ctx.cor_data.corner_basis.size(), 0);
            c_abs[ci] = 1;
            Mat act = ctx.corner_action(n, ctx.cor_vertex_of_B[c_src],
                                        ctx.cor_vertex_of_B[c_tgt], c_abs);
            for (std::size_t li = 0; li < hs.comp[v].size(); ++li) {
                const int x = hs.be[hs.comp[v][li]];
                if (ctx.B->tgt(x) != c_src) continue;
                const auto& xc = ctx.B->mult(x, cb);  // x.c, supported on be at v
                // equation: f(x.c) - f(x).c = 0, one row per target coordinate
                const int rows = n.dims[ctx.cor_vertex_of_B[c_tgt]];
                for (int r = 0; r < rows; ++r) {
                    std::vector<std::uint32_t> eq(total, 0);
                    for (int y = 0; y < ctx.B->dim(); ++y) {
                        if (!xc[y]) continue;
                        const int yl = be_local(v, y);
                        if (yl < 0) throw std::logic_error("x.c left the Be span");
                        eq[offset[yl] + r] = f.add(eq[offset[yl] + r], xc[y]);
                    }
                    for (std::size_t k = 0; k < act.cols(); ++k)
                        eq[offset[li] + k] = f.sub(eq[offset[li] + k], act.at(r, k));
                    eqs.push_back(std::move(eq));
                }
            }
        }
        Mat sys(eqs.size(), total, f);
        for (std::size_t r = 0; r < eqs.size(); ++r)
            for (std::size_t c = 0; c < total; ++c) sys.at(r, c) = eqs[r][c];
        auto sol = rref_solve(sys);
        for (const auto& kv : sol.kernel_basis) {
            std::vector<std::uint32_t> s(total);
            for (std::size_t i = 0; i < total; ++i) s[i] = kv.at(i, 0);
            hs.solutions[v].push_back(std::move(s));
        }
        hs.result.dims[v] = static_cast<int>(hs.solutions[v].size());
    }

    // arrow a: u -> v sends a solution f over comp[u] to x |-> f(a.x) over comp[v]
    for (int a = 0; a < ctx.B->quiver.arrow_count(); ++a) {
        const int u = ctx.B->quiver.arrows[a].source, w = ctx.B->quiver.arrows[a].target;
        auto [off_u, tot_u] = block_layout(u);
        auto [off_w, tot_w] = block_layout(w);
        Mat mat(hs.result.dims[w], hs.result.dims[u], f);
        if (hs.result.dims[w] > 0 && hs.result.dims[u] > 0) {
            // express each mapped functional in the solution basis at w
            Mat basis_w(tot_w, hs.solutions[w].size(), f);
            for (std::size_t c = 0; c < hs.solutions[w].size(); ++c)
                for (std::size_t r = 0; r < tot_w; ++r) basis_w.at(r, c) = hs.solutions[w][c][r];
            Mat images(tot_w, hs.solutions[u].size(), f);
            for (std::size_t c = 0; c < hs.solutions[u].size(); ++c) {
                const auto& fu = hs.solutions[u][c];
                for (std::size_t li = 0; li < hs.comp[w].size(); ++li) {
                    const int x = hs.be[hs.comp[w][li]];
                    const auto& ax = ctx.B->mult(ctx.B->arrow_index(a), x);  // a.x in u's comp
                    for (int y = 0; y < ctx.B->dim(); ++y) {
                        if (!ax[y]) continue;
                        int yl = -1;
                        for (std::size_t i = 0; i < hs.comp[u].size(); ++i)
                            if (hs.be[hs.comp[u][i]] == y) yl = static_cast<int>(i);
                        if (yl < 0) throw std::logic_error("a.x left the Be span");
                        const int rows = n.dims[ctx.cor_vertex_of_B[ctx.B->tgt(x)]];
                        for (int r = 0; r < rows; ++r)
                            images.at(off_w[li] + r, c) =
                                f.add(images.at(off_w[li] + r, c),
                                      f.mul(ax[y], fu[off_u[yl] + r]));
                    }
                }
            }
            auto sol = rref_solve(basis_w, images);
            if (!sol.particular)
                throw std::logic_error("j_* arrow action left the solution space");
            mat = *sol.particular;
        }
        hs.result.arrow_maps[a] = std::move(mat);
    }
    return hs;
}

inline Module apply_j_lower_star(const RecollementContext& ctx, const Module& n) {
    return build_hom_functor(ctx, n).result;
}

inline ModuleMap apply_j_lower_star(const RecollementContext& ctx, const ModuleMap& fmap) {
    auto src = build_hom_functor(ctx, fmap.source);
    auto tgt = build_hom_functor(ctx, fmap.target);
    const FieldSpec f = ctx.B->field;
    ModuleMap out{src.result, tgt.result, {}};
    for (int v = 0; v < ctx.B->quiver.vertex_count(); ++v) {
        Mat mat(tgt.result.dims[v], src.result.dims[v], f);
        if (tgt.result.dims[v] > 0 && src.result.dims[v] > 0) {
            // layout blocks coincide in x; postcompose values with fmap
            std::size_t tot_t = tgt.solutions[v][0].size();
            Mat basis_t(tot_t, tgt.solutions[v].size(), f);
            for (std::size_t c = 0; c < tgt.solutions[v].size(); ++c)
                for (std::size_t r = 0; r < tot_t; ++r) basis_t.at(r, c) = tgt.solutions[v][c][r];
            Mat images(tot_t, src.solutions[v].size(), f);
            for (std::size_t c = 0; c < src.solutions[v].size(); ++c) {
                const auto& s = src.solutions[v][c];
                std::size_t src_off = 0, tgt_off = 0;
                for (int pos : src.comp[v]) {
                    const int cw = ctx.cor_vertex_of_B[ctx.B->tgt(src.be[pos])];
                    const Mat& fv = fmap.vertex_maps[cw];
                    for (std::size_t r = 0; r < fv.rows(); ++r) {
                        std::uint32_t acc = 0;
                        for (std::size_t k = 0; k < fv.cols(); ++k)
                            acc = f.add(acc, f.mul(fv.at(r, k), s[src_off + k]));
                        images.at(tgt_off + r, c) = acc;
                    }
                    src_off += fv.cols();
                    tgt_off += fv.rows();
                }
            }
            auto sol = rref_solve(basis_t, images);
            if (!sol.particular) throw std::logic_error("j_* on a map left the solution space");
            mat = *sol.particular;
        }
        out.vertex_maps.push_back(std::move(mat));
    }
    return out;
}

enum class Functor { IStar, ILowerStar, IShriek, JStar, JShriek, JLowerStar };

inline const char* functor_name(Functor f) {
    switch (f) {
        case Functor::IStar: return "i^*";
        case Functor::ILowerStar: return "i_*";
        case Functor::IShriek: return "i^!";
        case Functor::JStar: return "j^*";
        case Functor::JShriek: return "j_!";
        case Functor::JLowerStar: return "j_*";
    }
    return "?";
}

inline Module apply_functor(const RecollementContext& ctx, Functor which, const Module& m) {
    switch (which) {
        case Functor::IStar: return apply_i_star(ctx, m);
        case Functor::ILowerStar: return apply_i_lower_star(ctx, m);
        case Functor::IShriek: return apply_i_shriek(ctx, m);
        case Functor::JStar: return apply_j_star(ctx, m);
        case Functor::JShriek: return apply_j_shriek(ctx, m);
        case Functor::JLowerStar: return apply_j_lower_star(ctx, m);
    }
    throw std::logic_error("unknown functor");
}

inline ModuleMap apply_functor(const RecollementContext& ctx, Functor which, const ModuleMap& f) {
    switch (which) {
        case Functor::IStar: return apply_i_star(ctx, f);
        case Functor::ILowerStar: return apply_i_lower_star(ctx, f);
        case Functor::IShriek: return apply_i_shriek(ctx, f);
        case Functor::JStar: return apply_j_star(ctx, f);
        case Functor::JShriek: return apply_j_shriek(ctx, f);
        case Functor::JLowerStar: return apply_j_lower_star(ctx, f);
    }
    throw std::logic_error("unknown functor");
}

}  // namespace recol
