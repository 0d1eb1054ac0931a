#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "recol/mat.hpp"
#include "recol/quiver.hpp"

namespace recol {

/// A finite-dimensional bound quiver algebra kQ/I over GF(p), I admissible.
/// The basis consists of residue classes of paths ("normal paths"); the
/// multiplication table is exact. Immutable after construction.
class BoundQuiverAlgebra {
  public:
    Quiver quiver;
    FieldSpec field;
    std::vector<Relation> relations;
    std::vector<PathWord> basis;  // sorted by (length, generation order)

    int dim() const { return static_cast<int>(basis.size()); }
    bool is_zero_algebra() const { return quiver.vertex_count() == 0; }

    int src(int b) const { return basis[b].source; }
    int tgt(int b) const { return basis[b].target; }
    int len(int b) const { return basis[b].length(); }

    /// Basis index of the trivial path at vertex v.
    int idempotent_index(int v) const { return e_of_vertex_.at(v); }
    /// Basis index of arrow a (arrows always survive in an admissible quotient).
    int arrow_index(int a) const { return arrow_basis_.at(a); }

    const std::vector<std::uint32_t>& mult(int i, int j) const {
        return mult_table_[i * dim() + j];
    }

    std::vector<std::uint32_t> mult_vec(const std::vector<std::uint32_t>& x,
                                        const std::vector<std::uint32_t>& y) const {
        std::vector<std::uint32_t> out(dim(), 0);
        for (int i = 0; i < dim(); ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < dim(); ++j) {
                if (!y[j]) continue;
                const std::uint32_t c = field.mul(x[i], y[j]);
                const auto& prod = mult(i, j);
                for (int k = 0; k < dim(); ++k)
                    if (prod[k]) out[k] = field.add(out[k], field.mul(c, prod[k]));
            }
        }
        return out;
    }

    std::vector<std::uint32_t> unit() const {
        std::vector<std::uint32_t> u(dim(), 0);
        for (int v = 0; v < quiver.vertex_count(); ++v) u[idempotent_index(v)] = 1;
        return u;
    }

    /// Basis indices of the radical (classes of paths of length >= 1).
    std::vector<int> radical_basis() const {
        std::vector<int> out;
        for (int b = 0; b < dim(); ++b)
            if (len(b) >= 1) out.push_back(b);
        return out;
    }

    std::string vertex_name(int v) const { return quiver.vertex_names[v]; }

    /// Structural fingerprint used in reports: quiver + relations + field.
    std::string describe() const {
        std::string s = "p=" + std::to_string(field.p) + ";V=";
        for (const auto& v : quiver.vertex_names) s += v + ",";
        s += ";A=";
        for (const auto& a : quiver.arrows)
            s += a.name + ":" + quiver.vertex_names[a.source] + ">" +
                 quiver.vertex_names[a.target] + ",";
        s += ";R=" + std::to_string(relations.size()) + ";dim=" + std::to_string(dim());
        return s;
    }

    // Construction state, filled by build_algebra.
    std::map<int, int> e_of_vertex_;
    std::vector<int> arrow_basis_;
    std::vector<std::vector<std::uint32_t>> mult_table_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

struct BuildOptions {
    int max_cap = 24;           // longest path length tried before giving up
    long long max_paths = 200000;
};

namespace detail {

struct PathEnum {
    std::vector<PathWord> paths;           // by (length, generation order)
    std::map<PathWord, int> index;
    std::vector<std::size_t> level_start;  // level_start[l] = first index of length l

    static PathEnum up_to(const Quiver& q, int cap, long long max_paths) {
        PathEnum pe;
        for (int v = 0; v < q.vertex_count(); ++v) {
            PathWord w{v, v, {}};
            pe.index[w] = static_cast<int>(pe.paths.size());
            pe.paths.push_back(std::move(w));
        }
        pe.level_start = {0};
        std::size_t lo = 0, hi = pe.paths.size();
        for (int l = 1; l <= cap; ++l) {
            pe.level_start.push_back(hi);
            for (std::size_t i = lo; i < hi; ++i) {
                for (int a = 0; a < q.arrow_count(); ++a) {
                    if (q.arrows[a].source != pe.paths[i].target) continue;
                    PathWord w = pe.paths[i];
                    w.arrows.push_back(a);
                    w.target = q.arrows[a].target;
                    pe.index[w] = static_cast<int>(pe.paths.size());
                    pe.paths.push_back(std::move(w));
                    if (static_cast<long long>(pe.paths.size()) > max_paths)
                        throw std::runtime_error(
                            "path enumeration exploded; algebra is likely "
                            "infinite-dimensional (cycle without relations)");
                }
            }
            lo = hi;
            hi = pe.paths.size();
        }
        pe.level_start.push_back(hi);
        return pe;
    }
};

// Ideal vectors are stored with reversed coordinates so that RowSpan pivots
// land on the longest paths and the surviving (free) coordinates are the
// shortest representatives.
struct TruncatedIdeal {
    const PathEnum& pe;
    RowSpan span;

    TruncatedIdeal(const PathEnum& p, FieldSpec f)
        : pe(p), span(p.paths.size(), f) {}

    std::vector<std::uint32_t> rev(std::vector<std::uint32_t> v) const {
        std::reverse(v.begin(), v.end());
        return v;
    }

    bool insert(const std::vector<std::uint32_t>& v) { return span.insert(rev(v)); }
    std::vector<std::uint32_t> reduce(const std::vector<std::uint32_t>& v) const {
        return rev(span.reduce(rev(v)));
    }
    bool is_pivot_path(int path_idx) const {
        const std::size_t revidx = pe.paths.size() - 1 - path_idx;
        for (std::size_t p : span.pivots())
            if (p == revidx) return true;
        return false;
    }
};

struct SaturationAttempt {
    int cap = 0;
    PathEnum pe;
    TruncatedIdeal ideal;
    std::vector<int> surviving;  // path indices, in enumeration order

    SaturationAttempt(const Quiver& q, FieldSpec f, int cap_, long long max_paths)
        : cap(cap_), pe(PathEnum::up_to(q, cap_, max_paths)), ideal(pe, f) {}
};

inline void saturate(SaturationAttempt& at, const Quiver& q, FieldSpec f,
                     const std::vector<Relation>& rels) {
    const std::size_t n = at.pe.paths.size();
    std::queue<std::vector<std::uint32_t>> work;
    auto push_vec = [&](const std::vector<std::uint32_t>& v) {
        if (at.ideal.insert(v)) work.push(v);
    };
    for (const auto& rel : rels) {
        std::vector<std::uint32_t> v(n, 0);
        for (const auto& term : rel) {
            if (static_cast<int>(term.arrows.size()) > at.cap) continue;  // truncated away
            PathWord w;
            w.source = q.arrows[term.arrows.front()].source;
            w.target = q.arrows[term.arrows.back()].target;
            w.arrows = term.arrows;
            v[at.pe.index.at(w)] = f.add(v[at.pe.index.at(w)], term.coeff);
        }
        push_vec(v);
    }
    while (!work.empty()) {
        const auto v = std::move(work.front());
        work.pop();
        for (int a = 0; a < q.arrow_count(); ++a) {
            std::vector<std::uint32_t> left(n, 0), right(n, 0);
            bool any_l = false, any_r = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (!v[i]) continue;
                const PathWord& w = at.pe.paths[i];
                if (w.length() < at.cap) {
                    if (q.arrows[a].target == w.source) {  // a then w
                        PathWord nw{q.arrows[a].source, w.target, {}};
                        nw.arrows.reserve(w.arrows.size() + 1);
                        nw.arrows.push_back(a);
                        nw.arrows.insert(nw.arrows.end(), w.arrows.begin(), w.arrows.end());
                        left[at.pe.index.at(nw)] = f.add(left[at.pe.index.at(nw)], v[i]);
                        any_l = true;
                    }
                    if (w.target == q.arrows[a].source) {  // w then a
                        PathWord nw{w.source, q.arrows[a].target, w.arrows};
                        nw.arrows.push_back(a);
                        right[at.pe.index.at(nw)] = f.add(right[at.pe.index.at(nw)], v[i]);
                        any_r = true;
                    }
                }
            }
            if (any_l) push_vec(left);
            if (any_r) push_vec(right);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!at.ideal.is_pivot_path(static_cast<int>(i)))
            at.surviving.push_back(static_cast<int>(i));
}

inline bool has_survivor_of_length(const SaturationAttempt& at, int l) {
    for (int i : at.surviving)
        if (at.pe.paths[i].length() == l) return true;
    return false;
}

}  // namespace detail

inline void validate_relations(const Quiver& q, FieldSpec f, std::vector<Relation>& rels) {
    for (auto& rel : rels) {
        Relation kept;
        int src = -1, tgt = -1;
        for (auto& term : rel) {
            term.coeff %= f.p;
            if (term.coeff == 0) continue;
            if (term.arrows.empty())
                throw std::invalid_argument("relation term with empty path");
            if (term.arrows.size() < 2)
                throw std::invalid_argument(
                    "relation contains a path of length < 2; ideal not admissible");
            int s = q.arrows[term.arrows.front()].source;
            int t = q.arrows[term.arrows.back()].target;
            for (std::size_t i = 0; i + 1 < term.arrows.size(); ++i)
                if (q.arrows[term.arrows[i]].target != q.arrows[term.arrows[i + 1]].source)
                    throw std::invalid_argument("relation term is not a composable path");
            if (src == -1) { src = s; tgt = t; }
            else if (src != s || tgt != t)
                throw std::invalid_argument("relation mixes non-parallel paths");
            kept.push_back(term);
        }
        rel = std::move(kept);
    }
    std::erase_if(rels, [](const Relation& r) { return r.empty(); });
}

/// Build a bound quiver algebra by breadth-first path generation and linear
/// ideal saturation. The path-length cap grows until the surviving basis is
/// stable across two consecutive caps and no maximal-length path survives;
/// failure to stabilize is reported as an infinite-dimensional (or
/// non-admissible) input.
inline AlgebraPtr build_algebra(Quiver quiver, FieldSpec field,
                                std::vector<Relation> relations,
                                BuildOptions opts = {}) {
    quiver.validate();
    validate_relations(quiver, field, relations);

    if (quiver.vertex_count() == 0) {  // the zero algebra
        auto zero = std::make_shared<BoundQuiverAlgebra>();
        zero->quiver = std::move(quiver);
        zero->field = field;
        return zero;
    }

    int max_rel_len = 2;
    for (const auto& rel : relations)
        for (const auto& term : rel)
            max_rel_len = std::max(max_rel_len, static_cast<int>(term.arrows.size()));

    std::unique_ptr<detail::SaturationAttempt> accepted;
    std::unique_ptr<detail::SaturationAttempt> prev;
    for (int cap = max_rel_len + 1; cap <= opts.max_cap; ++cap) {
        auto at = std::make_unique<detail::SaturationAttempt>(quiver, field, cap, opts.max_paths);
        detail::saturate(*at, quiver, field, relations);
        const bool ok = !detail::has_survivor_of_length(*at, cap);
        if (ok && prev) {
            // stability across two caps: identical surviving path sets
            std::vector<PathWord> a, b;
            for (int i : prev->surviving) a.push_back(prev->pe.paths[i]);
            for (int i : at->surviving) b.push_back(at->pe.paths[i]);
            if (a == b) {
                accepted = std::move(at);
                break;
            }
        }
        prev = ok ? std::move(at) : nullptr;
    }
    if (!accepted)
        throw std::runtime_error(
            "algebra did not saturate below the path-length cap: it is "
            "infinite-dimensional (cycle without relations) or the relations "
            "are not admissible");

    auto alg = std::make_shared<BoundQuiverAlgebra>();
    alg->quiver = quiver;
    alg->field = field;
    alg->relations = relations;
    const auto& pe = accepted->pe;
    std::map<int, int> basis_of_path;  // path idx -> basis idx
    for (int i : accepted->surviving) {
        basis_of_path[i] = static_cast<int>(alg->basis.size());
        alg->basis.push_back(pe.paths[i]);
    }
    const int d = alg->dim();

    for (int v = 0; v < quiver.vertex_count(); ++v) {
        PathWord w{v, v, {}};
        auto it = basis_of_path.find(pe.index.at(w));
        if (it == basis_of_path.end())
            throw std::logic_error("trivial path eliminated; ideal was not admissible");
        alg->e_of_vertex_[v] = it->second;
    }
    for (int a = 0; a < quiver.arrow_count(); ++a) {
        PathWord w{quiver.arrows[a].source, quiver.arrows[a].target, {a}};
        auto it = basis_of_path.find(pe.index.at(w));
        if (it == basis_of_path.end())
            throw std::logic_error("arrow eliminated; ideal was not admissible");
        alg->arrow_basis_.push_back(it->second);
    }

    alg->mult_table_.assign(static_cast<std::size_t>(d) * d,
                            std::vector<std::uint32_t>(d, 0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const PathWord& u = alg->basis[i];
            const PathWord& w = alg->basis[j];
            if (u.target != w.source) continue;
            if (u.length() + w.length() > accepted->cap) continue;  // saturated to zero
            PathWord cat{u.source, w.target, u.arrows};
            cat.arrows.insert(cat.arrows.end(), w.arrows.begin(), w.arrows.end());
            std::vector<std::uint32_t> unit(pe.paths.size(), 0);
            unit[pe.index.at(cat)] = 1;
            const auto red = accepted->ideal.reduce(unit);
            auto& row = alg->mult_table_[i * d + j];
            for (const auto& [pidx, bidx] : basis_of_path) row[bidx] = red[pidx];
        }
    }

    if (d <= 16) {  // cheap at desk scale; catches reduction bugs loudly
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    std::vector<std::uint32_t> ei(d, 0), ej(d, 0), ek(d, 0);
                    ei[i] = ej[j] = ek[k] = 1;
                    auto lhs = alg->mult_vec(alg->mult_vec(ei, ej), ek);
                    auto rhs = alg->mult_vec(ei, alg->mult_vec(ej, ek));
                    if (lhs != rhs)
                        throw std::logic_error("multiplication table is not associative");
                }
    }
    return alg;
}

/// The opposite algebra: reversed quiver, reversed relation words. Right
/// modules over it are left modules over the original.
inline AlgebraPtr opposite_algebra(const BoundQuiverAlgebra& alg, BuildOptions opts = {}) {
    Quiver rq = alg.quiver.reversed();
    std::vector<Relation> rrels;
    for (const auto& rel : alg.relations) {
        Relation rr;
        for (const auto& term : rel) {
            RelationTerm t = term;
            std::reverse(t.arrows.begin(), t.arrows.end());
            rr.push_back(std::move(t));
        }
        rrels.push_back(std::move(rr));
    }
    return build_algebra(std::move(rq), alg.field, std::move(rrels), opts);
}

}  // namespace recol
