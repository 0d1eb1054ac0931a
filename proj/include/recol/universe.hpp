#pragma once

#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "recol/resolve.hpp"

namespace recol {

struct EnumOptions {
    long long candidate_cap = 4000000;  // arrow-map tuples per dimension vector
    IsoOptions iso;
};

/// All-degrees Ext-vanishing evidence for a pair (M, N). The verdict is
/// decided from the syzygy-class orbit of M: sound for every i >= 1 when the
/// orbit closes inside the enumerated universe, otherwise only up to a stated
/// bound.
struct ExtCertificate {
    enum class Verdict { VanishesAll, Nonzero, BoundedOnly };
    Verdict verdict = Verdict::VanishesAll;
    int nonzero_degree = 0;        // set when verdict == Nonzero
    int bound_used = 0;            // set when verdict == BoundedOnly
    int pre_period = 0, period = 0;
    std::vector<int> ext_dims;     // dim Ext^i for i = 1..ext_dims.size()

    bool vanishes_all() const { return verdict == Verdict::VanishesAll; }
};

/// The enumerated universe of indecomposable iso-classes of total dimension
/// <= dmax, in canonical order (total dim, dimension vector lex, first
/// found). Every subcategory and every quantifier in this library is
/// interpreted over such a universe; reports state it explicitly.
class Universe {
  public:
    AlgebraPtr alg;
    int dmax = 0;
    std::vector<Module> classes;
    std::vector<std::string> names;

    int size() const { return static_cast<int>(classes.size()); }

    const Module& at(int i) const { return classes.at(i); }
    const std::string& name(int i) const { return names.at(i); }

    int index_of_name(const std::string& n) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == n) return i;
        throw std::invalid_argument("unknown module name '" + n + "' in universe");
    }

    /// Class index of a module, or -1 if it is not in the universe.
    int class_of(const Module& m, IsoOptions iso = {}) const {
        for (int i = 0; i < size(); ++i) {
            if (classes[i].dims != m.dims) continue;
            if (is_isomorphic(classes[i], m, iso)) return i;
        }
        return -1;
    }

    /// Decompose and map every summand to its class; sorted with
    /// multiplicities. Throws if a summand falls outside the universe.
    std::vector<int> decompose_into_classes(const Module& m, IsoOptions iso = {}) const {
        std::vector<int> out;
        for (const auto& s : decompose(m, iso)) {
            int c = class_of(s, iso);
            if (c < 0)
                throw std::runtime_error(
                    "module summand of dimension vector (" + s.dim_vector_string() +
                    ") falls outside the enumerated universe; raise dmax");
            out.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // --- memoized homological data -------------------------------------

    int hom_dim_classes(int i, int j) const {
        std::scoped_lock lk(mu_);
        auto key = std::make_pair(i, j);
        auto it = hom_memo_.find(key);
        if (it != hom_memo_.end()) return it->second;
        const int d = hom_dim(classes[i], classes[j]);
        hom_memo_[key] = d;
        return d;
    }

    int ext_dim_classes(int i, int j, int degree) const {
        std::scoped_lock lk(mu_);
        auto key = std::make_tuple(i, j, degree);
        auto it = ext_memo_.find(key);
        if (it != ext_memo_.end()) return it->second;
        const int d = ext_dim(classes[i], classes[j], degree);
        ext_memo_[key] = d;
        return d;
    }

    /// Classes of the summands of the first syzygy of class i (projectives
    /// have an empty list). Empty optional when a summand escapes the
    /// universe.
    std::optional<std::vector<int>> syzygy_classes(int i) const {
        {
            std::scoped_lock lk(mu_);
            auto it = syz_memo_.find(i);
            if (it != syz_memo_.end()) return it->second;
        }
        auto sz = syzygy(classes[i]);
        std::optional<std::vector<int>> result;
        try {
            std::vector<int> cls = decompose_into_classes(sz.sub);
            std::set<int> uni(cls.begin(), cls.end());
            result = std::vector<int>(uni.begin(), uni.end());
        } catch (const std::runtime_error&) {
            result = std::nullopt;
        }
        std::scoped_lock lk(mu_);
        syz_memo_[i] = result;
        return result;
    }

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, int> hom_memo_;
    mutable std::map<std::tuple<int, int, int>, int> ext_memo_;
    mutable std::map<int, std::optional<std::vector<int>>> syz_memo_;
};

using UniversePtr = std::shared_ptr<const Universe>;

namespace detail {

inline std::vector<std::vector<int>> dim_vectors_up_to(int nv, int dmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nv, 0);
    auto total = [&] { int t = 0; for (int d : cur) t += d; return t; };
    while (true) {
        if (total() >= 1) out.push_back(cur);
        int i = nv - 1;
        while (i >= 0) {
            if (total() - cur[i] + (cur[i] + 1) <= dmax) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (int d : a) ta += d;
        for (int d : b) tb += d;
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

}  // namespace detail

/// Brute-force enumeration of all indecomposable iso-classes with total
/// dimension <= dmax over GF(p).
inline std::shared_ptr<Universe> enumerate_indecomposables(AlgebraPtr alg, int dmax,
                                                           EnumOptions opts = {}) {
    if (dmax < 1) throw std::invalid_argument("enumerate_indecomposables: dmax must be >= 1");
    auto uni = std::make_shared<Universe>();
    uni->alg = alg;
    uni->dmax = dmax;
    if (alg->is_zero_algebra()) return uni;

    const int nv = alg->quiver.vertex_count();
    const int na = alg->quiver.arrow_count();
    const std::uint32_t p = alg->field.p;

    for (const auto& dims : detail::dim_vectors_up_to(nv, dmax)) {
        // arrow map entry counts
        std::vector<int> cells(na);
        long long total_entries = 0;
        for (int a = 0; a < na; ++a) {
            cells[a] = dims[alg->quiver.arrows[a].source] * dims[alg->quiver.arrows[a].target];
            total_entries += cells[a];
        }
        long long candidates = 1;
        for (long long e = 0; e < total_entries; ++e) {
            candidates *= p;
            if (candidates > opts.candidate_cap)
                throw std::runtime_error(
                    "enumeration candidate count exceeds cap; use a smaller dmax or p");
        }
        int found_here = 0;
        std::vector<std::uint32_t> odo(total_entries, 0);
        // iterate all entry assignments (including all-zero)
        for (long long it = 0; it < candidates; ++it) {
            std::vector<Mat> maps;
            std::size_t pos = 0;
            for (int a = 0; a < na; ++a) {
                Mat mat(dims[alg->quiver.arrows[a].target], dims[alg->quiver.arrows[a].source],
                        alg->field);
                for (std::size_t k = 0; k < mat.entries().size(); ++k)
                    mat.at(k / mat.cols(), k % mat.cols()) = odo[pos++];
                maps.push_back(std::move(mat));
            }
            Module cand = make_module(alg, dims, std::move(maps));
            // advance odometer for next iteration
            for (std::size_t i = 0; i < odo.size(); ++i) {
                if (++odo[i] < p) break;
                odo[i] = 0;
            }
            if (!module_is_valid(cand)) continue;
            if (!is_indecomposable(cand, opts.iso)) continue;
            bool dup = false;
            for (int i = 0; i < uni->size(); ++i) {
                if (uni->classes[i].dims != dims) continue;
                if (is_isomorphic(uni->classes[i], cand, opts.iso)) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            std::string name = "D" + cand.dim_vector_string() + "#" + std::to_string(found_here);
            ++found_here;
            uni->classes.push_back(std::move(cand));
            uni->names.push_back(std::move(name));
        }
    }
    return uni;
}

/// Decides Ext^i(M, N) = 0 for all i >= 1 via the syzygy-class orbit of M.
inline ExtCertificate ext_vanishes_all(const Universe& uni, const Module& m, const Module& n,
                                       int table_bound = 4) {
    ExtCertificate cert;
    if (m.is_zero() || n.is_zero()) {
        cert.verdict = ExtCertificate::Verdict::VanishesAll;
        return cert;
    }
    std::vector<int> m_classes = uni.decompose_into_classes(m);
    std::vector<int> n_classes = uni.decompose_into_classes(n);
    std::set<int> n_set(n_classes.begin(), n_classes.end());

    auto ext1_to_n = [&](int c) {
        int d = 0;
        for (int nc : n_set) d += uni.ext_dim_classes(c, nc, 1);
        return d;
    };

    // orbit of class-sets O_0 = classes of M, O_{k+1} = syzygy classes
    std::set<int> current(m_classes.begin(), m_classes.end());
    std::vector<std::set<int>> seen = {current};
    bool escaped = false;
    int escape_step = 0;
    while (true) {
        // check Ext^1 of the current layer (degree = layer index + 1)
        const int layer = static_cast<int>(seen.size()) - 1;
        for (int c : current) {
            if (ext1_to_n(c) != 0) {
                cert.verdict = ExtCertificate::Verdict::Nonzero;
                cert.nonzero_degree = layer + 1;
                for (int i = 1; i <= std::max(table_bound, cert.nonzero_degree); ++i)
                    cert.ext_dims.push_back(ext_dim(m, n, i));
                return cert;
            }
        }
        std::set<int> next;
        for (int c : current) {
            auto sc = uni.syzygy_classes(c);
            if (!sc) {
                escaped = true;
                escape_step = layer + 1;
                break;
            }
            next.insert(sc->begin(), sc->end());
        }
        if (escaped) break;
        // orbit closure: repeat of a previously seen class-set
        bool repeated = false;
        for (std::size_t k = 0; k < seen.size(); ++k) {
            if (seen[k] == next) {
                cert.pre_period = static_cast<int>(k);
                cert.period = static_cast<int>(seen.size()) - static_cast<int>(k);
                repeated = true;
                break;
            }
        }
        if (next.empty()) {
            cert.pre_period = static_cast<int>(seen.size());
            cert.period = 0;
            break;  // finite projective dimension
        }
        if (repeated) break;
        seen.push_back(next);
        current = std::move(next);
    }

    if (escaped) {
        cert.verdict = ExtCertificate::Verdict::BoundedOnly;
        cert.bound_used = std::max(table_bound, escape_step);
        for (int i = 1; i <= cert.bound_used; ++i) {
            int d = ext_dim(m, n, i);
            cert.ext_dims.push_back(d);
            if (d != 0) {
                cert.verdict = ExtCertificate::Verdict::Nonzero;
                cert.nonzero_degree = i;
                return cert;
            }
        }
        return cert;
    }

    cert.verdict = ExtCertificate::Verdict::VanishesAll;
    for (int i = 1; i <= table_bound; ++i) cert.ext_dims.push_back(ext_dim(m, n, i));
    return cert;
}

}  // namespace recol
