#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace recol {

struct Arrow {
    std::string name;
    int source = 0;  // vertex indices
    int target = 0;
};

/// Finite quiver with named vertices and arrows. Vertices are referred to by
/// index internally and by name at the CLI surface.
struct Quiver {
    std::vector<std::string> vertex_names;
    std::vector<Arrow> arrows;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int arrow_count() const { return static_cast<int>(arrows.size()); }

    int vertex_index(const std::string& name) const {
        for (int v = 0; v < vertex_count(); ++v)
            if (vertex_names[v] == name) return v;
        throw std::invalid_argument("unknown vertex '" + name + "'");
    }

    int arrow_index(const std::string& name) const {
        for (int a = 0; a < arrow_count(); ++a)
            if (arrows[a].name == name) return a;
        throw std::invalid_argument("unknown arrow '" + name + "'");
    }

    void validate() const {
        std::set<std::string> vn(vertex_names.begin(), vertex_names.end());
        if (vn.size() != vertex_names.size())
            throw std::invalid_argument("duplicate vertex names");
        std::set<std::string> an;
        for (const auto& a : arrows) {
            if (!an.insert(a.name).second)
                throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
            if (a.source < 0 || a.source >= vertex_count() || a.target < 0 ||
                a.target >= vertex_count())
                throw std::invalid_argument("arrow endpoint out of range");
        }
    }

    Quiver reversed() const {
        Quiver q;
        q.vertex_names = vertex_names;
        for (const auto& a : arrows) q.arrows.push_back({a.name, a.target, a.source});
        return q;
    }
};

/// A path: a composable arrow word read left to right (empty word = trivial
/// path at a vertex).
struct PathWord {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }

    bool operator==(const PathWord&) const = default;
    bool operator<(const PathWord& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows != o.arrows) return arrows < o.arrows;
        return source < o.source;  // distinguishes trivial paths
    }
};

/// One relation: a linear combination of parallel paths, each term a
/// coefficient and an arrow word.
struct RelationTerm {
    std::uint32_t coeff = 1;
    std::vector<int> arrows;  // nonempty; admissibility requires length >= 2
};
using Relation = std::vector<RelationTerm>;

}  // namespace recol
