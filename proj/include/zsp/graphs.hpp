// Graph labelings built on zero-sum partitions: distance-magic labelings of
// complete multipartite graphs, antimagic edge labelings of rooted trees whose
// internal vertices have >= 3 children, and irregular arc labelings of
// digraphs (all vertex weights pairwise distinct).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zsp/group.hpp"

namespace zsp {

// Complete multipartite graph K_{n_1,...,n_t}; class sizes kept ascending.
struct MultipartiteSpec {
    std::vector<std::uint64_t> sizes;

    std::uint64_t total_vertices() const;
    // Sorts ascending and validates every class is non-empty.
    static MultipartiteSpec of(std::vector<std::uint64_t> sizes);
};

// Rooted tree given by parent links; parent[root] == -1.
struct RootedTree {
    std::size_t root = 0;
    std::vector<std::int64_t> parent;                // -1 for the root
    std::vector<std::vector<std::size_t>> children;  // ascending

    std::size_t size() const { return parent.size(); }
    bool is_leaf(std::size_t v) const { return children[v].empty(); }
    // True when every non-leaf vertex has at least three children.
    bool every_internal_has_three_children() const;
    // Edges as (child, parent) pairs, child index ascending.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    // Validates: exactly one root, no cycles, all vertices reachable.
    static RootedTree from_parents(const std::vector<std::int64_t>& parent);
};

// Directed graph on vertices 0..n-1; arcs are ordered pairs, no self-loops.
struct Digraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;

    // Weakly-connected component index per vertex, numbered by first vertex.
    std::vector<std::size_t> component_of() const;
    static Digraph of(std::size_t n,
                    std::vector<std::pair<std::size_t, std::size_t>> arcs);
};

// Vertex -> element assignment (codes), aligned with vertex indices.
struct VertexLabeling {
    GroupSpec group;
    std::vector<code_t> labels;
};

// Edge/arc -> element assignment, aligned with RootedTree::edges() or
// Digraph::arcs order.
struct EdgeLabeling {
    GroupSpec group;
    std::vector<code_t> labels;
};

struct GraphCheck {
    bool ok = true;
    std::string detail;
};

// Labels vertices of K_{n_1..n_t} bijectively with the group so that every
// vertex weight (sum of labels over all other classes) is the same constant.
// Requires a non-cyclic 2-group of order sum(n_i), every class >= 3 and the
// largest class >= 4.
VertexLabeling distance_magic_labeling(const GroupSpec& g,
                                       const MultipartiteSpec& spec);

// Re-checks the definition: labels form a bijection onto the group and all
// vertex weights agree. Classes occupy contiguous vertex ranges in size order.
GraphCheck verify_distance_magic(const GroupSpec& g,
                                 const MultipartiteSpec& spec,
                                 const VertexLabeling& lab);

// Labels tree edges bijectively with the non-zero elements so that vertex
// weights (sums of incident edge labels) are pairwise distinct; the root's
// weight is 0. Requires a non-cyclic 2-group whose order equals the vertex
// count and a tree whose internal vertices all have >= 3 children.
EdgeLabeling antimagic_tree_labeling(const GroupSpec& g,
                                     const RootedTree& tree);

GraphCheck verify_antimagic_tree(const GroupSpec& g, const RootedTree& tree,
                                 const EdgeLabeling& lab);

// Labels arcs with group elements so that the vertex weights
// (inflow sum minus outflow sum) are pairwise distinct. Requires every
// weakly-connected component to have >= 3 vertices, a 2-group with more than
// one involution, order > n, and order not in {n+2, n+3}.
EdgeLabeling digraph_irregular_labeling(const GroupSpec& g, const Digraph& d);

GraphCheck verify_digraph_irregular(const GroupSpec& g, const Digraph& d,
                                    const EdgeLabeling& lab);

// Solves one weakly-connected component: given target weights (summing to
// zero) for the listed vertices, labels the component's arcs so each vertex's
// inflow minus outflow equals its target. Non-spanning-tree arcs get 0; tree
// arcs are fixed leaf-upward. Returns (arc index, label) pairs.
std::vector<std::pair<std::size_t, code_t>> realize_component_weights(
        const GroupSpec& g, const Digraph& d,
        const std::vector<std::size_t>& vertices,
        const std::vector<code_t>& targets);

// Line-oriented graph files. Headers: "classes n1 n2 ..." / "tree n" /
// "digraph n"; then one "child parent" or "u v" pair per line (0-based).
MultipartiteSpec parse_classes_file(std::istream& in);
RootedTree parse_tree_file(std::istream& in);
Digraph parse_digraph_file(std::istream& in);

}  // namespace zsp
