// Graph labelings driven by zero-sum partitions. Each construction asks
// zero_sum_partition for disjoint zero-sum sets of prescribed sizes and then
// distributes the elements over vertices or edges; verifiers re-check the
// labeling definitions from scratch.
#include "zsp/graphs.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "zsp/engine.hpp"
#include "zsp/errors.hpp"
#include "zsp/partition.hpp"

namespace zsp {
namespace {

// Hands out the sets of a partition by size, in construction order.
class SetBuckets {
  public:
    explicit SetBuckets(const std::vector<std::vector<code_t>>& sets) {
        for (const auto& s : sets) by_size_[s.size()].push_back(&s);
    }

    std::vector<code_t> take(std::size_t size) {
        auto it = by_size_.find(size);
        std::size_t& next = next_[size];
        if (it == by_size_.end() || next >= it->second.size())
            throw Error(ErrorKind::ConstructionBug,
                  "partition is missing a set of size " + std::to_string(size));
        std::vector<code_t> out(*it->second[next]);
        ++next;
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    std::map<std::size_t, std::vector<const std::vector<code_t>*>> by_size_;
    std::map<std::size_t, std::size_t> next_;
};

void require_noncyclic_two_group(const GroupSpec& g) {
    if (!g.is_two_group())
        throw Error(ErrorKind::NotATwoGroup,
                "group " + g.to_string() + " is not a 2-group");
    if (g.involution_count() == 1)
        throw Error(ErrorKind::UniqueInvolution,
                "cyclic 2-group " + g.to_string() +
                    " has a unique involution; no such labeling exists");
}

std::uint64_t parse_number(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::BadInput, "expected a number, got '" + tok + "'");
    return std::stoull(tok);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

// Reads the next line that contains any tokens; empty vector at EOF.
std::vector<std::string> next_tokens(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokenize(line);
        if (!toks.empty()) return toks;
    }
    return {};
}

}  // namespace

std::uint64_t MultipartiteSpec::total_vertices() const {
    return std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
}

MultipartiteSpec MultipartiteSpec::of(std::vector<std::uint64_t> sizes) {
    if (sizes.empty())
        throw Error(ErrorKind::BadInput, "at least one vertex class required");
    for (std::uint64_t s : sizes)
        if (s == 0) throw Error(ErrorKind::BadInput, "empty vertex class");
    std::sort(sizes.begin(), sizes.end());
    return MultipartiteSpec{std::move(sizes)};
}

bool RootedTree::every_internal_has_three_children() const {
    for (const auto& ch : children)
        if (!ch.empty() && ch.size() < 3) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> RootedTree::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(parent.size() - 1);
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (v != root) out.emplace_back(v, static_cast<std::size_t>(parent[v]));
    return out;
}

RootedTree RootedTree::from_parents(const std::vector<std::int64_t>& parent) {
    const std::size_t n = parent.size();
    if (n == 0) throw Error(ErrorKind::BadInput, "empty tree");
    RootedTree t;
    t.parent = parent;
    t.children.assign(n, {});
    std::size_t roots = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] < 0) {
            t.root = v;
            ++roots;
            continue;
        }
        const auto p = static_cast<std::uint64_t>(parent[v]);
        if (p >= n)
            throw Error(ErrorKind::BadInput,
                  "parent index out of range for vertex " + std::to_string(v));
        if (p == v) throw Error(ErrorKind::BadInput, "vertex is its own parent");
        t.children[p].push_back(v);
    }
    if (roots != 1)
        throw Error(ErrorKind::BadInput, "tree must have exactly one root, got " +
                                         std::to_string(roots));
    // Reachability from the root rules out parent-link cycles.
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{t.root};
    seen[t.root] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t c : t.children[v]) {
            if (seen[c]) throw Error(ErrorKind::BadInput, "cycle in parent links");
            seen[c] = 1;
            ++reached;
            stack.push_back(c);
        }
    }
    if (reached != n)
        throw Error(ErrorKind::BadInput, "parent links contain a cycle");
    return t;
}

std::vector<std::size_t> Digraph::component_of() const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [u, v] : arcs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::size_t> comp(n, n);
    std::size_t next_id = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] != n) continue;
        comp[start] = next_id;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (comp[w] != n) continue;
                comp[w] = next_id;
                stack.push_back(w);
            }
        }
        ++next_id;
    }
    return comp;
}

Digraph Digraph::of(std::size_t n,
                    std::vector<std::pair<std::size_t, std::size_t>> arcs) {
    for (const auto& [u, v] : arcs) {
        if (u >= n || v >= n)
            throw Error(ErrorKind::BadInput, "arc endpoint out of range");
        if (u == v) throw Error(ErrorKind::BadInput, "self-loops not allowed");
    }
    return Digraph{n, std::move(arcs)};
}

VertexLabeling distance_magic_labeling(const GroupSpec& g,
                                       const MultipartiteSpec& spec) {
    require_noncyclic_two_group(g);
    if (spec.sizes.empty())
        throw Error(ErrorKind::BadInput, "at least one vertex class required");
    if (spec.total_vertices() != g.order())
        throw Error(ErrorKind::SizePrecondition,
                "class sizes sum to " + std::to_string(spec.total_vertices()) +
                    " but the group has order " + std::to_string(g.order()));
    for (std::uint64_t s : spec.sizes)
        if (s < 3)
            throw Error(ErrorKind::SizePrecondition,
                  "every vertex class needs at least 3 vertices");
    if (spec.sizes.back() < 4)
        throw Error(ErrorKind::SizePrecondition,
                "the largest vertex class needs at least 4 vertices");

    // One zero-sum set per class; the largest class donates one slot to the
    // zero element, keeping its class sum zero as well.
    std::vector<std::uint64_t> want(spec.sizes);
    want.back() -= 1;
    SubsetFamily fam = zero_sum_partition(g, SizeMultiset(want));
    SetBuckets buckets(fam.sets);

    VertexLabeling lab{g, {}};
    lab.labels.reserve(g.order());
    for (std::size_t j = 0; j < spec.sizes.size(); ++j) {
        std::vector<code_t> cls = buckets.take(want[j]);
        if (j + 1 == spec.sizes.size()) {
            cls.push_back(0);
            std::sort(cls.begin(), cls.end());
        }
        lab.labels.insert(lab.labels.end(), cls.begin(), cls.end());
    }
    return lab;
}

GraphCheck verify_distance_magic(const GroupSpec& g,
                                 const MultipartiteSpec& spec,
                                 const VertexLabeling& lab) {
    if (spec.total_vertices() != g.order() ||
            lab.labels.size() != g.order())
        return {false, "label count does not match the group order"};
    std::vector<char> seen(g.order(), 0);
    for (code_t c : lab.labels) {
        if (c >= g.order()) return {false, "label out of range"};
        if (seen[c]) return {false, "label used twice: " + g.format_element(c)};
        seen[c] = 1;
    }
    // weight(v) = (sum of all labels) - (sum over v's own class); the weights
    // are constant exactly when all class sums agree.
    code_t total = 0;
    for (code_t c : lab.labels) total = g.add(total, c);
    std::size_t at = 0;
    bool first = true;
    code_t magic = 0;
    for (std::uint64_t s : spec.sizes) {
        code_t class_sum = 0;
        for (std::uint64_t i = 0; i < s; ++i)
            class_sum = g.add(class_sum, lab.labels[at++]);
        const code_t weight = g.sub(total, class_sum);
        if (first) {
            magic = weight;
            first = false;
        } else if (weight != magic) {
            return {false, "vertex weights differ between classes: " +
                         g.format_element(magic) + " vs " +
                         g.format_element(weight)};
        }
    }
    return {true, "all weights equal " + g.format_element(magic)};
}

EdgeLabeling antimagic_tree_labeling(const GroupSpec& g,
                                     const RootedTree& tree) {
    require_noncyclic_two_group(g);
    if (tree.size() != g.order())
        throw Error(ErrorKind::SizePrecondition,
                "tree has " + std::to_string(tree.size()) +
                    " vertices but the group has order " +
                    std::to_string(g.order()));
    if (!tree.every_internal_has_three_children())
        throw Error(ErrorKind::HypothesisViolated,
                "an internal vertex has fewer than three children");

    // One zero-sum set per internal vertex, sized by its child count; the
    // labels of the edges below an internal vertex then cancel, so every
    // non-root weight is just its parent edge label and the root weight is 0.
    std::vector<std::uint64_t> want;
    for (const auto& ch : tree.children)
        if (!ch.empty()) want.push_back(ch.size());
    SubsetFamily fam = zero_sum_partition(g, SizeMultiset(want));
    SetBuckets buckets(fam.sets);

    EdgeLabeling lab{g, std::vector<code_t>(tree.size() - 1, 0)};
    auto edge_index = [&](std::size_t child) {
        return child - (child > tree.root ? 1 : 0);
    };
    for (std::size_t v = 0; v < tree.size(); ++v) {
        if (tree.children[v].empty()) continue;
        std::vector<code_t> set = buckets.take(tree.children[v].size());
        for (std::size_t i = 0; i < set.size(); ++i)
            lab.labels[edge_index(tree.children[v][i])] = set[i];
    }
    return lab;
}

GraphCheck verify_antimagic_tree(const GroupSpec& g, const RootedTree& tree,
                                 const EdgeLabeling& lab) {
    if (tree.size() != g.order() || lab.labels.size() + 1 != tree.size())
        return {false, "edge label count does not match the tree"};
    std::vector<char> seen(g.order(), 0);
    for (code_t c : lab.labels) {
        if (c == 0 || c >= g.order())
            return {false, "edge labels must be non-zero group elements"};
        if (seen[c])
            return {false, "edge label used twice: " + g.format_element(c)};
        seen[c] = 1;
    }
    std::vector<code_t> weight(tree.size(), 0);
    const auto edges = tree.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        weight[edges[i].first] = g.add(weight[edges[i].first], lab.labels[i]);
        weight[edges[i].second] = g.add(weight[edges[i].second], lab.labels[i]);
    }
    std::vector<code_t> sorted(weight);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return {false, "two vertices have the same weight"};
    return {true, "weights pairwise distinct; root weight " +
                    g.format_element(weight[tree.root])};
}

EdgeLabeling digraph_irregular_labeling(const GroupSpec& g, const Digraph& d) {
    require_noncyclic_two_group(g);
    const std::vector<std::size_t> comp = d.component_of();
    const std::size_t comp_count =
            comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<std::size_t>> members(comp_count);
    for (std::size_t v = 0; v < d.n; ++v) members[comp[v]].push_back(v);
    for (const auto& m : members)
        if (m.size() < 3)
            throw Error(ErrorKind::SizePrecondition,
                  "a weakly-connected component has fewer than 3 vertices");
    const std::uint64_t order = g.order();
    if (order <= d.n)
        throw Error(ErrorKind::HypothesisViolated,
                "group order must exceed the vertex count");
    if (order == d.n + 2 || order == d.n + 3)
        throw Error(ErrorKind::HypothesisViolated,
                "group order " + std::to_string(order) +
                    " may not equal the vertex count plus 2 or 3");

    // One zero-sum set of target weights per component (largest first), plus a
    // filler set soaking up the unused non-zero elements when there are any.
    std::vector<std::size_t> comp_ids(comp_count);
    std::iota(comp_ids.begin(), comp_ids.end(), 0);
    std::stable_sort(comp_ids.begin(), comp_ids.end(),
                   [&](std::size_t a, std::size_t b) {
                                          return members[a].size() > members[b].size();
                                      });
    std::vector<std::uint64_t> want;
    for (std::size_t id : comp_ids) want.push_back(members[id].size());
    if (order >= d.n + 4) want.push_back(order - 1 - d.n);
    SubsetFamily fam = zero_sum_partition(g, SizeMultiset(want));
    SetBuckets buckets(fam.sets);

    EdgeLabeling lab{g, std::vector<code_t>(d.arcs.size(), 0)};
    for (std::size_t id : comp_ids) {
        const std::vector<code_t> targets = buckets.take(members[id].size());
        for (const auto& [arc, code] :
                  realize_component_weights(g, d, members[id], targets))
            lab.labels[arc] = code;
    }
    return lab;
}

GraphCheck verify_digraph_irregular(const GroupSpec& g, const Digraph& d,
                                    const EdgeLabeling& lab) {
    if (lab.labels.size() != d.arcs.size())
        return {false, "arc label count does not match the digraph"};
    for (code_t c : lab.labels)
        if (c >= g.order()) return {false, "label out of range"};
    std::vector<code_t> weight(d.n, 0);
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        weight[d.arcs[i].second] = g.add(weight[d.arcs[i].second], lab.labels[i]);
        weight[d.arcs[i].first] = g.sub(weight[d.arcs[i].first], lab.labels[i]);
    }
    std::vector<code_t> sorted(weight);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return {false, "two vertices have the same weight"};
    return {true, "vertex weights pairwise distinct"};
}

std::vector<std::pair<std::size_t, code_t>> realize_component_weights(
        const GroupSpec& g, const Digraph& d,
        const std::vector<std::size_t>& vertices,
        const std::vector<code_t>& targets) {
    if (vertices.empty()) throw Error(ErrorKind::BadInput, "empty component");
    if (vertices.size() != targets.size())
        throw Error(ErrorKind::BadInput, "one target weight per vertex required");
    std::vector<char> inside(d.n, 0);
    std::vector<code_t> target_of(d.n, 0);
    code_t target_sum = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= d.n)
            throw Error(ErrorKind::BadInput, "vertex index out of range");
        if (inside[vertices[i]])
            throw Error(ErrorKind::BadInput, "vertex listed twice");
        inside[vertices[i]] = 1;
        target_of[vertices[i]] = targets[i];
        target_sum = g.add(target_sum, targets[i]);
    }
    if (target_sum != 0)
        throw Error(ErrorKind::BadInput, "target weights must sum to zero");

    // Collect the component's arcs and its undirected adjacency.
    std::vector<std::size_t> comp_arcs;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(d.n);
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        const auto& [u, v] = d.arcs[i];
        if (inside[u] != inside[v])
            throw Error(ErrorKind::BadInput,
                  "an arc leaves the given vertex set; not a full component");
        if (!inside[u]) continue;
        comp_arcs.push_back(i);
        adj[u].emplace_back(i, v);
        adj[v].emplace_back(i, u);
    }

    // Breadth-first spanning tree from the smallest vertex.
    const std::size_t root = *std::min_element(vertices.begin(), vertices.end());
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent_arc(d.n, kNone);
    std::vector<char> seen(d.n, 0);
    std::vector<std::size_t> order{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t v = order[head];
        for (const auto& [arc, w] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent_arc[w] = arc;
            order.push_back(w);
        }
    }
    if (order.size() != vertices.size())
        throw Error(ErrorKind::BadInput, "vertex set is not weakly connected");

    // Non-tree arcs stay 0; tree arcs are fixed leaf-upward so that each
    // vertex's inflow minus outflow lands on its target.
    std::vector<code_t> label(d.arcs.size(), 0);
    std::vector<code_t> cur(d.n, 0);
    for (std::size_t k = order.size(); k-- > 1;) {
        const std::size_t v = order[k];
        const std::size_t arc = parent_arc[v];
        const auto& [x, y] = d.arcs[arc];
        const code_t ell =
                (y == v) ? g.sub(target_of[v], cur[v]) : g.sub(cur[v], target_of[v]);
        label[arc] = ell;
        cur[y] = g.add(cur[y], ell);
        cur[x] = g.sub(cur[x], ell);
    }
    if (cur[root] != target_of[root])
        throw Error(ErrorKind::ConstructionBug,
                "tree solve missed the root target");

    std::vector<std::pair<std::size_t, code_t>> out;
    out.reserve(comp_arcs.size());
    for (std::size_t arc : comp_arcs) out.emplace_back(arc, label[arc]);
    return out;
}

MultipartiteSpec parse_classes_file(std::istream& in) {
    std::vector<std::string> toks = next_tokens(in);
    if (toks.empty() || toks[0] != "classes")
        throw Error(ErrorKind::BadInput, "expected header: classes n1 n2 ...");
    std::vector<std::uint64_t> sizes;
    for (std::size_t i = 1; i < toks.size(); ++i)
        sizes.push_back(parse_number(toks[i]));
    if (!next_tokens(in).empty())
        throw Error(ErrorKind::BadInput, "unexpected content after class sizes");
    return MultipartiteSpec::of(std::move(sizes));
}

RootedTree parse_tree_file(std::istream& in) {
    std::vector<std::string> toks = next_tokens(in);
    if (toks.size() != 2 || toks[0] != "tree")
        throw Error(ErrorKind::BadInput, "expected header: tree n");
    const std::uint64_t n = parse_number(toks[1]);
    if (n == 0) throw Error(ErrorKind::BadInput, "empty tree");
    std::vector<std::int64_t> parent(n, -1);
    std::vector<char> set(n, 0);
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        toks = next_tokens(in);
        if (toks.size() != 2)
            throw Error(ErrorKind::BadInput, "expected a 'child parent' line");
        const std::uint64_t child = parse_number(toks[0]);
        const std::uint64_t par = parse_number(toks[1]);
        if (child >= n || par >= n)
            throw Error(ErrorKind::BadInput, "vertex index out of range");
        if (set[child])
            throw Error(ErrorKind::BadInput,
                  "vertex " + std::to_string(child) + " has two parents");
        set[child] = 1;
        parent[child] = static_cast<std::int64_t>(par);
    }
    if (!next_tokens(in).empty())
        throw Error(ErrorKind::BadInput, "unexpected content after tree edges");
    return RootedTree::from_parents(parent);
}

Digraph parse_digraph_file(std::istream& in) {
    std::vector<std::string> toks = next_tokens(in);
    if (toks.size() != 2 || toks[0] != "digraph")
        throw Error(ErrorKind::BadInput, "expected header: digraph n");
    const std::uint64_t n = parse_number(toks[1]);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    while (!(toks = next_tokens(in)).empty()) {
        if (toks.size() != 2)
            throw Error(ErrorKind::BadInput, "expected a 'u v' arc line");
        arcs.emplace_back(parse_number(toks[0]), parse_number(toks[1]));
    }
    return Digraph::of(n, std::move(arcs));
}

}  // namespace zsp
