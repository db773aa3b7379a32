// Tests for the graph labelings: distance-magic multipartite labelings,
// antimagic tree labelings, irregular digraph labelings, the component
// weight solver, and the graph file parsers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "zsp/graphs.hpp"

using namespace zsp;

namespace {

// Keep generated realization tables out of the working directory.
const bool cache_dir_pinned = [] {
    setenv("ZSP_CACHE_DIR", "/tmp/zsp_test_graphs_cache", 1);
    return true;
}();

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::logic_error("expected an error");
}

// Independent weight recomputation for digraph labelings: inflow - outflow.
std::vector<code_t> digraph_weights(const GroupSpec& g, const Digraph& d,
                                    const std::vector<code_t>& labels) {
    std::vector<code_t> w(d.n, 0);
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        w[d.arcs[i].second] = g.add(w[d.arcs[i].second], labels[i]);
        w[d.arcs[i].first] = g.sub(w[d.arcs[i].first], labels[i]);
    }
    return w;
}

bool all_distinct(std::vector<code_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Random tree whose internal vertices all have >= 3 children, built by
// expanding leaves; n - 1 must be expressible as a sum of parts >= 3.
RootedTree random_three_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::int64_t> parent{-1};
    std::vector<std::size_t> leaves{0};
    std::size_t remaining = n - 1;
    while (remaining > 0) {
        std::size_t at = rng() % leaves.size();
        std::size_t v = leaves[at];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(at));
        std::size_t c;
        do {
            c = 3 + rng() % 3;
        } while (c > remaining || (remaining - c != 0 && remaining - c < 3));
        for (std::size_t i = 0; i < c; ++i) {
            leaves.push_back(parent.size());
            parent.push_back(static_cast<std::int64_t>(v));
        }
        remaining -= c;
    }
    return RootedTree::from_parents(parent);
}

// Random weakly-connected digraph component on vertices [base, base+k):
// a random spanning tree with random arc orientations plus a few extras.
void add_random_component(std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                          std::size_t base, std::size_t k, std::mt19937_64& rng) {
    for (std::size_t i = 1; i < k; ++i) {
        std::size_t u = base + i, v = base + rng() % i;
        if (rng() & 1) std::swap(u, v);
        arcs.emplace_back(u, v);
    }
    for (std::size_t extra = rng() % 3; extra > 0; --extra) {
        std::size_t u = base + rng() % k, v = base + rng() % k;
        if (u != v) arcs.emplace_back(u, v);
    }
}

}  // namespace

// ---- distance-magic labelings -------------------------------------------------

TEST_CASE("distance-magic labeling of K_{3,5} over the order-8 groups") {
    for (const char* name : {"Z4xZ2", "Z2^3"}) {
        CAPTURE(name);
        GroupSpec g = parse_group_spec(name);
        MultipartiteSpec spec = MultipartiteSpec::of({3, 5});
        VertexLabeling lab = distance_magic_labeling(g, spec);
        REQUIRE(lab.labels.size() == 8);
        GraphCheck check = verify_distance_magic(g, spec, lab);
        CHECK(check.ok);
        CHECK(check.detail.find("all weights equal") != std::string::npos);
        // Every class sums to zero, so every vertex weight is zero.
        std::size_t at = 0;
        for (std::uint64_t s : spec.sizes) {
            code_t class_sum = 0;
            for (std::uint64_t i = 0; i < s; ++i)
                class_sum = g.add(class_sum, lab.labels[at++]);
            CHECK(class_sum == 0);
        }
    }
}

TEST_CASE("distance-magic labeling handles many classes and repeated sizes") {
    GroupSpec g = parse_group_spec("Z4xZ2^2");
    MultipartiteSpec spec = MultipartiteSpec::of({4, 3, 3, 3, 3});
    VertexLabeling lab = distance_magic_labeling(g, spec);
    CHECK(verify_distance_magic(g, spec, lab).ok);

    GroupSpec big = parse_group_spec("Z8xZ4xZ2");
    MultipartiteSpec spec2 = MultipartiteSpec::of({9, 13, 5, 37});
    CHECK(verify_distance_magic(big, spec2, distance_magic_labeling(big, spec2)).ok);
}

TEST_CASE("distance-magic labeling rejects bad groups and class lists") {
    MultipartiteSpec k35 = MultipartiteSpec::of({3, 5});
    CHECK(kind_of([&] { distance_magic_labeling(parse_group_spec("Z8"), k35); }) ==
          ErrorKind::UniqueInvolution);
    CHECK(kind_of([&] { distance_magic_labeling(parse_group_spec("Z6xZ2"), k35); }) ==
          ErrorKind::NotATwoGroup);
    CHECK(kind_of([&] {
              distance_magic_labeling(parse_group_spec("Z4xZ2^2"), k35);
          }) == ErrorKind::SizePrecondition);  // 8 vertices vs order 16
    CHECK(kind_of([&] {
              distance_magic_labeling(parse_group_spec("Z4xZ2"), MultipartiteSpec::of({2, 6}));
          }) == ErrorKind::SizePrecondition);  // class below 3
    CHECK_THROWS_AS(MultipartiteSpec::of({}), Error);
    CHECK_THROWS_AS(MultipartiteSpec::of({3, 0}), Error);
}

TEST_CASE("verify_distance_magic rejects broken labelings") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    MultipartiteSpec spec = MultipartiteSpec::of({3, 5});
    VertexLabeling lab = distance_magic_labeling(g, spec);

    VertexLabeling dup = lab;
    dup.labels[0] = dup.labels[1];
    CHECK(!verify_distance_magic(g, spec, dup).ok);

    // Swapping labels across classes changes one class sum by a non-zero delta.
    VertexLabeling swapped = lab;
    std::swap(swapped.labels[0], swapped.labels[7]);
    if (g.add(lab.labels[0], g.neg(lab.labels[7])) != 0)
        CHECK(!verify_distance_magic(g, spec, swapped).ok);

    VertexLabeling short_lab = lab;
    short_lab.labels.pop_back();
    CHECK(!verify_distance_magic(g, spec, short_lab).ok);
}

// ---- antimagic tree labelings ---------------------------------------------------

TEST_CASE("antimagic labeling of the star K_{1,7}") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    std::vector<std::int64_t> parent{-1, 0, 0, 0, 0, 0, 0, 0};
    RootedTree star = RootedTree::from_parents(parent);
    EdgeLabeling lab = antimagic_tree_labeling(g, star);
    REQUIRE(lab.labels.size() == 7);
    GraphCheck check = verify_antimagic_tree(g, star, lab);
    CHECK(check.ok);

    // Labels are exactly the non-zero elements; the root weight (their sum)
    // is zero and every leaf weight is its own edge label.
    std::set<code_t> used(lab.labels.begin(), lab.labels.end());
    CHECK(used.size() == 7);
    CHECK(used.count(0) == 0);
    code_t root_weight = 0;
    for (code_t c : lab.labels) root_weight = g.add(root_weight, c);
    CHECK(root_weight == 0);
}

TEST_CASE("antimagic labeling of random trees with 3+ children per internal vertex") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 12; ++round) {
        const char* name = (round % 2 == 0) ? "Z2^4" : "Z8xZ2^2";
        GroupSpec g = parse_group_spec(name);
        RootedTree tree = random_three_tree(g.order(), rng);
        CAPTURE(name);
        CAPTURE(tree.size());
        REQUIRE(tree.every_internal_has_three_children());
        EdgeLabeling lab = antimagic_tree_labeling(g, tree);
        CHECK(verify_antimagic_tree(g, tree, lab).ok);

        // Independent recomputation: each non-root vertex weighs exactly its
        // parent-edge label, because its children's labels cancel.
        const auto edges = tree.edges();
        std::vector<code_t> weight(tree.size(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            weight[edges[i].first] = g.add(weight[edges[i].first], lab.labels[i]);
            weight[edges[i].second] = g.add(weight[edges[i].second], lab.labels[i]);
        }
        CHECK(weight[tree.root] == 0);
        for (std::size_t i = 0; i < edges.size(); ++i)
            CHECK(weight[edges[i].first] == lab.labels[i]);
    }
}

TEST_CASE("antimagic tree labeling rejects bad groups, sizes, and arity") {
    std::vector<std::int64_t> parent{-1, 0, 0, 0, 0, 0, 0, 0};
    RootedTree star8 = RootedTree::from_parents(parent);
    CHECK(kind_of([&] { antimagic_tree_labeling(parse_group_spec("Z8"), star8); }) ==
          ErrorKind::UniqueInvolution);
    CHECK(kind_of([&] { antimagic_tree_labeling(parse_group_spec("Z4xZ2^2"), star8); }) ==
          ErrorKind::SizePrecondition);  // 8 vertices vs order 16

    // Root with two children: the arity hypothesis fails.
    RootedTree skewed = RootedTree::from_parents({-1, 0, 0, 1, 1, 1, 2, 2});
    CHECK(kind_of([&] { antimagic_tree_labeling(parse_group_spec("Z4xZ2"), skewed); }) ==
          ErrorKind::HypothesisViolated);
}

TEST_CASE("rooted tree construction validates parent links") {
    CHECK_THROWS_AS(RootedTree::from_parents({0, 0, 0}), Error);     // no root
    CHECK_THROWS_AS(RootedTree::from_parents({-1, 2, 1}), Error);    // 2-cycle
    CHECK_THROWS_AS(RootedTree::from_parents({-1, -1, 0}), Error);   // two roots
    CHECK_THROWS_AS(RootedTree::from_parents({-1, 5, 0}), Error);    // out of range
    RootedTree ok = RootedTree::from_parents({-1, 0, 0, 0});
    CHECK(ok.root == 0);
    CHECK(ok.children[0] == std::vector<std::size_t>{1, 2, 3});
    CHECK(ok.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 0}, {3, 0}});
}

TEST_CASE("verify_antimagic_tree rejects broken labelings") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    RootedTree star = RootedTree::from_parents({-1, 0, 0, 0, 0, 0, 0, 0});
    EdgeLabeling lab = antimagic_tree_labeling(g, star);

    EdgeLabeling zeroed = lab;
    zeroed.labels[3] = 0;
    CHECK(!verify_antimagic_tree(g, star, zeroed).ok);

    EdgeLabeling dup = lab;
    dup.labels[0] = dup.labels[1];
    CHECK(!verify_antimagic_tree(g, star, dup).ok);
}

// ---- irregular digraph labelings ------------------------------------------------

TEST_CASE("irregular labeling of two disjoint triangles") {
    GroupSpec g = parse_group_spec("Z4xZ2^2");
    Digraph d = Digraph::of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    EdgeLabeling lab = digraph_irregular_labeling(g, d);
    REQUIRE(lab.labels.size() == 6);
    CHECK(verify_digraph_irregular(g, d, lab).ok);
    std::vector<code_t> w = digraph_weights(g, d, lab.labels);
    CHECK(all_distinct(w));
    for (code_t x : w) CHECK(x != 0);  // weights land on non-zero elements
}

TEST_CASE("irregular labeling on random multi-component digraphs") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 10; ++round) {
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        std::size_t sizes[2] = {3 + rng() % 3, 3 + rng() % 3};
        add_random_component(arcs, 0, sizes[0], rng);
        add_random_component(arcs, sizes[0], sizes[1], rng);
        std::size_t n = sizes[0] + sizes[1];
        Digraph d = Digraph::of(n, std::move(arcs));
        GroupSpec g = parse_group_spec(n <= 12 ? "Z2^4" : "Z8xZ2^2");
        CAPTURE(n);
        EdgeLabeling lab = digraph_irregular_labeling(g, d);
        CHECK(verify_digraph_irregular(g, d, lab).ok);

        // Reversing every arc and negating every label preserves all
        // weights, so the relabeled reverse digraph verifies too.
        std::vector<std::pair<std::size_t, std::size_t>> rev;
        for (auto [u, v] : d.arcs) rev.emplace_back(v, u);
        Digraph dr = Digraph::of(n, std::move(rev));
        EdgeLabeling neg{g, {}};
        for (code_t c : lab.labels) neg.labels.push_back(g.neg(c));
        CHECK(verify_digraph_irregular(g, dr, neg).ok);
        CHECK(digraph_weights(g, dr, neg.labels) == digraph_weights(g, d, lab.labels));
    }
}

TEST_CASE("irregular labeling rejects the documented group/graph mismatches") {
    Digraph triangles = Digraph::of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});

    // A 2-vertex weak component.
    Digraph small = Digraph::of(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    CHECK(kind_of([&] {
              digraph_irregular_labeling(parse_group_spec("Z4xZ2^2"), small);
          }) == ErrorKind::SizePrecondition);

    // Order must exceed the vertex count.
    Digraph cycles8 =
        Digraph::of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    try {
        digraph_irregular_labeling(parse_group_spec("Z4xZ2"), cycles8);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
        CHECK(std::string(e.what()).find("must exceed the vertex count") != std::string::npos);
    }

    // Order n+2 and n+3 are excluded.
    for (std::size_t n : {6, 5}) {
        Digraph d = n == 6 ? triangles : Digraph::of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        try {
            digraph_irregular_labeling(parse_group_spec("Z4xZ2"), d);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::HypothesisViolated);
            CHECK(std::string(e.what()).find("plus 2 or 3") != std::string::npos);
        }
    }

    Digraph triangle = Digraph::of(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(kind_of([&] { digraph_irregular_labeling(parse_group_spec("Z16"), triangle); }) ==
          ErrorKind::UniqueInvolution);
    CHECK(kind_of([&] { digraph_irregular_labeling(parse_group_spec("Z12xZ2"), triangle); }) ==
          ErrorKind::NotATwoGroup);
}

TEST_CASE("digraph construction rejects malformed arcs") {
    CHECK_THROWS_AS(Digraph::of(3, {{0, 3}}), Error);  // endpoint out of range
    CHECK_THROWS_AS(Digraph::of(3, {{1, 1}}), Error);  // self-loop
    Digraph d = Digraph::of(4, {{0, 1}, {2, 3}});
    std::vector<std::size_t> comp = d.component_of();
    CHECK(comp == std::vector<std::size_t>{0, 0, 1, 1});
}

// ---- component weight solver ----------------------------------------------------

TEST_CASE("realize_component_weights solves a directed path exactly") {
    GroupSpec g = parse_group_spec("Z8");
    Digraph d = Digraph::of(3, {{0, 1}, {1, 2}});
    std::vector<code_t> targets{1, 2, 5};
    auto assignment = realize_component_weights(g, d, {0, 1, 2}, targets);
    REQUIRE(assignment.size() == 2);
    std::vector<code_t> labels(d.arcs.size(), 0);
    for (auto [arc, code] : assignment) labels[arc] = code;
    CHECK(digraph_weights(g, d, labels) == targets);
}

TEST_CASE("realize_component_weights gives non-tree arcs the zero label") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    Digraph d = Digraph::of(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
    std::vector<code_t> targets{3, 6, g.add(g.neg(3), g.neg(6))};
    auto assignment = realize_component_weights(g, d, {0, 1, 2}, targets);
    REQUIRE(assignment.size() == 4);
    std::vector<code_t> labels(d.arcs.size(), 0);
    std::size_t zeros = 0;
    for (auto [arc, code] : assignment) {
        labels[arc] = code;
        if (code == 0) ++zeros;
    }
    CHECK(zeros >= 2);  // 4 arcs, spanning tree uses 2
    std::vector<code_t> w = digraph_weights(g, d, labels);
    CHECK(std::vector<code_t>(w.begin(), w.begin() + 3) == targets);
}

TEST_CASE("realize_component_weights solves a single isolated vertex") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    Digraph d = Digraph::of(1, {});
    CHECK(realize_component_weights(g, d, {0}, {0}).empty());
    CHECK(kind_of([&] { realize_component_weights(g, d, {0}, {3}); }) == ErrorKind::BadInput);
}

TEST_CASE("realize_component_weights validates the vertex set") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    Digraph d = Digraph::of(3, {{0, 1}, {1, 2}});
    // Arc (1,2) crosses out of {0,1}.
    CHECK(kind_of([&] { realize_component_weights(g, d, {0, 1}, {1, 7}); }) ==
          ErrorKind::BadInput);
    // Disconnected vertex set.
    Digraph split = Digraph::of(4, {{0, 1}, {2, 3}});
    CHECK(kind_of([&] {
              realize_component_weights(g, split, {0, 1, 2, 3}, {1, 7, 2, 6});
          }) == ErrorKind::BadInput);
    // Nonzero target sum.
    CHECK(kind_of([&] { realize_component_weights(g, d, {0, 1, 2}, {1, 1, 1}); }) ==
          ErrorKind::BadInput);
    // Duplicate vertex.
    CHECK(kind_of([&] { realize_component_weights(g, d, {0, 0, 2}, {1, 7, 0}); }) ==
          ErrorKind::BadInput);
}

TEST_CASE("realize_component_weights hits targets on random components") {
    std::mt19937_64 rng(31);
    GroupSpec g = parse_group_spec("Z8xZ4");
    for (int round = 0; round < 25; ++round) {
        std::size_t k = 2 + rng() % 7;
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        add_random_component(arcs, 0, k, rng);
        Digraph d = Digraph::of(k, std::move(arcs));
        std::vector<std::size_t> vertices(k);
        std::vector<code_t> targets(k, 0);
        code_t sum = 0;
        for (std::size_t v = 0; v < k; ++v) {
            vertices[v] = v;
            if (v + 1 < k) {
                targets[v] = rng() % g.order();
                sum = g.add(sum, targets[v]);
            }
        }
        targets[k - 1] = g.neg(sum);
        std::vector<code_t> labels(d.arcs.size(), 0);
        for (auto [arc, code] : realize_component_weights(g, d, vertices, targets))
            labels[arc] = code;
        CHECK(digraph_weights(g, d, labels) == targets);
    }
}

// ---- graph file parsing ----------------------------------------------------------

TEST_CASE("parse_classes_file reads sizes and rejects malformed input") {
    std::istringstream ok("classes 5 3\n");
    MultipartiteSpec spec = parse_classes_file(ok);
    CHECK(spec.sizes == std::vector<std::uint64_t>{3, 5});  // kept ascending

    std::istringstream bad_header("sizes 3 5\n");
    CHECK_THROWS_AS(parse_classes_file(bad_header), Error);
    std::istringstream junk("classes 3 x\n");
    CHECK_THROWS_AS(parse_classes_file(junk), Error);
    std::istringstream extra("classes 3 5\n1 2\n");
    CHECK_THROWS_AS(parse_classes_file(extra), Error);
}

TEST_CASE("parse_tree_file reads parent links and rejects malformed input") {
    std::istringstream ok("tree 4\n1 0\n2 0\n\n3 0\n");
    RootedTree t = parse_tree_file(ok);
    CHECK(t.size() == 4);
    CHECK(t.root == 0);
    CHECK(t.children[0].size() == 3);

    std::istringstream bad_header("graph 4\n");
    CHECK_THROWS_AS(parse_tree_file(bad_header), Error);
    std::istringstream short_file("tree 4\n1 0\n");
    CHECK_THROWS_AS(parse_tree_file(short_file), Error);
    std::istringstream out_of_range("tree 3\n1 0\n5 0\n");
    CHECK_THROWS_AS(parse_tree_file(out_of_range), Error);
    std::istringstream two_parents("tree 3\n1 0\n1 2\n");
    CHECK_THROWS_AS(parse_tree_file(two_parents), Error);
    std::istringstream trailing("tree 3\n1 0\n2 0\nextra\n");
    CHECK_THROWS_AS(parse_tree_file(trailing), Error);
}

TEST_CASE("parse_digraph_file reads arcs until EOF and rejects malformed input") {
    std::istringstream ok("digraph 3\n0 1\n1 2\n2 0\n");
    Digraph d = parse_digraph_file(ok);
    CHECK(d.n == 3);
    CHECK(d.arcs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 0}});

    std::istringstream bad_header("digraph\n");
    CHECK_THROWS_AS(parse_digraph_file(bad_header), Error);
    std::istringstream triple("digraph 3\n0 1 2\n");
    CHECK_THROWS_AS(parse_digraph_file(triple), Error);
    std::istringstream loop("digraph 3\n1 1\n");
    CHECK_THROWS_AS(parse_digraph_file(loop), Error);
    std::istringstream range("digraph 2\n0 5\n");
    CHECK_THROWS_AS(parse_digraph_file(range), Error);
}
