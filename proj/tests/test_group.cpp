// Tests for group arithmetic, encodings, structural queries, and frames.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "zsp/group.hpp"

using namespace zsp;

namespace {

Element el(const GroupSpec& g, std::vector<std::uint64_t> r) { return make_element(g, std::move(r)); }

}  // namespace

TEST_CASE("parse_group_spec reads factor lists with repetition") {
    CHECK(parse_group_spec("Z4xZ2^2").moduli() == std::vector<std::uint64_t>{4, 2, 2});
    CHECK(parse_group_spec("Z8xZ2^2").moduli() == std::vector<std::uint64_t>{8, 2, 2});
    CHECK(parse_group_spec("Z2").moduli() == std::vector<std::uint64_t>{2});
    CHECK(parse_group_spec("Z16xZ4xZ2").order() == 128);
}

TEST_CASE("parse_group_spec canonicalizes factor order") {
    CHECK(parse_group_spec("Z2xZ4") == parse_group_spec("Z4xZ2"));
    CHECK(parse_group_spec("Z2^2xZ8xZ4").moduli() == std::vector<std::uint64_t>{8, 4, 2, 2});
    CHECK(parse_group_spec("Z4xZ2").to_string() == "Z4xZ2");
    CHECK(parse_group_spec("Z4^2xZ2^3").to_string() == "Z4^2xZ2^3");
}

TEST_CASE("parse_group_spec rejects bad inputs") {
    CHECK_THROWS_AS(parse_group_spec("Z1xZ2"), Error);   // modulus < 2
    CHECK_THROWS_AS(parse_group_spec(""), Error);
    CHECK_THROWS_AS(parse_group_spec("Z4x"), Error);
    CHECK_THROWS_AS(parse_group_spec("4xZ2"), Error);
    CHECK_THROWS_AS(parse_group_spec("Z2^70"), Error);   // order over 2^62
}

TEST_CASE("code arithmetic matches coordinatewise modular arithmetic") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    CHECK(g.add(el(g, {3, 1}).code, el(g, {2, 1}).code) == el(g, {1, 0}).code);
    CHECK(g.scale(2, el(g, {1, 1}).code) == el(g, {2, 0}).code);

    GroupSpec z8 = parse_group_spec("Z8");
    CHECK(z8.neg(3) == 5);
    CHECK(z8.sub(2, 5) == 5);
    CHECK(z8.scale(-1, 3) == 5);
    CHECK(z8.scale(0, 3) == 0);
    CHECK(z8.scale(3, 3) == 1);
}

TEST_CASE("element wrappers validate arity and reduce residues") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    CHECK_THROWS_AS(make_element(g, {1}), Error);
    CHECK_THROWS_AS(make_element(g, {1, 2, 3}), Error);
    Element x = add(g, el(g, {3, 1}), el(g, {2, 1}));
    CHECK(x.residues == std::vector<std::uint64_t>{1, 0});
    CHECK(neg(g, el(g, {1, 1})).residues == std::vector<std::uint64_t>{3, 1});
}

TEST_CASE("encode uses mixed radix with the last coordinate fastest") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    CHECK(el(g, {3, 1}).code == 7);
    CHECK(decode(g, 0).residues == std::vector<std::uint64_t>{0, 0});
    GroupSpec h = parse_group_spec("Z8xZ2^2");
    CHECK(el(h, {1, 0, 1}).code == 5);
    CHECK(h.encode({1, 0, 1}) == 5);
}

TEST_CASE("encode and decode are mutually inverse bijections") {
    for (const char* name : {"Z4xZ2^2", "Z8xZ4", "Z2^5", "Z16xZ2", "Z3xZ3"}) {
        GroupSpec g = parse_group_spec(name);
        std::set<code_t> seen;
        for (code_t c = 0; c < g.order(); ++c) {
            Element e = decode(g, c);
            CHECK(e.code == c);
            CHECK(g.encode(e.residues) == c);
            seen.insert(c);
        }
        CHECK(seen.size() == g.order());
    }
    GroupSpec g = parse_group_spec("Z4xZ2");
    CHECK_THROWS_AS(decode(g, 8), Error);  // out of range
}

TEST_CASE("involution_count follows 2^e - 1 and matches brute force") {
    CHECK(GroupSpec({4, 2, 2}).involution_count() == 7);
    CHECK(GroupSpec({4}).involution_count() == 1);
    CHECK(GroupSpec({3}).involution_count() == 0);
    for (const char* name : {"Z2", "Z4xZ2", "Z8xZ4xZ2", "Z2^6", "Z3xZ2", "Z16"}) {
        GroupSpec g = parse_group_spec(name);
        std::uint64_t brute = 0;
        for (code_t c = 1; c < g.order(); ++c)
            if (g.add(c, c) == 0) ++brute;
        CHECK(g.involution_count() == brute);
    }
}

TEST_CASE("sum_all_elements is the involution when unique, zero otherwise") {
    CHECK(sum_all_elements(parse_group_spec("Z4")).residues == std::vector<std::uint64_t>{2});
    CHECK(sum_all_elements(parse_group_spec("Z4xZ2")).residues ==
          std::vector<std::uint64_t>{0, 0});
    CHECK(sum_all_elements(parse_group_spec("Z2")).residues == std::vector<std::uint64_t>{1});
    for (const char* name : {"Z2", "Z16", "Z4xZ2", "Z8xZ2^3", "Z2^7", "Z3xZ9", "Z32xZ64"}) {
        GroupSpec g = parse_group_spec(name);
        code_t brute = 0;
        for (code_t c = 0; c < g.order(); ++c) brute = g.add(brute, c);
        CHECK(g.sum_all_codes() == brute);
    }
}

TEST_CASE("exponent is the lcm of the moduli") {
    CHECK(GroupSpec({4, 2, 2}).exponent() == 4);
    CHECK(GroupSpec({2, 2}).exponent() == 2);
    CHECK(GroupSpec({8, 4}).exponent() == 8);
    CHECK(parse_group_spec("Z3xZ4").exponent() == 12);
}

TEST_CASE("element_order divides the exponent and is exact") {
    for (const char* name : {"Z8xZ2", "Z4xZ4", "Z2^4"}) {
        GroupSpec g = parse_group_spec(name);
        for (code_t c = 0; c < g.order(); ++c) {
            std::uint64_t k = g.element_order(c);
            CHECK(g.scale(static_cast<std::int64_t>(k), c) == 0);
            for (std::uint64_t d = 1; d < k; ++d)
                CHECK(g.scale(static_cast<std::int64_t>(d), c) != 0);
        }
    }
}

TEST_CASE("is_two_group recognizes power-of-two moduli only") {
    CHECK(parse_group_spec("Z8xZ2^3").is_two_group());
    CHECK(!parse_group_spec("Z3").is_two_group());
    CHECK(!parse_group_spec("Z6xZ2").is_two_group());
}

TEST_CASE("format_element and parse_element round-trip") {
    GroupSpec g = parse_group_spec("Z8xZ2^2");
    CHECK(g.format_element(5) == "(1, 0, 1)");
    CHECK(parse_element(g, "(1, 0, 1)").code == 5);
    CHECK(parse_element(g, "( 1,0 , 1 )").code == 5);
    CHECK(parse_element(g, "(-1, 0, 1)").code == g.encode({7, 0, 1}));
    CHECK_THROWS_AS(parse_element(g, "(1, 0)"), Error);        // arity
    CHECK_THROWS_AS(parse_element(g, "(1, 0, 1, 0)"), Error);  // arity

    GroupSpec z8 = parse_group_spec("Z8");
    CHECK(parse_element(z8, "5").code == 5);
    CHECK(parse_element(z8, "(5)").code == 5);
}

TEST_CASE("frames expose coordinate-aligned subgroups with canonical isos") {
    GroupSpec g = parse_group_spec("Z8xZ2");
    SubgroupFrame f(g, {8, 1});
    CHECK(f.child().moduli() == std::vector<std::uint64_t>{2});
    CHECK(f.subgroup_order() == 2);
    CHECK(f.elements() == std::vector<code_t>{0, 1});

    GroupSpec z8 = parse_group_spec("Z8");
    SubgroupFrame h(z8, {4});
    CHECK(h.elements() == std::vector<code_t>{0, 4});
    CHECK(h.coset(1) == std::vector<code_t>{1, 5});

    GroupSpec k = parse_group_spec("Z4xZ2xZ2");
    SubgroupFrame q(k, {2, 1, 1});
    CHECK(q.child().moduli() == std::vector<std::uint64_t>{2, 2, 2});
    CHECK_THROWS_AS(SubgroupFrame(k, {3, 1, 1}), Error);  // non-divisor
}

TEST_CASE("frame lift and project are mutually inverse on the subgroup") {
    GroupSpec g = parse_group_spec("Z8xZ4xZ2");
    SubgroupFrame f(g, {4, 2, 1});
    for (code_t c = 0; c < f.child().order(); ++c) {
        code_t lifted = f.lift(c);
        CHECK(f.contains(lifted));
        CHECK(f.project(lifted) == c);
    }
    std::vector<code_t> subgroup = f.elements();
    CHECK(subgroup.size() == f.subgroup_order());
    for (code_t s : subgroup) CHECK(f.contains(s));
}

TEST_CASE("cosets of a frame partition the parent group") {
    GroupSpec g = parse_group_spec("Z4xZ2^2");
    SubgroupFrame f(g, {2, 2, 1});
    CHECK(f.coset(0) == f.elements());
    std::set<code_t> covered;
    std::set<std::vector<code_t>> distinct;
    for (code_t rep = 0; rep < g.order(); ++rep) {
        std::vector<code_t> cs = f.coset(rep);
        CHECK(cs.size() == f.subgroup_order());
        distinct.insert(cs);
        for (code_t c : cs) covered.insert(c);
    }
    CHECK(covered.size() == g.order());
    CHECK(distinct.size() * f.subgroup_order() == g.order());
}

TEST_CASE("unit_code builds single-coordinate elements") {
    GroupSpec g = parse_group_spec("Z8xZ2^2");
    CHECK(g.unit_code(0) == g.encode({1, 0, 0}));
    CHECK(g.unit_code(0, 4) == g.encode({4, 0, 0}));
    CHECK(g.unit_code(2) == g.encode({0, 0, 1}));
}
