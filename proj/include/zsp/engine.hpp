#pragma once
// Constructive engine: polynomial-time zero-sum partitions of the non-zero
// elements of 2-groups with more than one involution, via coordinate-aligned
// subgroup decompositions and small verified tables.

#include <array>
#include <cstdint>
#include <vector>

#include "zsp/group.hpp"
#include "zsp/partition.hpp"
#include "zsp/search.hpp"

namespace zsp {

// ---- complete mappings -----------------------------------------------------

// A bijection phi of G such that theta: g -> g + phi(g) is also a bijection.
// psi(g) := -theta(g) completes the identity g + phi(g) + psi(g) = 0.
struct CompleteMapping {
    GroupSpec group;
    std::vector<code_t> phi;  // indexed by element code

    code_t apply(code_t g) const { return phi[g]; }
    code_t theta(code_t g) const { return group.add(g, phi[g]); }
    code_t psi(code_t g) const { return group.neg(theta(g)); }
    // O(|G|) bitset check that phi and theta are both permutations.
    bool certify() const;
};

// Deterministic construction ladder (linear maps, coordinate products,
// index-4 extensions, and a searched rank-2 base); the result is always
// certified before it is returned.
CompleteMapping complete_mapping(const GroupSpec& g);

// ---- block planning ---------------------------------------------------------

struct BlockPlan {
    std::vector<SizeTriple> blocks;  // each of weight 45
    SizeTriple leftover;
};

// Splits t into r weight-45 blocks plus a leftover, assuming
// 3a+4b+5c >= 45r+12 and ceil((b-1)/9) <= a/3 + c.
BlockPlan split_blocks(const SizeTriple& t, std::uint64_t r);

// ---- elementary-group covers -------------------------------------------------

// Zero-sum triples partitioning the star of (Z2)^m, m even: orbits of the
// blockwise map T(x,y) = (y, x+y).
SubsetFamily gf4_triple_partition(std::uint64_t m);

// Zero-sum triples partitioning (Z2)^m minus its leading 3-coordinate octet
// subgroup, m odd >= 5.
SubsetFamily triples_minus_octet(std::uint64_t m);

// Given an octet W = <v0,v1,v2> (elementary of order 8) and a zero-sum
// triple P = {p0,p1,p2} with all 24 sums w+p distinct, returns 8 zero-sum
// triples covering W+P.
std::vector<std::vector<code_t>> octet_triple_cover(const GroupSpec& g,
                                                    const std::array<code_t, 3>& basis,
                                                    const std::array<code_t, 3>& p);

// Same for a zero-sum 5-set R = {p0,p1,p2,q,r} (all 40 sums distinct):
// 8 zero-sum 5-sets covering W+R.
std::vector<std::vector<code_t>> octet_five_cover(const GroupSpec& g,
                                                  const std::array<code_t, 3>& basis,
                                                  const std::array<code_t, 5>& r);

// The k = |G|/8 cosets of an elementary order-4 subgroup W <= U that lie
// outside the index-2 subgroup U; each coset sums to zero (requires
// exponent constraints checked at runtime).
std::vector<std::vector<code_t>> peel_quadruples(const GroupSpec& g, const SubgroupFrame& u,
                                                 std::uint64_t k);

// ---- good 6-sets -------------------------------------------------------------

struct GoodSixSet {
    code_t c = 0, d = 0;
    std::array<code_t, 6> members{};  // {c, d, -c-d, -c, -d, c+d}

    std::array<std::array<code_t, 2>, 3> pairs() const;    // three zero-sum pairs
    std::array<std::array<code_t, 3>, 2> triples() const;  // two zero-sum triples
};

GoodSixSet good_six(const GroupSpec& g, code_t c, code_t d);

struct Case1Frame {
    SubgroupFrame L;            // index-8 subgroup (or index-16 for the Z4xZ4 case)
    code_t e = 0;               // class-4 representative (unused by the good union)
    code_t b = 0, c = 0;        // good-union coset representatives
    CompleteMapping phi;        // complete mapping of L's child group
};

// One good 6-set per element of L: {b+a, c+phi(a), -b-c+psi(a), -b-a,
// -c-phi(a), b+c-psi(a)}.
std::vector<GoodSixSet> build_good_union(const GroupSpec& g, const Case1Frame& frame);

// Realizes parts (all >= 2) as zero-sum subsets of the union of good 6-sets,
// consuming each set as three zero-sum pairs or two zero-sum triples.
SubsetFamily realize_in_good_union(const GroupSpec& g, const std::vector<GoodSixSet>& sets,
                                   const SizeMultiset& parts);

// ---- boundary split ----------------------------------------------------------

struct BoundarySplit {
    SizeTriple b_triple;    // realized in B* by recursion (includes `merges` extra 3s)
    SizeMultiset w_parts;   // realized in the good union (includes `merges` 2s)
    std::uint64_t merges = 0;  // pair up this many B-side 3-sets with W-side 2-sets
};

// Splits parts (sizes in {3,4,5}) between a subgroup star of odd size
// target_b and the good union, recomposing at most four 5s as 3+2.
BoundarySplit boundary_split(const SizeMultiset& parts, std::uint64_t target_b);

// ---- drivers and entry points -------------------------------------------------

// Realizes t over the star of G = (Z2)^m (m >= 8, weight(t) = |G|-1).
SubsetFamily realize_elementary(const GroupSpec& g, const SizeTriple& t);
// Same for G = Z4 x (Z2)^(n-2), order >= 256.
SubsetFamily realize_z4_elementary(const GroupSpec& g, const SizeTriple& t);
// Same for G with a factor of order >= 8 and rank >= 3 (index-8 quotient path).
SubsetFamily realize_via_z8_quotient(const GroupSpec& g, const SizeTriple& t);
// Same for exponent-4 G with at least two Z4 factors (index-16 quotient path).
SubsetFamily realize_via_z4z4_quotient(const GroupSpec& g, const SizeTriple& t);

// Dispatcher: realizes a {3,4,5} size triple over the star of any supported
// 2-group with |I(G)| > 1.
SubsetFamily realize_triple(const GroupSpec& g, const SizeTriple& t);

// Main entry: zero-sum partition of the non-zero elements with the given
// part sizes (all >= 3, summing to |G|-1).
SubsetFamily zero_sum_partition(const GroupSpec& g, const SizeMultiset& sizes);

}  // namespace zsp
