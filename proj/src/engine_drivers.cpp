// Recursive drivers: the product decomposition for (Z2)^m and Z4x(Z2)^k,
// and the quotient constructions for groups with larger factors.

#include <algorithm>

#include "zsp/engine.hpp"
#include "zsp/errors.hpp"
#include "zsp/tables.hpp"

namespace zsp {

namespace detail {
void trace_node(const char* node, const GroupSpec& g, const SizeTriple& t);
}

namespace {

std::vector<code_t> lift_sorted(const SubgroupFrame& frame, const std::vector<code_t>& set) {
    std::vector<code_t> out;
    out.reserve(set.size());
    for (code_t x : set) out.push_back(frame.lift(x));
    std::sort(out.begin(), out.end());
    return out;
}

// Large-b escape hatch shared by both product drivers: peel |G|/8 zero-sum
// quadruples off the complement of an index-2 subgroup and recurse inside.
SubsetFamily peel_branch(const GroupSpec& g, const SizeTriple& t) {
    detail::trace_node("peel", g, t);
    std::uint64_t k = g.order() / 8;
    std::vector<std::uint64_t> div(g.rank(), 1);
    div.back() = 2;  // the last coordinate is always Z2 for these shapes
    SubgroupFrame u(g, div);
    std::vector<std::vector<code_t>> quads = peel_quadruples(g, u, k);

    SubsetFamily inner = realize_triple(u.child(), SizeTriple{t.a, t.b - k, t.c});
    SubsetFamily out;
    out.group = g;
    out.sets = std::move(quads);
    for (const auto& s : inner.sets) out.sets.push_back(lift_sorted(u, s));
    return out;
}

// Decomposes G = V x U with V the leading 16-element block (lead_rank
// coordinates) and covers G* as the V-slab over U plus a recursion on U*:
//   G* = (V* x W) u (V* x (U \ W)) u ({0} x U*)
// where W is U's leading octet when U has odd rank (else trivial).
SubsetFamily slab_branch(const GroupSpec& g, const SizeTriple& t, std::size_t lead_rank) {
    detail::trace_node("slab", g, t);
    const auto& mods = g.moduli();
    GroupSpec lead(std::vector<std::uint64_t>(mods.begin(),
                                              mods.begin() + static_cast<long>(lead_rank)));
    GroupSpec tail(std::vector<std::uint64_t>(mods.begin() + static_cast<long>(lead_rank),
                                              mods.end()));
    std::uint64_t uorder = tail.order();
    bool w_present = tail.rank() % 2 == 1;
    std::uint64_t wsize = w_present ? 8 : 1;
    std::uint64_t r = (uorder - wsize) / 3;
    if (15 * wsize + 45 * r + (uorder - 1) != g.order() - 1)
        fail(ErrorKind::ConstructionBug, "slab conservation failed for " + g.to_string());

    SizeTriple t1 =
        3 * t.a > g.order() / 4 ? SizeTriple{5 * wsize, 0, 0} : SizeTriple{0, 0, 3 * wsize};
    if (t1.a > t.a || t1.c > t.c)
        fail(ErrorKind::ConstructionBug,
             "slab slice budget failed for " + g.to_string() + " " + t.to_string());

    TableStore& store = TableStore::global();
    GroundDescriptor lead_star = GroundDescriptor::star(lead);
    auto embed_lead = [&](code_t v) { return v * uorder; };
    std::array<code_t, 3> wbasis{};
    if (w_present)
        wbasis = {g.unit_code(lead_rank), g.unit_code(lead_rank + 1),
                  g.unit_code(lead_rank + 2)};

    SubsetFamily out;
    out.group = g;

    // Slice V* x W.
    if (t1.a > 0) {
        SubsetFamily fives = store.lookup(lead_star, SizeTriple{5, 0, 0});
        for (const auto& tri : fives.sets) {
            std::array<code_t, 3> p{embed_lead(tri[0]), embed_lead(tri[1]), embed_lead(tri[2])};
            if (!w_present)
                out.sets.push_back({p[0], p[1], p[2]});
            else
                for (auto& s : octet_triple_cover(g, wbasis, p)) out.sets.push_back(std::move(s));
        }
    } else {
        SubsetFamily threes = store.lookup(lead_star, SizeTriple{0, 0, 3});
        for (const auto& five : threes.sets) {
            std::array<code_t, 5> p{embed_lead(five[0]), embed_lead(five[1]),
                                    embed_lead(five[2]), embed_lead(five[3]),
                                    embed_lead(five[4])};
            if (!w_present)
                out.sets.push_back({p[0], p[1], p[2], p[3], p[4]});
            else
                for (auto& s : octet_five_cover(g, wbasis, p)) out.sets.push_back(std::move(s));
        }
    }

    // Weight-45 blocks over V* x S_i for the triples S_i tiling U \ W.
    SizeTriple t2{t.a - t1.a, t.b - t1.b, t.c - t1.c};
    BlockPlan plan = split_blocks(t2, r);
    if (plan.leftover.weight() != uorder - 1)
        fail(ErrorKind::ConstructionBug, "slab leftover weight mismatch");

    SubsetFamily tiling = w_present ? triples_minus_octet(tail.rank())
                                    : gf4_triple_partition(tail.rank());
    if (tiling.sets.size() != r) fail(ErrorKind::ConstructionBug, "slab tiling count mismatch");

    GroupSpec z22({2, 2});
    GroundDescriptor block_ground = GroundDescriptor::shifted(lead, z22);
    for (std::uint64_t i = 0; i < r; ++i) {
        code_t s1 = tiling.sets[i][0], s2 = tiling.sets[i][1];
        SubsetFamily block = store.lookup(block_ground, plan.blocks[i]);
        for (const auto& set : block.sets) {
            std::vector<code_t> mapped;
            mapped.reserve(set.size());
            for (code_t e : set) {
                code_t u = e / 4, w = e % 4;
                code_t xi = 0;
                if (w / 2) xi = tail.add(xi, s1);
                if (w % 2) xi = tail.add(xi, s2);
                mapped.push_back(u * uorder + xi);
            }
            std::sort(mapped.begin(), mapped.end());
            out.sets.push_back(std::move(mapped));
        }
    }

    // Leftover on {0} x U*: tail codes embed as-is.
    SubsetFamily inner = realize_triple(tail, plan.leftover);
    for (auto& s : inner.sets) out.sets.push_back(std::move(s));
    return out;
}

// Shared tail of the two quotient constructions: split t between the star
// of the index-4 subgroup B and the good union, recurse, and re-merge the
// recomposed 5-sets.
SubsetFamily quotient_assemble(const GroupSpec& g, const SizeTriple& t,
                               const std::vector<GoodSixSet>& good, const SubgroupFrame& b_frame) {
    std::uint64_t target_b = b_frame.child().order() - 1;
    BoundarySplit split = boundary_split(SizeMultiset::from_triple(t), target_b);

    SubsetFamily fb = realize_triple(b_frame.child(), split.b_triple);
    SubsetFamily fw = realize_in_good_union(g, good, split.w_parts);

    SubsetFamily out;
    out.group = g;
    std::vector<std::vector<code_t>> merge_threes;
    std::uint64_t still_needed = split.merges;
    for (auto it = fb.sets.rbegin(); it != fb.sets.rend(); ++it) {
        if (still_needed > 0 && it->size() == 3) {
            merge_threes.push_back(lift_sorted(b_frame, *it));
            --still_needed;
        } else {
            out.sets.push_back(lift_sorted(b_frame, *it));
        }
    }
    if (still_needed != 0)
        fail(ErrorKind::ConstructionBug, "not enough 3-sets to re-merge after recursion");

    std::vector<std::vector<code_t>> merge_twos;
    for (auto& s : fw.sets) {
        if (s.size() == 2)
            merge_twos.push_back(std::move(s));
        else
            out.sets.push_back(std::move(s));
    }
    if (merge_twos.size() != split.merges)
        fail(ErrorKind::ConstructionBug, "W-side pair count mismatch at re-merge");

    for (std::uint64_t i = 0; i < split.merges; ++i) {
        std::vector<code_t> five = merge_threes[i];
        five.insert(five.end(), merge_twos[i].begin(), merge_twos[i].end());
        std::sort(five.begin(), five.end());
        out.sets.push_back(std::move(five));
    }
    return out;
}

}  // namespace

std::vector<GoodSixSet> build_good_union(const GroupSpec& g, const Case1Frame& frame) {
    if (frame.phi.group != frame.L.child())
        fail(ErrorKind::BadInput, "frame mapping is not over L's child group");
    std::vector<GoodSixSet> out;
    out.reserve(frame.phi.group.order());
    for (code_t a = 0; a < frame.phi.group.order(); ++a) {
        code_t lifted = frame.L.lift(a);
        code_t phi_a = frame.L.lift(frame.phi.apply(a));
        out.push_back(good_six(g, g.add(frame.b, lifted), g.add(frame.c, phi_a)));
    }
    return out;
}

SubsetFamily realize_elementary(const GroupSpec& g, const SizeTriple& t) {
    if (g.exponent() != 2 || g.rank() < 8)
        fail(ErrorKind::BadInput,
             "elementary driver needs (Z2)^m with m >= 8, got " + g.to_string());
    if (t.b >= g.order() / 8) return peel_branch(g, t);
    return slab_branch(g, t, 4);
}

SubsetFamily realize_z4_elementary(const GroupSpec& g, const SizeTriple& t) {
    const auto& mods = g.moduli();
    bool shape = mods.size() >= 7 && mods[0] == 4;
    for (std::size_t i = 1; shape && i < mods.size(); ++i) shape = mods[i] == 2;
    if (!shape)
        fail(ErrorKind::BadInput,
             "driver needs Z4 x (Z2)^k of order >= 256, got " + g.to_string());
    if (t.b >= g.order() / 8) return peel_branch(g, t);
    return slab_branch(g, t, 3);
}

SubsetFamily realize_via_z8_quotient(const GroupSpec& g, const SizeTriple& t) {
    detail::trace_node("z8-quotient", g, t);
    const auto& mods = g.moduli();
    if (mods.empty() || mods[0] < 8 || g.rank() < 3 || g.order() < 256)
        fail(ErrorKind::BadInput,
             "index-8 quotient driver needs a factor >= Z8, rank >= 3, order >= 256; got " +
                 g.to_string());

    std::vector<std::uint64_t> div_l(g.rank(), 1);
    div_l[0] = 8;
    SubgroupFrame l_frame(g, div_l);
    CompleteMapping phi = complete_mapping(l_frame.child());
    Case1Frame frame{l_frame, g.unit_code(0, 4), g.unit_code(0, 1), g.unit_code(0, 2),
                     std::move(phi)};
    std::vector<GoodSixSet> good = build_good_union(g, frame);

    std::vector<std::uint64_t> div_b(g.rank(), 1);
    div_b[0] = 4;
    SubgroupFrame b_frame(g, div_b);
    return quotient_assemble(g, t, good, b_frame);
}

SubsetFamily realize_via_z4z4_quotient(const GroupSpec& g, const SizeTriple& t) {
    detail::trace_node("z4z4-quotient", g, t);
    const auto& mods = g.moduli();
    if (mods.size() < 3 || mods[0] != 4 || mods[1] != 4 || g.order() < 256)
        fail(ErrorKind::BadInput,
             "index-16 quotient driver needs Z4 x Z4 x H with |H| even, order >= 256; got " +
                 g.to_string());

    std::vector<std::uint64_t> div_l(g.rank(), 1);
    div_l[0] = 4;
    div_l[1] = 4;
    SubgroupFrame l_frame(g, div_l);
    CompleteMapping phi = complete_mapping(l_frame.child());

    // Quotient Z4 x Z4 splits into the B-classes {(0,0),(2,0),(0,2),(2,2)}
    // plus two good-class sets with representatives (0,1),(1,2) and
    // (1,0),(1,1).
    Case1Frame f1{l_frame, g.unit_code(0, 2), g.unit_code(1, 1),
                  g.add(g.unit_code(0, 1), g.unit_code(1, 2)), phi};
    Case1Frame f2{l_frame, g.unit_code(1, 2), g.unit_code(0, 1),
                  g.add(g.unit_code(0, 1), g.unit_code(1, 1)), phi};

    std::vector<GoodSixSet> good = build_good_union(g, f1);
    for (auto& s : build_good_union(g, f2)) good.push_back(std::move(s));

    std::vector<std::uint64_t> div_b(g.rank(), 1);
    div_b[0] = 2;
    div_b[1] = 2;
    SubgroupFrame b_frame(g, div_b);
    return quotient_assemble(g, t, good, b_frame);
}

}  // namespace zsp
