// Core constructive-engine operations: block planning, elementary covers,
// good 6-sets, the boundary split, and the top-level dispatcher.

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "zsp/bitset.hpp"
#include "zsp/engine.hpp"
#include "zsp/errors.hpp"
#include "zsp/tables.hpp"

namespace zsp {

namespace detail {

bool trace_enabled() {
    static const bool on = [] {
        const char* env = std::getenv("ZSP_TRACE");
        return env && *env && std::string(env) != "0";
    }();
    return on;
}

void trace_node(const char* node, const GroupSpec& g, const SizeTriple& t) {
    if (!trace_enabled()) return;
    std::fprintf(stderr, "{\"node\":\"%s\",\"group\":\"%s\",\"triple\":[%llu,%llu,%llu]}\n", node,
                 g.to_string().c_str(), static_cast<unsigned long long>(t.a),
                 static_cast<unsigned long long>(t.b), static_cast<unsigned long long>(t.c));
}

}  // namespace detail

// ---- split_blocks ------------------------------------------------------------

namespace {

// 3*ceil((b-1)/9) <= a + 3c, the second hypothesis of the block lemma.
bool block_balance_ok(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t lhs = b <= 1 ? 0 : (b - 1 + 8) / 9;
    return 3 * lhs <= a + 3 * c;
}

}  // namespace

BlockPlan split_blocks(const SizeTriple& t, std::uint64_t r) {
    if (t.weight() < 45 * r + 12)
        fail(ErrorKind::HypothesisViolated,
             "weight " + std::to_string(t.weight()) + " < 45r+12 for r=" + std::to_string(r));
    if (!block_balance_ok(t.a, t.b, t.c))
        fail(ErrorKind::HypothesisViolated,
             "3*ceil((b-1)/9) > a+3c for " + t.to_string());

    static const std::vector<SizeTriple> patterns = [] {
        std::vector<SizeTriple> p = enumerate_triples(45);
        // Prefer burning 4s (the constrained resource), then 3s.
        std::sort(p.begin(), p.end(), [](const SizeTriple& x, const SizeTriple& y) {
            if (x.b != y.b) return x.b > y.b;
            return x.a > y.a;
        });
        return p;
    }();

    BlockPlan plan;
    std::uint64_t a = t.a, b = t.b, c = t.c;
    for (std::uint64_t i = 0; i < r; ++i) {
        bool placed = false;
        for (const SizeTriple& p : patterns) {
            if (p.a > a || p.b > b || p.c > c) continue;
            if (!block_balance_ok(a - p.a, b - p.b, c - p.c)) continue;
            plan.blocks.push_back(p);
            a -= p.a;
            b -= p.b;
            c -= p.c;
            placed = true;
            break;
        }
        if (!placed)
            fail(ErrorKind::ConstructionBug,
                 "block planner stuck at remainder (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ") with " +
                     std::to_string(r - i) + " blocks to go (input " + t.to_string() + ")");
    }
    plan.leftover = SizeTriple{a, b, c};
    return plan;
}

// ---- elementary covers -------------------------------------------------------

namespace {

// Blockwise T(x,y) = (y, x+y) on consecutive coordinate pairs of (Z2)^m.
code_t gf4_step(const GroupSpec& g, code_t v) {
    std::vector<std::uint64_t> in = g.residues_of(v);
    std::vector<std::uint64_t> out(in.size());
    for (std::size_t j = 0; j + 1 < in.size(); j += 2) {
        out[j] = in[j + 1];
        out[j + 1] = (in[j] + in[j + 1]) % 2;
    }
    return g.encode(out);
}

std::vector<std::array<code_t, 3>> gf4_orbits(const GroupSpec& g) {
    std::vector<std::array<code_t, 3>> triples;
    Bitset seen(g.order());
    seen.set(0);
    for (code_t v = 1; v < g.order(); ++v) {
        if (seen.test(v)) continue;
        code_t v1 = gf4_step(g, v), v2 = gf4_step(g, v1);
        seen.set(v);
        seen.set(v1);
        seen.set(v2);
        std::array<code_t, 3> tri{v, v1, v2};
        std::sort(tri.begin(), tri.end());
        triples.push_back(tri);
    }
    return triples;
}

}  // namespace

SubsetFamily gf4_triple_partition(std::uint64_t m) {
    if (m < 2 || m % 2 != 0)
        fail(ErrorKind::BadInput, "orbit triples need an even rank >= 2, got " +
                                      std::to_string(m));
    GroupSpec g(std::vector<std::uint64_t>(m, 2));
    SubsetFamily f;
    f.group = g;
    for (const auto& tri : gf4_orbits(g)) f.sets.push_back({tri[0], tri[1], tri[2]});
    return f;
}

SubsetFamily triples_minus_octet(std::uint64_t m) {
    if (m < 5 || m % 2 == 0)
        fail(ErrorKind::BadInput,
             "octet-complement triples need an odd rank >= 5, got " + std::to_string(m));
    GroupSpec g(std::vector<std::uint64_t>(m, 2));
    GroupSpec tail(std::vector<std::uint64_t>(m - 3, 2));
    std::uint64_t tail_order = tail.order();

    std::array<code_t, 3> basis{g.unit_code(0), g.unit_code(1), g.unit_code(2)};
    SubsetFamily f;
    f.group = g;
    for (const auto& tri : gf4_orbits(tail)) {
        // Embed the tail triple on the trailing coordinates (tail codes are
        // the low bits of the full code).
        std::array<code_t, 3> p{tri[0], tri[1], tri[2]};
        for (auto& set : octet_triple_cover(g, basis, p)) f.sets.push_back(std::move(set));
    }
    if (f.sets.size() * 3 != g.order() - 8)
        fail(ErrorKind::ConstructionBug, "octet-complement tiling miscount");
    (void)tail_order;
    return f;
}

std::vector<std::vector<code_t>> octet_triple_cover(const GroupSpec& g,
                                                    const std::array<code_t, 3>& basis,
                                                    const std::array<code_t, 3>& p) {
    const auto& v = basis;
    for (code_t b : v)
        if (b == 0 || g.add(b, b) != 0)
            fail(ErrorKind::HypothesisViolated, "octet basis element is not an involution");
    if (g.add(g.add(p[0], p[1]), p[2]) != 0)
        fail(ErrorKind::HypothesisViolated, "triple is not zero-sum");

    code_t v01 = g.add(v[0], v[1]);
    code_t v12 = g.add(v[1], v[2]);
    code_t v20 = g.add(v[2], v[0]);
    code_t v012 = g.add(v01, v[2]);
    std::array<code_t, 8> w{0, v[0], v[1], v[2], v01, v12, v20, v012};

    std::vector<code_t> all;
    for (code_t wi : w)
        for (code_t pj : p) all.push_back(g.add(wi, pj));
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        fail(ErrorKind::HypothesisViolated,
             "octet cover needs all 24 translates distinct (degenerate W+P)");

    auto at = [&](int k) { return v[static_cast<std::size_t>(k % 3)]; };
    auto pa = [&](int k) { return p[static_cast<std::size_t>(k % 3)]; };
    std::vector<std::vector<code_t>> sets;
    for (int k = 0; k < 3; ++k) {
        sets.push_back({pa(k), g.add(at(k), pa(k + 1)), g.add(at(k), pa(k + 2))});
        sets.push_back({g.add(at(k), pa(k)), g.add(g.add(at(k + 1), at(k + 2)), pa(k + 2)),
                        g.add(v012, pa(k + 1))});
    }
    for (int l = 1; l <= 2; ++l) {
        std::vector<code_t> set;
        for (int i = 0; i < 3; ++i) set.push_back(g.add(g.add(at(i), at(i + 1)), pa(i + 1 + l)));
        sets.push_back(std::move(set));
    }
    for (auto& s : sets) {
        code_t sum = 0;
        for (code_t x : s) sum = g.add(sum, x);
        if (sum != 0) fail(ErrorKind::ConstructionBug, "octet triple cover lost zero-sum");
        std::sort(s.begin(), s.end());
    }
    return sets;
}

std::vector<std::vector<code_t>> octet_five_cover(const GroupSpec& g,
                                                  const std::array<code_t, 3>& basis,
                                                  const std::array<code_t, 5>& r) {
    const auto& v = basis;
    for (code_t b : v)
        if (b == 0 || g.add(b, b) != 0)
            fail(ErrorKind::HypothesisViolated, "octet basis element is not an involution");
    code_t rsum = 0;
    for (code_t x : r) rsum = g.add(rsum, x);
    if (rsum != 0) fail(ErrorKind::HypothesisViolated, "5-set is not zero-sum");

    code_t v01 = g.add(v[0], v[1]);
    code_t v12 = g.add(v[1], v[2]);
    code_t v20 = g.add(v[2], v[0]);
    code_t v012 = g.add(v01, v[2]);
    std::array<code_t, 8> w{0, v[0], v[1], v[2], v01, v12, v20, v012};

    std::vector<code_t> all;
    for (code_t wi : w)
        for (code_t x : r) all.push_back(g.add(wi, x));
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        fail(ErrorKind::HypothesisViolated,
             "octet cover needs all 40 translates distinct (degenerate W+R)");

    auto at = [&](int k) { return v[static_cast<std::size_t>(k % 3)]; };
    auto pa = [&](int k) { return r[static_cast<std::size_t>(k % 3)]; };
    code_t q = r[3], rr = r[4];
    std::vector<std::vector<code_t>> sets;
    for (int k = 0; k < 3; ++k) {
        // R_k = P_k plus {v_k+q, v_k+r}
        sets.push_back({pa(k), g.add(at(k), pa(k + 1)), g.add(at(k), pa(k + 2)),
                        g.add(at(k), q), g.add(at(k), rr)});
        // U_k = S_k plus {v_{k+1}+v_{k+2}+q, v_{k+1}+v_{k+2}+r}
        code_t vkk = g.add(at(k + 1), at(k + 2));
        sets.push_back({g.add(at(k), pa(k)), g.add(vkk, pa(k + 2)), g.add(v012, pa(k + 1)),
                        g.add(vkk, q), g.add(vkk, rr)});
    }
    {
        std::vector<code_t> set;  // V_1 = T_1 plus {q, r}
        for (int i = 0; i < 3; ++i) set.push_back(g.add(g.add(at(i), at(i + 1)), pa(i + 2)));
        set.push_back(q);
        set.push_back(rr);
        sets.push_back(std::move(set));
    }
    {
        std::vector<code_t> set;  // V_2 = T_2 plus {v0+v1+v2+q, v0+v1+v2+r}
        for (int i = 0; i < 3; ++i) set.push_back(g.add(g.add(at(i), at(i + 1)), pa(i)));
        set.push_back(g.add(v012, q));
        set.push_back(g.add(v012, rr));
        sets.push_back(std::move(set));
    }
    for (auto& s : sets) {
        code_t sum = 0;
        for (code_t x : s) sum = g.add(sum, x);
        if (sum != 0) fail(ErrorKind::ConstructionBug, "octet 5-set cover lost zero-sum");
        std::sort(s.begin(), s.end());
    }
    return sets;
}

// ---- peel_quadruples ---------------------------------------------------------

std::vector<std::vector<code_t>> peel_quadruples(const GroupSpec& g, const SubgroupFrame& u,
                                                 std::uint64_t k) {
    if (u.parent() != g) fail(ErrorKind::BadInput, "frame belongs to a different group");
    if (u.child().order() * 2 != g.order())
        fail(ErrorKind::BadInput, "quadruple peeling needs an index-2 subgroup");
    if (k != g.order() / 8)
        fail(ErrorKind::BadInput, "quadruple count must be |G|/8");

    // W = the first two independent involutions inside U (lift order equals
    // child order, so scan the child).
    code_t w1 = 0, w2 = 0;
    for (code_t x = 1; x < u.child().order() && w2 == 0; ++x) {
        if (u.child().element_order(x) != 2) continue;
        code_t lifted = u.lift(x);
        if (w1 == 0)
            w1 = lifted;
        else
            w2 = lifted;
    }
    if (w2 == 0)
        fail(ErrorKind::HypothesisViolated,
             "no elementary order-4 subgroup inside " + u.child().to_string());
    code_t w12 = g.add(w1, w2);

    std::vector<std::vector<code_t>> sets;
    Bitset covered(g.order());
    for (code_t x = 0; x < g.order() && sets.size() < k; ++x) {
        if (covered.test(x) || u.contains(x)) continue;
        std::vector<code_t> coset{x, g.add(x, w1), g.add(x, w2), g.add(x, w12)};
        code_t sum = 0;
        for (code_t y : coset) {
            covered.set(y);
            sum = g.add(sum, y);
        }
        if (sum != 0)
            fail(ErrorKind::HypothesisViolated,
                 "coset of W does not sum to zero (element order too large outside U)");
        std::sort(coset.begin(), coset.end());
        sets.push_back(std::move(coset));
    }
    if (sets.size() != k) fail(ErrorKind::ConstructionBug, "quadruple peeling ran short");
    return sets;
}

// ---- good 6-sets -------------------------------------------------------------

GoodSixSet good_six(const GroupSpec& g, code_t c, code_t d) {
    GoodSixSet s;
    s.c = c;
    s.d = d;
    code_t cd = g.add(c, d);
    s.members = {c, d, g.neg(cd), g.neg(c), g.neg(d), cd};
    auto sorted = s.members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::HypothesisViolated, "good 6-set degenerates for c=" +
                                                g.format_element(c) + ", d=" +
                                                g.format_element(d));
    return s;
}

std::array<std::array<code_t, 2>, 3> GoodSixSet::pairs() const {
    return {{{members[0], members[3]}, {members[1], members[4]}, {members[5], members[2]}}};
}

std::array<std::array<code_t, 3>, 2> GoodSixSet::triples() const {
    return {{{members[0], members[1], members[2]}, {members[3], members[4], members[5]}}};
}

SubsetFamily realize_in_good_union(const GroupSpec& g, const std::vector<GoodSixSet>& sets,
                                   const SizeMultiset& parts) {
    for (std::uint64_t q : parts.sizes())
        if (q < 2) fail(ErrorKind::SizePrecondition, "good-union parts must be >= 2");
    if (parts.total() != 6 * sets.size())
        fail(ErrorKind::SizePrecondition,
             "good-union parts must cover " + std::to_string(6 * sets.size()) + " elements");
    std::uint64_t odd = 0;
    for (std::uint64_t q : parts.sizes()) odd += q % 2;
    if (odd % 2 != 0) fail(ErrorKind::ConstructionBug, "odd part count cannot be odd");
    if (odd / 2 > sets.size())
        fail(ErrorKind::SizePrecondition, "too many odd parts for the good union");

    std::vector<std::array<code_t, 3>> triple_atoms;
    std::vector<std::array<code_t, 2>> pair_atoms;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i < odd / 2)
            for (const auto& t : sets[i].triples()) triple_atoms.push_back(t);
        else
            for (const auto& p : sets[i].pairs()) pair_atoms.push_back(p);
    }

    SubsetFamily out;
    out.group = g;
    for (std::uint64_t q : parts.sizes()) {  // descending sizes
        std::vector<code_t> set;
        if (q % 2) {
            if (triple_atoms.empty()) fail(ErrorKind::ConstructionBug, "triple atoms exhausted");
            for (code_t x : triple_atoms.back()) set.push_back(x);
            triple_atoms.pop_back();
        }
        std::uint64_t need_pairs = (q - 3 * (q % 2)) / 2;
        for (std::uint64_t j = 0; j < need_pairs; ++j) {
            if (pair_atoms.empty()) fail(ErrorKind::ConstructionBug, "pair atoms exhausted");
            for (code_t x : pair_atoms.back()) set.push_back(x);
            pair_atoms.pop_back();
        }
        std::sort(set.begin(), set.end());
        out.sets.push_back(std::move(set));
    }
    if (!triple_atoms.empty() || !pair_atoms.empty())
        fail(ErrorKind::ConstructionBug, "good-union atoms left over");
    return out;
}

// ---- boundary split ----------------------------------------------------------

BoundarySplit boundary_split(const SizeMultiset& parts, std::uint64_t target_b) {
    for (std::uint64_t q : parts.sizes())
        if (q < 3 || q > 5) fail(ErrorKind::BadInput, "boundary split expects sizes in {3,4,5}");
    if (target_b % 2 == 0) fail(ErrorKind::BadInput, "subgroup star size must be odd");
    if (parts.total() < target_b)
        fail(ErrorKind::BadInput, "parts do not cover the subgroup star");

    std::uint64_t a = 0, b = 0, c = 0;
    for (std::uint64_t q : parts.sizes()) {
        if (q == 3) ++a;
        else if (q == 4) ++b;
        else ++c;
    }
    for (std::uint64_t k = 0; k <= 4; ++k) {
        if (k > c || 3 * k > target_b) continue;
        std::uint64_t rest = target_b - 3 * k;
        std::uint64_t x5_max = std::min(c - k, rest / 5);
        for (std::uint64_t x5 = x5_max + 1; x5-- > 0;) {
            std::uint64_t m = rest - 5 * x5;  // need 3*x3 + 4*x4 = m
            // x4 must be congruent to m mod 3; raise it until x3 <= a.
            std::int64_t low = static_cast<std::int64_t>(m) - static_cast<std::int64_t>(3 * a);
            std::uint64_t x4 = m % 3;
            if (low > 0) {
                std::uint64_t need = (static_cast<std::uint64_t>(low) + 3) / 4;
                if (need > x4) x4 += ((need - x4) + 2) / 3 * 3;
            }
            if (x4 > b || 4 * x4 > m) continue;
            std::uint64_t x3 = (m - 4 * x4) / 3;
            if (x3 > a) continue;

            BoundarySplit split;
            split.b_triple = SizeTriple{x3 + k, x4, x5};
            std::vector<std::uint64_t> w;
            w.insert(w.end(), a - x3, 3);
            w.insert(w.end(), b - x4, 4);
            w.insert(w.end(), c - x5 - k, 5);
            w.insert(w.end(), k, 2);
            split.w_parts = SizeMultiset(w);
            split.merges = k;
            return split;
        }
    }
    fail(ErrorKind::ConstructionBug,
         "boundary split found no decomposition for target " + std::to_string(target_b) +
             " over " + std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c));
}

// ---- dispatcher ----------------------------------------------------------------

namespace {

bool is_z4_elementary(const GroupSpec& g) {
    const auto& m = g.moduli();
    if (m.empty() || m[0] != 4) return false;
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] != 2) return false;
    return m.size() >= 2;
}

void validate_group(const GroupSpec& g) {
    if (!g.is_two_group()) fail(ErrorKind::NotATwoGroup, g.to_string() + " is not a 2-group");
    if (g.involution_count() == 1)
        fail(ErrorKind::NoZeroSumPartition,
             g.to_string() +
                 " has a unique involution: its elements sum to that involution, not zero");
}

}  // namespace

SubsetFamily realize_triple(const GroupSpec& g, const SizeTriple& t) {
    validate_group(g);
    if (t.weight() != g.order() - 1)
        fail(ErrorKind::SizePrecondition, "triple weight " + std::to_string(t.weight()) +
                                              " != " + std::to_string(g.order() - 1));
    detail::trace_node("realize_triple", g, t);

    SubsetFamily family;
    if (g.order() <= 128) {
        family = TableStore::global().lookup(GroundDescriptor::star(g), t);
    } else if (g.rank() == 2) {
        if (g.order() > 1024)
            fail(ErrorKind::UnsupportedGroup,
                 "rank-2 group " + g.to_string() +
                     " exceeds the search cap (1024); only existence is known here");
        family = TableStore::global().lookup(GroundDescriptor::star(g), t);
    } else if (g.exponent() == 2) {
        family = realize_elementary(g, t);
    } else if (is_z4_elementary(g)) {
        family = realize_z4_elementary(g, t);
    } else if (g.moduli()[0] >= 8) {
        family = realize_via_z8_quotient(g, t);
    } else {
        // exponent 4 with >= 2 factors of Z4 is all that remains for rank >= 3
        std::size_t fours = 0;
        for (auto m : g.moduli()) fours += m == 4;
        if (fours < 2) fail(ErrorKind::ConstructionBug, "dispatch gap at " + g.to_string());
        family = realize_via_z4z4_quotient(g, t);
    }

    VerifyReport rep = verify_family(ground_star(g), family, SizeMultiset::from_triple(t), 0, true);
    if (!rep.ok)
        fail(ErrorKind::ConstructionBug, "construction for " + g.to_string() + " " +
                                             t.to_string() + " failed verification: " +
                                             rep.summary());
    return family;
}

SubsetFamily zero_sum_partition(const GroupSpec& g, const SizeMultiset& sizes) {
    validate_group(g);
    if (sizes.total() != g.order() - 1)
        fail(ErrorKind::SizePrecondition, "sizes sum to " + std::to_string(sizes.total()) +
                                              ", expected " + std::to_string(g.order() - 1));
    if (sizes.total() > 0 && sizes.min_size() < 3)
        fail(ErrorKind::SizePrecondition, "all part sizes must be >= 3");

    auto [reduced, plan] = reduce_sizes(sizes);
    SubsetFamily refined = realize_triple(g, reduced.as_triple());
    SubsetFamily family = plan.trivial() ? std::move(refined) : reassemble(refined, plan);

    VerifyReport rep = verify_family(ground_star(g), family, sizes, 0, true);
    if (!rep.ok)
        fail(ErrorKind::ConstructionBug,
             "partition for " + g.to_string() + " failed verification: " + rep.summary());
    return family;
}

}  // namespace zsp
