// Tests for size multisets, ground sets, the family verifier, size
// reduction/reassembly, and the partition text/JSON codecs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "zsp/codec.hpp"
#include "zsp/partition.hpp"
#include "zsp/search.hpp"
#include "zsp/tables.hpp"

using namespace zsp;

namespace {

// Direct-definition checker used to cross-validate verify_family: pairwise
// disjoint, inside the ground, every set sums to target, exact cover.
bool naive_ok(const GroundSet& ground, const SubsetFamily& family, code_t target) {
    const GroupSpec& g = family.group;
    std::set<code_t> seen;
    std::size_t total = 0;
    for (const auto& set : family.sets) {
        code_t sum = 0;
        for (code_t c : set) {
            if (!ground.contains(c)) return false;
            if (!seen.insert(c).second) return false;
            sum = g.add(sum, c);
            ++total;
        }
        if (sum != target) return false;
    }
    return total == ground.size();
}

}  // namespace

TEST_CASE("size triples order by header convention and print a*3 b*4 c*5") {
    SizeTriple t{2, 1, 1};
    CHECK(t.weight() == 15);
    CHECK(t.to_string() == "2*3 1*4 1*5");
    CHECK(SizeTriple{5, 0, 0} < SizeTriple{1, 3, 0});  // ascending b
    CHECK(SizeTriple{1, 3, 0} < SizeTriple{2, 1, 1});  // ascending c
    CHECK(SizeTriple{2, 1, 1} < SizeTriple{0, 0, 3});
}

TEST_CASE("size multisets store sizes descending with cached totals") {
    SizeMultiset m(std::vector<std::uint64_t>{3, 5, 4, 3});
    CHECK(m.sizes() == std::vector<std::uint64_t>{5, 4, 3, 3});
    CHECK(m.total() == 15);
    CHECK(m.count() == 4);
    CHECK(m.min_size() == 3);
    CHECK(m.only_345());
    CHECK(m.as_triple() == SizeTriple{2, 1, 1});
    CHECK(SizeMultiset::from_triple(SizeTriple{2, 1, 1}) == m);
    CHECK(!SizeMultiset(std::vector<std::uint64_t>{6, 9}).only_345());
}

TEST_CASE("ground sets expose membership and canonical positions") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    GroundSet star = ground_star(g);
    CHECK(star.size() == 7);
    CHECK(!star.contains(0));
    for (code_t c = 1; c < 8; ++c) CHECK(star.contains(c));
    CHECK(star.position(1) == 0);
    CHECK(star.position(0) == GroundSet::npos);
    CHECK_THROWS_AS(ground_explicit(g, {1, 1}), Error);  // duplicate
    CHECK_THROWS_AS(ground_explicit(g, {9}), Error);     // out of range
}

TEST_CASE("shifted-product grounds pair non-zero lead and tail elements") {
    GroupSpec lead = parse_group_spec("Z4xZ2^2");
    GroupSpec tail = parse_group_spec("Z2^2");
    GroundSet gs = ground_shifted_product(lead, tail);
    CHECK(gs.size() == 45);  // 15 lead-star elements x 3 tail-star elements
    GroupSpec ambient = shifted_ambient(lead, tail);
    CHECK(ambient.moduli() == std::vector<std::uint64_t>{4, 2, 2, 2, 2});
    CHECK(gs.group() == ambient);
    for (code_t c : gs.codes()) {
        auto r = ambient.residues_of(c);
        bool lead_zero = r[0] == 0 && r[1] == 0 && r[2] == 0;
        bool tail_zero = r[3] == 0 && r[4] == 0;
        CHECK(!lead_zero);
        CHECK(!tail_zero);
    }
}

TEST_CASE("verify_family accepts the whole star as a single zero-sum set") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    GroundSet star = ground_star(g);
    SubsetFamily fam;
    fam.group = g;
    fam.sets.push_back(star.codes());
    VerifyReport rep = verify_family(star, fam, std::nullopt, 0, true);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
}

TEST_CASE("verify_family reports each defect kind") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    GroundSet star = ground_star(g);

    SubsetFamily wrong_sum;
    wrong_sum.group = g;
    wrong_sum.sets = {{1, 2}};
    VerifyReport rep = verify_family(star, wrong_sum, std::nullopt, 0, false);
    CHECK(!rep.ok);
    CHECK(rep.has(FailureKind::Sum));

    SubsetFamily dup;
    dup.group = g;
    dup.sets = {{1, 1, 2}};
    rep = verify_family(star, dup, std::nullopt, 0, false);
    CHECK(rep.has(FailureKind::Duplicate));

    SubsetFamily overlap;
    overlap.group = g;
    overlap.sets = {{1, 7}, {1, 7}};  // element 1 appears in both sets
    rep = verify_family(star, overlap, std::nullopt, 0, false);
    CHECK(rep.has(FailureKind::Overlap));

    SubsetFamily outside;
    outside.group = g;
    outside.sets = {{0, 4}};  // 0 is not in the star; 0+4 = 4 != 0 too
    rep = verify_family(star, outside, std::nullopt, 0, false);
    CHECK(rep.has(FailureKind::OutsideGround));

    SubsetFamily short_cover;
    short_cover.group = g;
    short_cover.sets = {{2, 6}};  // (0,...)+... leaves 5 elements uncovered
    rep = verify_family(star, short_cover, std::nullopt, 0, true);
    CHECK(rep.has(FailureKind::IncompleteCover));

    SubsetFamily size_mismatch;
    size_mismatch.group = g;
    size_mismatch.sets = {{2, 6}};
    rep = verify_family(star, size_mismatch, SizeMultiset(std::vector<std::uint64_t>{3}), 0,
                        false);
    CHECK(rep.has(FailureKind::SizeMismatch));
    CHECK(!rep.summary().empty());
}

TEST_CASE("verify_family honors non-zero targets") {
    GroupSpec g = parse_group_spec("Z8");
    GroundSet star = ground_star(g);
    SubsetFamily fam;
    fam.group = g;
    fam.sets = {{1, 2, 3, 4, 5, 6, 7}};
    CHECK(verify_family(star, fam, std::nullopt, 4, true).ok);   // star sums to 4
    CHECK(!verify_family(star, fam, std::nullopt, 0, true).ok);  // not to 0
}

TEST_CASE("report is invariant under set and element order shuffles") {
    GroupSpec g = parse_group_spec("Z4xZ2^2");
    TableStore store("/tmp/zsp_test_partition_cache");
    SubsetFamily fam = store.lookup(GroundDescriptor::star(g), SizeTriple{2, 1, 1});
    GroundSet star = ground_star(g);
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        SubsetFamily shuffled = fam;
        std::shuffle(shuffled.sets.begin(), shuffled.sets.end(), rng);
        for (auto& set : shuffled.sets) std::shuffle(set.begin(), set.end(), rng);
        VerifyReport rep = verify_family(star, shuffled, std::nullopt, 0, true);
        CHECK(rep.ok);
    }
}

TEST_CASE("verifier agrees with a direct-definition checker on shipped data") {
    for (const RealizationTable& table : embedded_tables()) {
        GroundSet ground = table.ground.materialize();
        for (const auto& [triple, entry] : table.entries) {
            bool naive = naive_ok(ground, entry.family, 0);
            VerifyReport rep = verify_family(ground, entry.family,
                                             SizeMultiset::from_triple(triple), 0, true);
            CHECK(naive == rep.ok);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("perturbed annex blocks fail verification") {
    const RealizationTable& annex_a = embedded_tables().front();
    GroundSet ground = annex_a.ground.materialize();
    SubsetFamily fam = annex_a.entries.at(SizeTriple{5, 0, 0}).family;
    // Overwrite one member with another set's element: breaks that set's sum
    // and duplicates an element across sets.
    fam.sets[0][0] = fam.sets[1][0];
    VerifyReport rep = verify_family(ground, fam, std::nullopt, 0, true);
    CHECK(!rep.ok);
    CHECK(rep.has(FailureKind::Sum));
    CHECK(rep.has(FailureKind::Overlap));
}

TEST_CASE("reduce_sizes follows the fixed 3k+r subdivision rule") {
    auto [m345, plan_id] = reduce_sizes(SizeMultiset(std::vector<std::uint64_t>{3, 4, 5}));
    CHECK(m345.sizes() == std::vector<std::uint64_t>{5, 4, 3});
    CHECK(plan_id.trivial());

    auto [m7, plan7] = reduce_sizes(SizeMultiset(std::vector<std::uint64_t>{7}));
    CHECK(m7.sizes() == std::vector<std::uint64_t>{4, 3});
    CHECK(!plan7.trivial());
    CHECK(plan7.piece_sizes == std::vector<std::vector<std::uint64_t>>{{3, 4}});

    auto [m9, plan9] = reduce_sizes(SizeMultiset(std::vector<std::uint64_t>{9}));
    CHECK(m9.sizes() == std::vector<std::uint64_t>{3, 3, 3});

    CHECK_THROWS_AS(reduce_sizes(SizeMultiset(std::vector<std::uint64_t>{2, 13})), Error);
}

TEST_CASE("every part up to 200 splits into {3,4,5} pieces of the same total") {
    for (std::uint64_t q = 3; q <= 200; ++q) {
        auto [reduced, plan] = reduce_sizes(SizeMultiset(std::vector<std::uint64_t>{q}));
        CHECK(reduced.total() == q);
        CHECK(reduced.only_345());
        REQUIRE(plan.piece_sizes.size() == 1);
        std::uint64_t piece_total = 0;
        for (std::uint64_t p : plan.piece_sizes[0]) piece_total += p;
        CHECK(piece_total == q);
    }
}

TEST_CASE("reassemble unions pieces back into the original sizes") {
    GroupSpec g = parse_group_spec("Z4xZ2^2");
    SizeMultiset original(std::vector<std::uint64_t>{7, 8});
    auto [reduced, plan] = reduce_sizes(original);
    SearchProblem p;
    p.group = g;
    p.ground = ground_star(g);
    p.sizes = reduced;
    SearchOutcome o = search_partition(p);
    REQUIRE(o.status == SearchStatus::Found);
    SubsetFamily back = reassemble(*o.family, plan);
    CHECK(back.size_multiset() == original);
    CHECK(verify_family(ground_star(g), back, original, 0, true).ok);
}

TEST_CASE("partition text round-trips through the codec") {
    GroupSpec g = parse_group_spec("Z4xZ2^2");
    TableStore store("/tmp/zsp_test_partition_cache");
    TextBlock block;
    block.header = SizeTriple{2, 1, 1};
    block.family = store.lookup(GroundDescriptor::star(g), block.header);
    std::string text = format_partition_block(block);
    CHECK(text.find("A partition for sets of sizes:  2*3  1*4  1*5") != std::string::npos);

    std::vector<TextBlock> parsed = parse_partition_text(g, text);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].header == block.header);
    CHECK(parsed[0].family.sets == block.family.sets);
}

TEST_CASE("codec parses multi-block text and tolerates loose whitespace") {
    GroupSpec g = parse_group_spec("Z2^2");
    std::string text =
        "(0, 1), (1, 0), (1, 1)\n"
        "A partition for sets of sizes:  1*3  0*4  0*5\n"
        "\n"
        "( 0,1 ),(1, 0) , (1,1)\n"
        "  A partition for sets of sizes: 1*3 0*4 0*5\n";
    std::vector<TextBlock> blocks = parse_partition_text(g, text);
    REQUIRE(blocks.size() == 2);
    for (const TextBlock& b : blocks) {
        CHECK(b.header == SizeTriple{1, 0, 0});
        REQUIRE(b.family.sets.size() == 1);
        CHECK(b.family.sets[0] == std::vector<code_t>{1, 2, 3});
    }
}

TEST_CASE("codec rejects blocks without a trailer and malformed tuples") {
    GroupSpec g = parse_group_spec("Z2^2");
    CHECK_THROWS_AS(parse_partition_text(g, "(0, 1), (1, 0), (1, 1)\n"), Error);
    CHECK_THROWS_AS(parse_partition_text(g, "(0, 1, 1)\nA partition for sets of sizes:  0*3  0*4  0*5\n"),
                    Error);
    CHECK_THROWS_AS(parse_partition_text(g, "(0|1)\nA partition for sets of sizes:  1*3  0*4  0*5\n"),
                    Error);
}

TEST_CASE("family JSON round-trips with its ground descriptor") {
    GroupSpec g = parse_group_spec("Z4xZ2^2");
    TableStore store("/tmp/zsp_test_partition_cache");
    SubsetFamily fam = store.lookup(GroundDescriptor::star(g), SizeTriple{5, 0, 0});
    std::string js = family_to_json(fam, "star:Z4xZ2^2");
    auto [back, ground_key] = family_from_json(js);
    CHECK(ground_key == "star:Z4xZ2^2");
    CHECK(back.group == g);
    CHECK(back.sets == fam.sets);
    CHECK_THROWS_AS(family_from_json("{\"group\": \"Z4\"}"), Error);
    CHECK_THROWS_AS(family_from_json("not json"), Error);
}
