// Tests for the realization-table lifecycle: embedded corpus, ground
// descriptors, disk cache behavior, lazy generation, and re-verification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "zsp/search.hpp"
#include "zsp/tables.hpp"

using namespace zsp;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("zsp_tables_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("ground descriptors have stable keys that parse back") {
    GroundDescriptor star = GroundDescriptor::star(parse_group_spec("Z4xZ2^2"));
    CHECK(star.key() == "star:Z4xZ2^2");
    CHECK(GroundDescriptor::parse("star:Z4xZ2^2") == star);

    GroundDescriptor shifted =
        GroundDescriptor::shifted(parse_group_spec("Z4xZ2^2"), parse_group_spec("Z2^2"));
    CHECK(shifted.key() == "shifted:Z4xZ2^2+Z2^2");
    CHECK(GroundDescriptor::parse(shifted.key()) == shifted);
    CHECK(shifted.materialize().size() == 45);

    GroundDescriptor frame =
        GroundDescriptor::frame_star(parse_group_spec("Z8xZ2"), {2, 1});
    CHECK(GroundDescriptor::parse(frame.key()) == frame);
    CHECK(frame.materialize().size() == 7);  // star of the order-8 subgroup

    CHECK_THROWS_AS(GroundDescriptor::parse("nonsense"), Error);
}

TEST_CASE("the embedded corpus covers the six documented ground sets") {
    const std::vector<RealizationTable>& tables = embedded_tables();
    REQUIRE(tables.size() == 6);
    std::set<std::string> keys;
    for (const RealizationTable& t : tables) keys.insert(t.ground.key());
    CHECK(keys == std::set<std::string>{"star:Z4xZ2^2", "star:Z4xZ2^3", "star:Z4^2xZ2",
                                        "star:Z4^3", "star:Z8xZ2^2", "shifted:Z4xZ2^2+Z2^2"});
}

TEST_CASE("every embedded entry verifies as an exact zero-sum cover") {
    for (const RealizationTable& table : embedded_tables()) {
        GroundSet ground = table.ground.materialize();
        CHECK(table.complete());
        for (const auto& [triple, entry] : table.entries) {
            CHECK(entry.provenance == TableProvenance::Embedded);
            CHECK(triple.weight() == ground.size());
            VerifyReport rep = verify_family(ground, entry.family,
                                             SizeMultiset::from_triple(triple), 0, true);
            CAPTURE(table.ground.key());
            CAPTURE(triple.to_string());
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("embedded headers enumerate every triple of the ground weight") {
    for (const RealizationTable& table : embedded_tables()) {
        std::vector<SizeTriple> expected = enumerate_triples(table.ground.materialize().size());
        REQUIRE(table.entries.size() == expected.size());
        std::size_t i = 0;
        for (const auto& [triple, entry] : table.entries) CHECK(triple == expected[i++]);
    }
}

TEST_CASE("documented sample entries exist") {
    const std::vector<RealizationTable>& tables = embedded_tables();
    auto find = [&](const std::string& key) -> const RealizationTable& {
        for (const auto& t : tables)
            if (t.ground.key() == key) return t;
        REQUIRE(false);
        return tables.front();
    };
    CHECK(find("star:Z4xZ2^2").entries.count(SizeTriple{2, 1, 1}) == 1);
    CHECK(find("star:Z4^3").entries.count(SizeTriple{21, 0, 0}) == 1);
    CHECK(find("shifted:Z4xZ2^2+Z2^2").ground.materialize().size() == 45);
}

TEST_CASE("table text round-trips byte-exactly") {
    for (const RealizationTable& table : embedded_tables()) {
        std::string text = table.to_text();
        RealizationTable back =
            RealizationTable::from_text(table.ground, text, TableProvenance::Embedded);
        CHECK(back.to_text() == text);
        REQUIRE(back.entries.size() == table.entries.size());
        for (const auto& [triple, entry] : table.entries)
            CHECK(back.entries.at(triple).family.sets == entry.family.sets);
    }
}

TEST_CASE("lookup serves embedded data verbatim") {
    TempDir dir("verbatim");
    TableStore store(dir.path);
    GroundDescriptor gd = GroundDescriptor::star(parse_group_spec("Z4xZ2^2"));
    SubsetFamily fam = store.lookup(gd, SizeTriple{5, 0, 0});
    const RealizationTable& annex_a = embedded_tables().front();
    CHECK(fam.sets == annex_a.entries.at(SizeTriple{5, 0, 0}).family.sets);
    // Embedded hits do not create cache files.
    CHECK(!fs::exists(dir.path / "star_Z4xZ2_2"));
}

TEST_CASE("lookup generates, persists, and reloads missing entries") {
    TempDir dir("generate");
    GroundDescriptor gd = GroundDescriptor::star(parse_group_spec("Z2^4"));
    GroundSet ground = gd.materialize();

    std::string first_bytes;
    {
        TableStore store(dir.path);
        SubsetFamily fam = store.lookup(gd, SizeTriple{0, 0, 3});
        CHECK(verify_family(ground, fam, SizeMultiset::from_triple(SizeTriple{0, 0, 3}), 0, true)
                  .ok);
        // Exactly one cache file appears.
        std::size_t files = 0;
        fs::path entry;
        for (const auto& e : fs::directory_iterator(dir.path)) {
            ++files;
            entry = e.path();
        }
        REQUIRE(files == 1);
        first_bytes = slurp(entry);
        CHECK(!first_bytes.empty());
    }
    {
        // A fresh store on the same directory reloads the identical family.
        TableStore store(dir.path);
        SubsetFamily fam = store.lookup(gd, SizeTriple{0, 0, 3});
        CHECK(verify_family(ground, fam, SizeMultiset::from_triple(SizeTriple{0, 0, 3}), 0, true)
                  .ok);
        for (const auto& e : fs::directory_iterator(dir.path))
            CHECK(slurp(e.path()) == first_bytes);  // never rewritten
    }
}

TEST_CASE("repeated generation is deterministic across fresh cache dirs") {
    GroundDescriptor gd = GroundDescriptor::star(parse_group_spec("Z2^4"));
    std::string a, b;
    {
        TempDir dir("detA");
        TableStore store(dir.path);
        a = store.full_table(gd).to_text();
    }
    {
        TempDir dir("detB");
        TableStore store(dir.path);
        b = store.full_table(gd).to_text();
    }
    CHECK(a == b);
}

TEST_CASE("full_table produces one verified entry per triple") {
    TempDir dir("full");
    TableStore store(dir.path);
    GroundDescriptor gd = GroundDescriptor::star(parse_group_spec("Z2^4"));
    RealizationTable table = store.full_table(gd);
    CHECK(table.complete());
    CHECK(table.entries.size() == enumerate_triples(15).size());
    GroundSet ground = gd.materialize();
    for (const auto& [triple, entry] : table.entries) {
        CHECK(entry.provenance == TableProvenance::Generated);
        CHECK(verify_family(ground, entry.family, SizeMultiset::from_triple(triple), 0, true).ok);
    }
}

TEST_CASE("lookup rejects weight mismatches") {
    TempDir dir("weight");
    TableStore store(dir.path);
    GroundDescriptor gd = GroundDescriptor::star(parse_group_spec("Z4xZ2^2"));
    CHECK_THROWS_AS(store.lookup(gd, SizeTriple{4, 0, 0}), Error);  // 12 != 15
}

TEST_CASE("generation respects explicit budgets") {
    TempDir dir("budget");
    TableStore store(dir.path);
    GroundDescriptor gd = GroundDescriptor::star(parse_group_spec("Z2^5"));
    SearchBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(store.lookup(gd, SizeTriple{9, 1, 0}, tiny), Error);
}

TEST_CASE("corrupt cache entries are flagged by check_all and regenerated in memory") {
    TempDir dir("corrupt");
    GroundDescriptor gd = GroundDescriptor::star(parse_group_spec("Z2^4"));
    GroundSet ground = gd.materialize();
    SizeTriple t{5, 0, 0};
    {
        TableStore store(dir.path);
        store.lookup(gd, t);
    }
    fs::path entry;
    for (const auto& e : fs::directory_iterator(dir.path)) entry = e.path();
    REQUIRE(!entry.empty());
    {
        std::ofstream out(entry, std::ios::trunc);
        out << "{\"solver_version\": \"zsp-tables-1\", \"garbage\": true}\n";
    }
    TableStore store(dir.path);
    SubsetFamily fam = store.lookup(gd, t);  // regenerates despite the bad file
    CHECK(verify_family(ground, fam, SizeMultiset::from_triple(t), 0, true).ok);

    bool flagged = false;
    for (const TableCheck& c : store.check_all())
        if (!c.ok && c.provenance == "cached") flagged = true;
    CHECK(flagged);
}

TEST_CASE("check_all passes on the embedded corpus and fresh caches") {
    TempDir dir("checkall");
    TableStore store(dir.path);
    store.lookup(GroundDescriptor::star(parse_group_spec("Z2^4")), SizeTriple{5, 0, 0});
    std::size_t embedded = 0, cached = 0;
    for (const TableCheck& c : store.check_all()) {
        CHECK(c.ok);
        if (c.provenance == "embedded") ++embedded;
        if (c.provenance == "cached") ++cached;
    }
    std::size_t expected_embedded = 0;
    for (const RealizationTable& t : embedded_tables()) expected_embedded += t.entries.size();
    CHECK(embedded == expected_embedded);
    CHECK(cached == 1);
}
