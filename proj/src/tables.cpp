// Realization-table lifecycle: embedded corpus, JSON disk cache with atomic
// writes, and lazy generation through the exact search.

#include "zsp/tables.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zsp/codec.hpp"
#include "zsp/errors.hpp"

namespace zsp {

namespace {

constexpr const char* kSolverVersion = "zsp-tables-1";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

}  // namespace

GroundDescriptor GroundDescriptor::star(const GroupSpec& g) {
    GroundDescriptor d;
    d.kind = Kind::GroupStar;
    d.group = g;
    return d;
}

GroundDescriptor GroundDescriptor::frame_star(const GroupSpec& parent,
                                              const std::vector<std::uint64_t>& divisors) {
    GroundDescriptor d;
    d.kind = Kind::FrameStar;
    d.group = parent;
    d.divisors = divisors;
    return d;
}

GroundDescriptor GroundDescriptor::shifted(const GroupSpec& lead, const GroupSpec& tail) {
    GroundDescriptor d;
    d.kind = Kind::ShiftedProduct;
    d.group = lead;
    d.tail = tail;
    return d;
}

GroundDescriptor GroundDescriptor::explicit_set(const GroupSpec& ambient,
                                                std::vector<code_t> codes) {
    GroundDescriptor d;
    d.kind = Kind::Explicit;
    d.group = ambient;
    d.codes = std::move(codes);
    return d;
}

std::string GroundDescriptor::key() const {
    switch (kind) {
        case Kind::GroupStar: return "star:" + group.to_string();
        case Kind::FrameStar: {
            std::string s = "frame-star:" + group.to_string() + "/[";
            for (std::size_t i = 0; i < divisors.size(); ++i)
                s += (i ? "," : "") + std::to_string(divisors[i]);
            return s + "]";
        }
        case Kind::ShiftedProduct: return "shifted:" + group.to_string() + "+" + tail.to_string();
        case Kind::Explicit: {
            std::string blob;
            for (code_t c : codes) blob += std::to_string(c) + ",";
            std::ostringstream os;
            os << "explicit:" << group.to_string() << ":" << codes.size() << ":" << std::hex
               << fnv1a(blob);
            return os.str();
        }
    }
    fail(ErrorKind::ConstructionBug, "unreachable ground kind");
}

GroundSet GroundDescriptor::materialize() const {
    switch (kind) {
        case Kind::GroupStar: return ground_star(group);
        case Kind::FrameStar: return ground_frame_star(SubgroupFrame(group, divisors));
        case Kind::ShiftedProduct: return ground_shifted_product(group, tail);
        case Kind::Explicit: return ground_explicit(group, codes);
    }
    fail(ErrorKind::ConstructionBug, "unreachable ground kind");
}

GroundDescriptor GroundDescriptor::parse(const std::string& key) {
    auto colon = key.find(':');
    if (colon == std::string::npos)
        fail(ErrorKind::BadInput, "ground descriptor needs a kind prefix: " + key);
    std::string kind = key.substr(0, colon);
    std::string rest = key.substr(colon + 1);
    if (kind == "star") return star(parse_group_spec(rest));
    if (kind == "shifted") {
        auto plus = rest.find('+');
        if (plus == std::string::npos)
            fail(ErrorKind::BadInput, "shifted ground needs lead+tail: " + key);
        return shifted(parse_group_spec(rest.substr(0, plus)),
                       parse_group_spec(rest.substr(plus + 1)));
    }
    if (kind == "frame-star") {
        auto slash = rest.find('/');
        if (slash == std::string::npos || rest.size() < slash + 3 || rest[slash + 1] != '[' ||
            rest.back() != ']')
            fail(ErrorKind::BadInput, "frame-star ground needs parent/[divisors]: " + key);
        GroupSpec parent = parse_group_spec(rest.substr(0, slash));
        std::vector<std::uint64_t> divisors;
        std::string body = rest.substr(slash + 2, rest.size() - slash - 3);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) divisors.push_back(std::stoull(tok));
        return frame_star(parent, divisors);
    }
    fail(ErrorKind::BadInput, "unknown ground kind: " + kind);
}

bool RealizationTable::complete() const {
    GroundSet gs = ground.materialize();
    for (const SizeTriple& t : enumerate_triples(gs.size()))
        if (!entries.count(t)) return false;
    return true;
}

std::string RealizationTable::to_text() const {
    std::vector<TextBlock> blocks;
    for (const auto& [t, e] : entries) blocks.push_back(TextBlock{t, e.family});
    return format_partition_text(blocks);
}

RealizationTable RealizationTable::from_text(const GroundDescriptor& gd, const std::string& text,
                                             TableProvenance provenance) {
    GroundSet gs = gd.materialize();
    RealizationTable table;
    table.ground = gd;
    std::vector<TextBlock> blocks = parse_partition_text(gs.group(), text);
    for (TextBlock& b : blocks) {
        VerifyReport rep = verify_family(gs, b.family, SizeMultiset::from_triple(b.header), 0, true);
        if (!rep.ok)
            fail(ErrorKind::ConstructionBug, "table entry " + b.header.to_string() + " over " +
                                                 gd.key() + " failed verification: " +
                                                 rep.summary());
        table.entries[b.header] = TableEntry{std::move(b.family), provenance};
    }
    return table;
}

namespace embedded {
// Defined in embedded_tables.cpp.
struct RawTable {
    const char* key;
    const char* text;
};
extern const RawTable kRawTables[];
extern const std::size_t kRawTableCount;
}  // namespace embedded

const std::vector<RealizationTable>& embedded_tables() {
    static const std::vector<RealizationTable> tables = [] {
        std::vector<RealizationTable> out;
        for (std::size_t i = 0; i < embedded::kRawTableCount; ++i) {
            GroundDescriptor gd = GroundDescriptor::parse(embedded::kRawTables[i].key);
            out.push_back(RealizationTable::from_text(gd, embedded::kRawTables[i].text,
                                                      TableProvenance::Embedded));
        }
        return out;
    }();
    return tables;
}

TableStore::TableStore(std::filesystem::path cache_dir) : dir_(std::move(cache_dir)) {}

TableStore& TableStore::global() {
    static TableStore store = [] {
        const char* env = std::getenv("ZSP_CACHE_DIR");
        return TableStore(env && *env ? std::filesystem::path(env)
                                      : std::filesystem::path("zsp_cache"));
    }();
    return store;
}

std::filesystem::path TableStore::entry_path(const GroundDescriptor& gd,
                                             const SizeTriple& t) const {
    std::string key = gd.key();
    std::ostringstream name;
    name << sanitize(key) << "_" << t.a << "_" << t.b << "_" << t.c << "_" << std::hex
         << (fnv1a(key) & 0xffffffffull) << ".json";
    return dir_ / name.str();
}

SubsetFamily TableStore::lookup(const GroundDescriptor& gd, const SizeTriple& t,
                                const SearchBudget& budget) {
    std::string key = gd.key();
    for (const RealizationTable& table : embedded_tables()) {
        if (table.ground.key() != key) continue;
        auto it = table.entries.find(t);
        if (it != table.entries.end()) return it->second.family;
    }
    std::string mem_key = key + "#" + t.to_string();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mem_.find(mem_key);
        if (it != mem_.end()) return it->second;
    }
    SubsetFamily family;
    if (!load_cached(gd, t, family)) {
        family = generate(gd, t, budget);
        persist(gd, t, family);
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        mem_.emplace(mem_key, family);
    }
    return family;
}

SubsetFamily TableStore::generate(const GroundDescriptor& gd, const SizeTriple& t,
                                  const SearchBudget& budget) {
    GroundSet gs = gd.materialize();
    SearchProblem p;
    p.group = gs.group();
    p.ground = gs;
    p.sizes = SizeMultiset::from_triple(t);
    p.target = 0;

    // First-fit depth-first search is instant on most instances but can
    // stall on rare size mixes, so larger grounds run a fixed schedule of
    // seeded restarts with growing node caps. Every restart enumerates the
    // whole space in its own order, so an exhausted run at any seed is a
    // definitive non-existence proof, and the fixed schedule keeps generated
    // tables reproducible. Small grounds settle in a single canonical pass.
    auto start = std::chrono::steady_clock::now();
    std::uint64_t spent_nodes = 0;
    auto attempt = [&](std::uint64_t seed, std::uint64_t cap) -> SearchOutcome {
        p.seed = seed;
        p.budget = budget;
        if (cap && (p.budget.max_nodes == 0 || cap < p.budget.max_nodes - spent_nodes))
            p.budget.max_nodes = cap;
        else if (p.budget.max_nodes)
            p.budget.max_nodes -= spent_nodes;
        if (budget.max_millis) {
            auto used = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            if (static_cast<std::uint64_t>(used) >= budget.max_millis)
                fail(ErrorKind::BudgetExceeded, "table generation for " + gd.key() + " " +
                                                    t.to_string() + " ran out of budget");
            p.budget.max_millis = budget.max_millis - static_cast<std::uint64_t>(used);
        }
        SearchOutcome o = search_partition(p);
        spent_nodes += o.stats.nodes;
        if (o.status == SearchStatus::Exhausted)
            fail(ErrorKind::ConstructionBug,
                 "no realization exists for " + gd.key() + " " + t.to_string());
        return o;
    };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> schedule;
    if (gs.size() <= 24) {
        schedule.push_back({0, 0});  // single exhaustive canonical pass
    } else {
        schedule.push_back({0, 1'000'000});
        for (std::uint64_t k = 1; k <= 64; ++k)
            schedule.push_back({k, std::min<std::uint64_t>(1'000'000ull << (k / 4), 256'000'000)});
        schedule.push_back({0, 0});  // completeness fallback, never reached in practice
    }
    for (auto [seed, cap] : schedule) {
        if (budget.max_nodes && spent_nodes >= budget.max_nodes)
            fail(ErrorKind::BudgetExceeded, "table generation for " + gd.key() + " " +
                                                t.to_string() + " ran out of budget");
        SearchOutcome o = attempt(seed, cap);
        if (o.status == SearchStatus::Found) return *o.family;
    }
    fail(ErrorKind::BudgetExceeded,
         "table generation for " + gd.key() + " " + t.to_string() + " ran out of budget");
}

bool TableStore::load_cached(const GroundDescriptor& gd, const SizeTriple& t, SubsetFamily& out) {
    std::filesystem::path path = entry_path(gd, t);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return false;
    std::ifstream in(path);
    if (!in) return false;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        nlohmann::json j = nlohmann::json::parse(buf.str());
        if (j.value("solver_version", "") != kSolverVersion) return false;
        if (j.value("ground", "") != gd.key()) return false;
        GroundSet gs = gd.materialize();
        SubsetFamily family;
        family.group = gs.group();
        for (const auto& jset : j.at("sets")) {
            std::vector<code_t> set;
            for (const auto& jel : jset) {
                std::vector<std::uint64_t> residues = jel.get<std::vector<std::uint64_t>>();
                set.push_back(gs.group().encode(residues));
            }
            family.sets.push_back(std::move(set));
        }
        VerifyReport rep = verify_family(gs, family, SizeMultiset::from_triple(t), 0, true);
        if (!rep.ok) return false;  // stale or corrupt cache entry: regenerate
        out = std::move(family);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void TableStore::persist(const GroundDescriptor& gd, const SizeTriple& t,
                         const SubsetFamily& family) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::filesystem::path path = entry_path(gd, t);
    if (std::filesystem::exists(path, ec)) return;  // never rewrite: byte-stable cache

    nlohmann::json j;
    j["solver_version"] = kSolverVersion;
    j["ground"] = gd.key();
    j["group"] = family.group.to_string();
    j["triple"] = {t.a, t.b, t.c};
    nlohmann::json jsets = nlohmann::json::array();
    for (const auto& set : family.sets) {
        nlohmann::json jset = nlohmann::json::array();
        for (code_t c : set) jset.push_back(family.group.residues_of(c));
        jsets.push_back(std::move(jset));
    }
    j["sets"] = std::move(jsets);

    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream outf(tmp, std::ios::trunc);
        outf << j.dump(2) << "\n";
        if (!outf) {
            std::filesystem::remove(tmp, ec);
            return;  // cache write failure is non-fatal
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

RealizationTable TableStore::full_table(const GroundDescriptor& gd, const SearchBudget& budget) {
    GroundSet gs = gd.materialize();
    RealizationTable table;
    table.ground = gd;
    std::string key = gd.key();
    for (const SizeTriple& t : enumerate_triples(gs.size())) {
        TableProvenance prov = TableProvenance::Generated;
        for (const RealizationTable& e : embedded_tables())
            if (e.ground.key() == key && e.entries.count(t)) prov = TableProvenance::Embedded;
        table.entries[t] = TableEntry{lookup(gd, t, budget), prov};
    }
    return table;
}

std::vector<TableCheck> TableStore::check_all() {
    std::vector<TableCheck> out;
    for (const RealizationTable& table : embedded_tables()) {
        GroundSet gs = table.ground.materialize();
        for (const auto& [t, e] : table.entries) {
            TableCheck c;
            c.key = table.ground.key();
            c.triple = t;
            c.provenance = "embedded";
            VerifyReport rep = verify_family(gs, e.family, SizeMultiset::from_triple(t), 0, true);
            c.ok = rep.ok;
            if (!rep.ok) c.detail = rep.summary();
            out.push_back(std::move(c));
        }
    }
    std::error_code ec;
    if (std::filesystem::exists(dir_, ec)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            TableCheck c;
            c.provenance = "cached";
            c.key = path.filename().string();
            try {
                std::ifstream in(path);
                std::stringstream buf;
                buf << in.rdbuf();
                nlohmann::json j = nlohmann::json::parse(buf.str());
                std::string ground_key = j.at("ground").get<std::string>();
                auto jt = j.at("triple");
                SizeTriple t{jt.at(0).get<std::uint64_t>(), jt.at(1).get<std::uint64_t>(),
                             jt.at(2).get<std::uint64_t>()};
                c.key = ground_key;
                c.triple = t;
                GroundDescriptor gd = GroundDescriptor::parse(ground_key);
                SubsetFamily family;
                if (j.value("solver_version", "") != kSolverVersion) {
                    c.detail = "solver version mismatch";
                } else if (load_cached(gd, t, family)) {
                    c.ok = true;
                } else {
                    c.detail = "failed verification";
                }
            } catch (const std::exception& e) {
                c.detail = e.what();
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace zsp
