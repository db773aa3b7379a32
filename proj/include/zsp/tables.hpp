#pragma once
// Realization tables: verified zero-sum families for every size triple over
// a named ground set, with an embedded seed corpus, an on-disk JSON cache,
// and lazy generation through the exact search.

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "zsp/partition.hpp"
#include "zsp/search.hpp"

namespace zsp {

struct GroundDescriptor {
    enum class Kind { GroupStar, FrameStar, ShiftedProduct, Explicit };

    Kind kind = Kind::GroupStar;
    GroupSpec group;                       // star: the group; frame-star: parent; shifted: lead factor
    std::vector<std::uint64_t> divisors;   // frame-star only
    GroupSpec tail;                        // shifted-product only
    std::vector<code_t> codes;             // explicit only (codes in `group`)

    static GroundDescriptor star(const GroupSpec& g);
    static GroundDescriptor frame_star(const GroupSpec& parent,
                                       const std::vector<std::uint64_t>& divisors);
    static GroundDescriptor shifted(const GroupSpec& lead, const GroupSpec& tail);
    static GroundDescriptor explicit_set(const GroupSpec& ambient, std::vector<code_t> codes);

    // Stable identity string, e.g. "star:Z4xZ2^2" or "shifted:Z4xZ2^2+Z2^2".
    std::string key() const;
    GroundSet materialize() const;

    // Inverse of key() for the non-explicit kinds.
    static GroundDescriptor parse(const std::string& key);

    bool operator==(const GroundDescriptor& o) const { return key() == o.key(); }
};

enum class TableProvenance { Embedded, Generated };

struct TableEntry {
    SubsetFamily family;
    TableProvenance provenance = TableProvenance::Generated;
};

struct RealizationTable {
    GroundDescriptor ground;
    std::map<SizeTriple, TableEntry> entries;

    // True when every triple of the ground's weight is present.
    bool complete() const;
    // Canonical text rendering (blocks in header order).
    std::string to_text() const;
    static RealizationTable from_text(const GroundDescriptor& gd, const std::string& text,
                                      TableProvenance provenance);
};

// The verified embedded corpus (parsed and checked once, then cached).
const std::vector<RealizationTable>& embedded_tables();

struct TableCheck {
    std::string key;
    SizeTriple triple;
    std::string provenance;  // "embedded" or "cached"
    bool ok = false;
    std::string detail;
};

class TableStore {
  public:
    explicit TableStore(std::filesystem::path cache_dir);

    // Process-wide store rooted at $ZSP_CACHE_DIR (default "zsp_cache").
    static TableStore& global();

    // Family for (ground, triple): embedded corpus, then memory, then disk
    // cache, then fresh generation (persisted). Thread-safe.
    SubsetFamily lookup(const GroundDescriptor& gd, const SizeTriple& t,
                        const SearchBudget& budget = {});

    // Generates (or loads) the full table for a ground: one entry per triple.
    RealizationTable full_table(const GroundDescriptor& gd, const SearchBudget& budget = {});

    // Re-verifies the embedded corpus and every cached file on disk.
    std::vector<TableCheck> check_all();

    const std::filesystem::path& cache_dir() const { return dir_; }

  private:
    SubsetFamily generate(const GroundDescriptor& gd, const SizeTriple& t,
                          const SearchBudget& budget);
    std::filesystem::path entry_path(const GroundDescriptor& gd, const SizeTriple& t) const;
    bool load_cached(const GroundDescriptor& gd, const SizeTriple& t, SubsetFamily& out);
    void persist(const GroundDescriptor& gd, const SizeTriple& t, const SubsetFamily& family);

    std::filesystem::path dir_;
    std::mutex mu_;
    std::map<std::string, SubsetFamily> mem_;  // key+triple -> family
};

}  // namespace zsp
