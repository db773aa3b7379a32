#pragma once
// Backtracking exact-cover oracle: finds subset families with prescribed
// sizes and per-set sums over arbitrary ground sets. Each new set opens on
// the first unused element of a fixed visit order (ascending, or a seeded
// shuffle), which breaks set symmetry, so `exhausted` is a proof of
// non-existence for every seed.

#include <cstdint>
#include <optional>
#include <vector>

#include "zsp/partition.hpp"

namespace zsp {

struct SearchBudget {
    std::uint64_t max_nodes = 0;   // 0 = unlimited
    std::uint64_t max_millis = 0;  // 0 = unlimited
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

const char* search_status_name(SearchStatus s);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t millis = 0;
};

struct SearchProblem {
    GroupSpec group;
    GroundSet ground;
    SizeMultiset sizes;     // must sum to |ground|
    code_t target = 0;
    SearchBudget budget;
    std::uint64_t seed = 0;  // 0 = canonical ascending order; nonzero seeds a
                             // deterministic shuffled visit order (restarts)
    int workers = 1;
    bool disable_pruning = false;  // test hook: turns off the forced-last rule
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<SubsetFamily> family;
    SearchStats stats;
};

SearchOutcome search_partition(const SearchProblem& problem);

// All (a,b,c) with 3a+4b+5c = total, in canonical header order
// (ascending c, then ascending b).
std::vector<SizeTriple> enumerate_triples(std::uint64_t total);

struct ConstantSumResult {
    SearchOutcome outcome;
    std::optional<code_t> mu;  // the discovered common sum, when found
};

// Tries every candidate common sum mu (filtered by t*mu = sum of all
// elements, ordered small element order first) over the star of G.
ConstantSumResult explore_constant_sum(const GroupSpec& g, const SizeMultiset& sizes,
                                       const SearchBudget& budget);

// A permutation phi of G (indexed by element code) such that g -> g + phi(g)
// is also a permutation; nullopt means proven non-existence (exactly the
// |I(G)| = 1 groups with |G| > 1). Throws BudgetExceeded when the budget runs
// out before either answer.
std::optional<std::vector<code_t>> find_complete_mapping_search(const GroupSpec& g,
                                                                const SearchBudget& budget);

}  // namespace zsp
