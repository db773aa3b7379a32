// Exact backtracking search over ground sets, plus the triple enumerator,
// the constant-sum explorer, and the complete-mapping search.

#include "zsp/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "zsp/bitset.hpp"
#include "zsp/errors.hpp"

namespace zsp {

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetHit {};
struct FoundElsewhere {};

// One depth-first worker. Positions are visited in a fixed total order
// (ascending when seed == 0, a seeded shuffle otherwise); each new set opens
// on the first unused position in that order, which breaks set symmetry, so
// an exhausted run is a proof of non-existence for any seed. The size of
// each opened set is a branch point (smallest size first); members are
// enumerated in ascending visit order. With pruning on, the last member of a
// set is forced to target - partial_sum.
class Searcher {
  public:
    Searcher(const SearchProblem& p, const std::atomic<bool>* stop_flag)
        : g_(p.group),
          ground_(p.ground),
          target_(p.target),
          disable_pruning_(p.disable_pruning),
          budget_(p.budget),
          stop_flag_(stop_flag),
          used_(p.ground.size()),
          start_(Clock::now()) {
        const auto& desc = p.sizes.sizes();  // descending
        for (auto it = desc.rbegin(); it != desc.rend(); ++it) {  // open smallest first
            if (!size_slots_.empty() && size_slots_.back().size == *it)
                size_slots_.back().count += 1;
            else
                size_slots_.push_back(Slot{*it, 1});
        }
        std::size_t n = ground_.size();
        perm_.resize(n);
        for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
        if (p.seed != 0) {
            std::mt19937_64 rng(p.seed);
            std::shuffle(perm_.begin(), perm_.end(), rng);
        }
        rank_of_.resize(n);
        for (std::size_t r = 0; r < n; ++r) rank_of_[perm_[r]] = r;
    }

    // Runs the full search (all top-level branches). Returns true when a
    // family was found; false means the space was exhausted.
    bool run() {
        if (ground_.size() == 0) return size_slots_.empty() || total_count() == 0;
        return cover();
    }

    // Runs only the top-level branches whose index is == shard (mod shards).
    bool run_shard(int shard, int shards) {
        shard_ = shard;
        shards_ = shards;
        at_top_ = true;
        if (ground_.size() == 0) return size_slots_.empty() || total_count() == 0;
        return cover();
    }

    std::uint64_t nodes() const { return nodes_; }

    SubsetFamily family() const {
        SubsetFamily f;
        f.group = g_;
        f.sets = done_sets_;
        for (auto& s : f.sets) std::sort(s.begin(), s.end());
        return f;
    }

  private:
    struct Slot {
        std::uint64_t size;
        std::uint64_t count;
    };

    std::uint64_t total_count() const {
        std::uint64_t n = 0;
        for (const auto& s : size_slots_) n += s.count;
        return n;
    }

    void tick() {
        ++nodes_;
        if ((nodes_ & 0x3ff) == 0) {
            if (stop_flag_ && stop_flag_->load(std::memory_order_relaxed)) throw FoundElsewhere{};
            if (budget_.max_millis) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                                start_)
                              .count();
                if (static_cast<std::uint64_t>(ms) > budget_.max_millis) throw BudgetHit{};
            }
        }
        if (budget_.max_nodes && nodes_ > budget_.max_nodes) throw BudgetHit{};
    }

    // Opens the next set (or finishes). Every position is covered because
    // the size total equals the ground size.
    bool cover() {
        std::size_t n = used_.size();
        std::size_t r0 = 0;
        while (r0 < n && used_.test(perm_[r0])) ++r0;
        if (r0 == n) return true;  // everything covered
        std::size_t p0 = perm_[r0];
        bool top = at_top_;
        at_top_ = false;
        int branch = 0;
        for (auto& slot : size_slots_) {
            if (slot.count == 0) continue;
            if (top && shards_ > 1 && slot.size <= 1) {
                // Size-1 sets have no second element; treat as one branch.
                if (branch++ % shards_ != shard_) continue;
            }
            slot.count -= 1;
            used_.set(p0);
            cur_.assign(1, ground_.code_at(p0));
            cur_sum_ = ground_.code_at(p0);
            bool ok;
            if (top && shards_ > 1 && slot.size > 1)
                ok = extend_sharded(slot.size, r0 + 1, branch);
            else
                ok = extend(slot.size, r0 + 1);
            used_.reset(p0);
            slot.count += 1;
            if (ok) return true;
        }
        at_top_ = top;
        return false;
    }

    // Extends the open set (currently cur_, need = size - |cur_|) choosing
    // members at visit ranks >= from.
    bool extend(std::uint64_t size, std::size_t from) {
        std::uint64_t need = size - cur_.size();
        if (need == 0) {
            if (cur_sum_ != target_) return false;
            done_sets_.push_back(cur_);
            std::vector<code_t> saved = std::move(cur_);
            code_t saved_sum = cur_sum_;
            bool ok = cover();
            cur_ = std::move(saved);
            cur_sum_ = saved_sum;
            if (!ok) done_sets_.pop_back();  // on success, keep the family intact
            return ok;
        }
        if (need == 1 && !disable_pruning_) {
            tick();
            code_t want = g_.sub(target_, cur_sum_);
            std::size_t pos = ground_.position(want);
            if (pos == GroundSet::npos || used_.test(pos)) return false;
            std::size_t r = rank_of_[pos];
            if (r < from) return false;
            code_t prev = cur_sum_;
            used_.set(pos);
            cur_.push_back(want);
            cur_sum_ = target_;
            bool ok = extend(size, r + 1);
            cur_sum_ = prev;
            cur_.pop_back();
            used_.reset(pos);
            return ok;
        }
        for (std::size_t r = from; r + (need - 1) < used_.size(); ++r) {
            std::size_t pos = perm_[r];
            if (used_.test(pos)) continue;
            tick();
            used_.set(pos);
            cur_.push_back(ground_.code_at(pos));
            code_t prev = cur_sum_;
            cur_sum_ = g_.add(cur_sum_, ground_.code_at(pos));
            bool ok = extend(size, r + 1);
            cur_sum_ = prev;
            cur_.pop_back();
            used_.reset(pos);
            if (ok) return true;
        }
        return false;
    }

    // Top-level sharding: distributes the second-element choices of the very
    // first set across workers.
    bool extend_sharded(std::uint64_t size, std::size_t from, int& branch) {
        std::uint64_t need = size - cur_.size();
        for (std::size_t r = from; r + (need - 1) < used_.size(); ++r) {
            std::size_t pos = perm_[r];
            if (used_.test(pos)) continue;
            if (branch++ % shards_ != shard_) continue;
            tick();
            used_.set(pos);
            cur_.push_back(ground_.code_at(pos));
            code_t prev = cur_sum_;
            cur_sum_ = g_.add(cur_sum_, ground_.code_at(pos));
            bool ok = extend(size, r + 1);
            cur_sum_ = prev;
            cur_.pop_back();
            used_.reset(pos);
            if (ok) return true;
        }
        return false;
    }

    const GroupSpec& g_;
    const GroundSet& ground_;
    code_t target_;
    bool disable_pruning_;
    SearchBudget budget_;
    const std::atomic<bool>* stop_flag_;

    std::vector<Slot> size_slots_;  // ascending size
    std::vector<std::size_t> perm_;     // visit rank -> ground position
    std::vector<std::size_t> rank_of_;  // ground position -> visit rank
    Bitset used_;
    std::vector<code_t> cur_;
    code_t cur_sum_ = 0;
    std::vector<std::vector<code_t>> done_sets_;
    std::uint64_t nodes_ = 0;
    std::uint64_t open_sets_ = 0;
    Clock::time_point start_;
    bool at_top_ = false;
    int shard_ = 0;
    int shards_ = 1;
};

}  // namespace

SearchOutcome search_partition(const SearchProblem& problem) {
    if (problem.sizes.total() != problem.ground.size())
        fail(ErrorKind::BadInput, "size multiset total " + std::to_string(problem.sizes.total()) +
                                      " != ground size " +
                                      std::to_string(problem.ground.size()));
    if (problem.ground.group() != problem.group)
        fail(ErrorKind::BadInput, "ground set belongs to a different group");

    auto start = Clock::now();
    SearchOutcome out;
    int workers = std::max(1, problem.workers);
    if (workers == 1 || problem.ground.size() < 8) {
        Searcher s(problem, nullptr);
        try {
            bool found = s.run();
            out.status = found ? SearchStatus::Found : SearchStatus::Exhausted;
            if (found) out.family = s.family();
        } catch (const BudgetHit&) {
            out.status = SearchStatus::BudgetExceeded;
        }
        out.stats.nodes = s.nodes();
    } else {
        std::atomic<bool> stop{false};
        std::vector<std::thread> threads;
        std::vector<int> results(workers, -1);  // 1 found, 0 exhausted, 2 budget, 3 stopped
        std::vector<std::uint64_t> node_counts(workers, 0);
        std::vector<SubsetFamily> families(workers);
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                Searcher s(problem, &stop);
                try {
                    bool found = s.run_shard(w, workers);
                    results[w] = found ? 1 : 0;
                    if (found) {
                        families[w] = s.family();
                        stop.store(true, std::memory_order_relaxed);
                    }
                } catch (const BudgetHit&) {
                    results[w] = 2;
                } catch (const FoundElsewhere&) {
                    results[w] = 3;
                }
                node_counts[w] = s.nodes();
            });
        }
        for (auto& t : threads) t.join();
        for (int w = 0; w < workers; ++w) out.stats.nodes += node_counts[w];
        int winner = -1;
        for (int w = 0; w < workers; ++w)
            if (results[w] == 1) {
                winner = w;
                break;
            }
        if (winner >= 0) {
            out.status = SearchStatus::Found;
            out.family = families[winner];
        } else if (std::any_of(results.begin(), results.end(), [](int r) { return r == 2; })) {
            out.status = SearchStatus::BudgetExceeded;
        } else {
            out.status = SearchStatus::Exhausted;
        }
    }
    out.stats.millis = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
    return out;
}

std::vector<SizeTriple> enumerate_triples(std::uint64_t total) {
    std::vector<SizeTriple> out;
    for (std::uint64_t c = 0; 5 * c <= total; ++c) {
        for (std::uint64_t b = 0; 5 * c + 4 * b <= total; ++b) {
            std::uint64_t rest = total - 4 * b - 5 * c;
            if (rest % 3 == 0) out.push_back(SizeTriple{rest / 3, b, c});
        }
    }
    return out;  // already ascending in (c, b)
}

ConstantSumResult explore_constant_sum(const GroupSpec& g, const SizeMultiset& sizes,
                                       const SearchBudget& budget) {
    if (sizes.total() != g.order() - 1)
        fail(ErrorKind::SizePrecondition,
             "sizes must cover all " + std::to_string(g.order() - 1) + " non-zero elements");
    std::uint64_t ones = 0;
    for (std::uint64_t s : sizes.sizes()) {
        if (s < 1) fail(ErrorKind::SizePrecondition, "parts must be positive");
        if (s == 1) ++ones;
    }
    if (ones > 1) fail(ErrorKind::SizePrecondition, "at most one size-1 part is allowed");

    std::uint64_t t = sizes.count();
    code_t total = g.sum_all_codes();

    std::vector<code_t> candidates;
    for (code_t mu = 0; mu < g.order(); ++mu)
        if (g.scale(static_cast<std::int64_t>(t), mu) == total) candidates.push_back(mu);
    std::stable_sort(candidates.begin(), candidates.end(), [&](code_t x, code_t y) {
        auto ox = g.element_order(x), oy = g.element_order(y);
        return ox != oy ? ox < oy : x < y;
    });

    ConstantSumResult result;
    auto start = Clock::now();
    GroundSet star = ground_star(g);
    bool any_budget = false;
    for (code_t mu : candidates) {
        SearchProblem p;
        p.group = g;
        p.ground = star;
        p.sizes = sizes;
        p.target = mu;
        p.budget = budget;
        if (budget.max_millis) {
            auto used = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
                            .count();
            if (static_cast<std::uint64_t>(used) >= budget.max_millis) {
                any_budget = true;
                break;
            }
            p.budget.max_millis = budget.max_millis - static_cast<std::uint64_t>(used);
        }
        if (budget.max_nodes) {
            if (result.outcome.stats.nodes >= budget.max_nodes) {
                any_budget = true;
                break;
            }
            p.budget.max_nodes = budget.max_nodes - result.outcome.stats.nodes;
        }
        SearchOutcome o = search_partition(p);
        result.outcome.stats.nodes += o.stats.nodes;
        if (o.status == SearchStatus::Found) {
            result.outcome.status = SearchStatus::Found;
            result.outcome.family = std::move(o.family);
            result.mu = mu;
            break;
        }
        if (o.status == SearchStatus::BudgetExceeded) {
            any_budget = true;
            break;
        }
    }
    if (!result.mu) result.outcome.status =
        any_budget ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    result.outcome.stats.millis = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
    return result;
}

namespace {

// Deterministic backtracking complete-mapping search for small groups.
std::optional<std::vector<code_t>> cm_backtrack(const GroupSpec& g, const SearchBudget& budget) {
    std::uint64_t n = g.order();
    std::vector<code_t> phi(n, 0);
    Bitset used_phi(n), used_theta(n);
    std::uint64_t nodes = 0;
    auto start = Clock::now();

    // DFS over g = 0..n-1 assigning phi(g); theta(g) = g + phi(g) must also
    // be fresh.
    std::vector<code_t> next_try(n + 1, 0);
    std::uint64_t depth = 0;
    while (true) {
        if (depth == n) return phi;
        bool advanced = false;
        for (code_t v = next_try[depth]; v < n; ++v) {
            if (used_phi.test(v)) continue;
            code_t th = g.add(depth, v);
            if (used_theta.test(th)) continue;
            ++nodes;
            if (budget.max_nodes && nodes > budget.max_nodes)
                fail(ErrorKind::BudgetExceeded, "complete-mapping search: node budget");
            if (budget.max_millis && (nodes & 0xfff) == 0) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                                start)
                              .count();
                if (static_cast<std::uint64_t>(ms) > budget.max_millis)
                    fail(ErrorKind::BudgetExceeded, "complete-mapping search: time budget");
            }
            phi[depth] = v;
            used_phi.set(v);
            used_theta.set(th);
            next_try[depth] = v + 1;
            ++depth;
            next_try[depth] = 0;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (depth == 0) return std::nullopt;  // exhausted: none exists
        --depth;
        used_phi.reset(phi[depth]);
        used_theta.reset(g.add(static_cast<code_t>(depth), phi[depth]));
    }
}

// Randomized repair for larger groups: start from phi = identity-ish
// permutation and hill-climb on the number of theta collisions.
std::optional<std::vector<code_t>> cm_hill_climb(const GroupSpec& g, const SearchBudget& budget,
                                                 std::uint64_t seed) {
    std::uint64_t n = g.order();
    std::mt19937_64 rng(seed);
    auto start = Clock::now();
    std::uint64_t steps = 0;

    std::vector<code_t> phi(n);
    std::vector<std::uint32_t> theta_count(n);
    auto theta = [&](code_t x) { return g.add(x, phi[x]); };

    auto collisions = [&]() {
        std::fill(theta_count.begin(), theta_count.end(), 0);
        std::uint64_t coll = 0;
        for (code_t x = 0; x < n; ++x) {
            auto& c = theta_count[theta(x)];
            if (c) ++coll;
            ++c;
        }
        return coll;
    };

    for (int restart = 0; restart < 64; ++restart) {
        for (code_t x = 0; x < n; ++x) phi[x] = x;
        std::shuffle(phi.begin(), phi.end(), rng);
        std::uint64_t coll = collisions();
        std::uint64_t stale = 0;
        while (coll > 0) {
            ++steps;
            if (budget.max_nodes && steps > budget.max_nodes)
                fail(ErrorKind::BudgetExceeded, "complete-mapping search: node budget");
            if (budget.max_millis && (steps & 0x3ff) == 0) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                                start)
                              .count();
                if (static_cast<std::uint64_t>(ms) > budget.max_millis)
                    fail(ErrorKind::BudgetExceeded, "complete-mapping search: time budget");
            }
            // Pick a colliding x and a random y; swapping phi values changes
            // only two theta entries.
            code_t x = static_cast<code_t>(rng() % n);
            while (theta_count[theta(x)] <= 1) x = static_cast<code_t>(rng() % n);
            code_t y = static_cast<code_t>(rng() % n);
            if (y == x) continue;
            code_t tx = theta(x), ty = theta(y);
            code_t ntx = g.add(x, phi[y]), nty = g.add(y, phi[x]);
            std::int64_t delta = 0;
            auto drop = [&](code_t t) { delta -= theta_count[t] > 1 ? 1 : 0; theta_count[t]--; };
            auto gain = [&](code_t t) { theta_count[t]++; delta += theta_count[t] > 1 ? 1 : 0; };
            drop(tx);
            drop(ty);
            gain(ntx);
            gain(nty);
            if (delta <= 0) {
                std::swap(phi[x], phi[y]);
                coll = static_cast<std::uint64_t>(static_cast<std::int64_t>(coll) + delta);
                stale = delta == 0 ? stale + 1 : 0;
            } else {
                // revert counts
                drop(ntx);
                drop(nty);
                gain(tx);
                gain(ty);
                ++stale;
            }
            if (stale > 50 * n) break;  // restart
        }
        if (coll == 0) return phi;
    }
    return std::nullopt;  // budget-style failure; caller decides
}

}  // namespace

std::optional<std::vector<code_t>> find_complete_mapping_search(const GroupSpec& g,
                                                                const SearchBudget& budget) {
    // Obstruction: theta a permutation forces sum(theta) = sum(id) + sum(phi),
    // so the total group sum must vanish. For non-trivial groups with a
    // non-zero total (exactly those with a unique involution) no mapping
    // exists.
    if (g.order() > 1 && g.sum_all_codes() != 0) return std::nullopt;
    // Small orders: exact backtracking (instant there, exponential beyond).
    if (g.order() <= 32) return cm_backtrack(g, budget);
    // The obstruction above already settles non-existence, so larger orders
    // only need a witness: randomized repair under a deterministic seed
    // ladder. Each rung re-runs the climb from fresh shuffles.
    for (std::uint64_t attempt = 0;; ++attempt) {
        auto phi = cm_hill_climb(g, budget, (0x5eedULL ^ g.order()) + attempt * 0x9e3779b9ULL);
        if (phi) return phi;
        if (attempt >= 16)
            fail(ErrorKind::BudgetExceeded,
                 "complete-mapping search: hill climbing stalled on " + g.to_string());
    }
}

}  // namespace zsp
