#pragma once
// Data model and verifier for subset families: ground sets, size multisets,
// size triples (counts of 3-/4-/5-sets), verification reports, and the
// size-reduction/reassembly bookkeeping.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zsp/group.hpp"

namespace zsp {

struct SizeTriple {
    std::uint64_t a = 0;  // 3-sets
    std::uint64_t b = 0;  // 4-sets
    std::uint64_t c = 0;  // 5-sets

    std::uint64_t weight() const { return 3 * a + 4 * b + 5 * c; }
    bool operator==(const SizeTriple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const SizeTriple& o) const { return !(*this == o); }
    // canonical header order: ascending c, then ascending b
    bool operator<(const SizeTriple& o) const {
        if (c != o.c) return c < o.c;
        if (b != o.b) return b < o.b;
        return a < o.a;
    }
    std::string to_string() const;  // "a*3 b*4 c*5"
};

class SizeMultiset {
public:
    SizeMultiset() = default;
    explicit SizeMultiset(std::vector<std::uint64_t> sizes);
    static SizeMultiset from_triple(const SizeTriple& t);

    const std::vector<std::uint64_t>& sizes() const { return sizes_; }  // descending
    std::size_t count() const { return sizes_.size(); }
    std::uint64_t total() const { return total_; }
    bool empty() const { return sizes_.empty(); }
    std::uint64_t min_size() const { return sizes_.empty() ? 0 : sizes_.back(); }

    bool only_345() const;
    SizeTriple as_triple() const;  // pre: only_345()

    bool operator==(const SizeMultiset& o) const { return sizes_ == o.sizes_; }

private:
    std::vector<std::uint64_t> sizes_;
    std::uint64_t total_ = 0;
};

// A concrete ground set: ambient group + the member codes (sorted ascending)
// + a canonical descriptor string used for table keying and reporting.
class GroundSet {
public:
    GroundSet() = default;
    GroundSet(GroupSpec ambient, std::string descriptor, std::vector<code_t> codes);

    const GroupSpec& group() const { return group_; }
    const std::string& descriptor() const { return descriptor_; }
    const std::vector<code_t>& codes() const { return codes_; }
    std::size_t size() const { return codes_.size(); }

    bool contains(code_t c) const { return position(c) != npos; }
    code_t code_at(std::size_t i) const { return codes_[i]; }
    std::size_t position(code_t c) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    GroupSpec group_;
    std::string descriptor_;
    std::vector<code_t> codes_;
    std::unordered_map<code_t, std::size_t> pos_;
};

GroundSet ground_star(const GroupSpec& g);                    // all non-zero elements
GroundSet ground_frame_star(const SubgroupFrame& f);          // non-zero subgroup elements
// {u + v : u in lead-star, v in tail-star} inside the concatenated group
// lead x tail; lead occupies the leading coordinates.
GroundSet ground_shifted_product(const GroupSpec& lead, const GroupSpec& tail);
GroundSet ground_explicit(GroupSpec ambient, std::vector<code_t> codes);
// Ambient of a shifted product: moduli of lead followed by moduli of tail.
GroupSpec shifted_ambient(const GroupSpec& lead, const GroupSpec& tail);

struct SubsetFamily {
    GroupSpec group;                        // ambient group of all member codes
    std::vector<std::vector<code_t>> sets;  // ordered family of element sets

    SizeMultiset size_multiset() const;
};

enum class FailureKind {
    Sum,
    Duplicate,
    Overlap,
    OutsideGround,
    SizeMismatch,
    IncompleteCover,
};

const char* failure_kind_name(FailureKind k);

struct VerifyReport {
    bool ok = true;
    // set index (-1 for family-level failures) and the failure kind
    std::vector<std::pair<long, FailureKind>> failures;

    bool has(FailureKind k) const;
    std::string summary() const;
};

VerifyReport verify_family(const GroundSet& ground, const SubsetFamily& family,
                           const std::optional<SizeMultiset>& expected_sizes,
                           code_t target, bool require_exact_cover);

// Size reduction: subdivide every part > 5 into parts from {3,4,5} by the
// fixed rule q = 3k+r: r=0 -> k threes; r=1 -> (k-1) threes + one 4;
// r=2 -> (k-1) threes + one 5. The plan remembers each original part's pieces.
struct MergePlan {
    // piece_sizes[i] = sizes of the pieces of original part i (original order:
    // the multiset's descending order)
    std::vector<std::vector<std::uint64_t>> piece_sizes;
    bool trivial() const;
};

std::pair<SizeMultiset, MergePlan> reduce_sizes(const SizeMultiset& sizes);
// Reassemble a family whose set sizes realize the reduced multiset back into
// parts of the original sizes (each original part = union of pieces, picked
// from the family by size).
SubsetFamily reassemble(const SubsetFamily& pieces, const MergePlan& plan);

}  // namespace zsp
