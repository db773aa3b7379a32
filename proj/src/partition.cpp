// Ground sets, verification, and size reduction/reassembly.

#include "zsp/partition.hpp"

#include <algorithm>
#include <sstream>

#include "zsp/bitset.hpp"

namespace zsp {

std::string SizeTriple::to_string() const {
    std::ostringstream out;
    out << a << "*3 " << b << "*4 " << c << "*5";
    return out.str();
}

SizeMultiset::SizeMultiset(std::vector<std::uint64_t> sizes) : sizes_(std::move(sizes)) {
    for (auto s : sizes_)
        if (s == 0) fail(ErrorKind::SizePrecondition, "zero part size");
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
    total_ = 0;
    for (auto s : sizes_) total_ += s;
}

SizeMultiset SizeMultiset::from_triple(const SizeTriple& t) {
    std::vector<std::uint64_t> v;
    v.reserve(t.a + t.b + t.c);
    for (std::uint64_t i = 0; i < t.c; ++i) v.push_back(5);
    for (std::uint64_t i = 0; i < t.b; ++i) v.push_back(4);
    for (std::uint64_t i = 0; i < t.a; ++i) v.push_back(3);
    return SizeMultiset(std::move(v));
}

bool SizeMultiset::only_345() const {
    return std::all_of(sizes_.begin(), sizes_.end(),
                       [](std::uint64_t s) { return s >= 3 && s <= 5; });
}

SizeTriple SizeMultiset::as_triple() const {
    if (!only_345())
        fail(ErrorKind::SizePrecondition, "size multiset has parts outside {3,4,5}");
    SizeTriple t;
    for (auto s : sizes_) {
        if (s == 3) ++t.a;
        else if (s == 4) ++t.b;
        else ++t.c;
    }
    return t;
}

GroundSet::GroundSet(GroupSpec ambient, std::string descriptor, std::vector<code_t> codes)
    : group_(std::move(ambient)), descriptor_(std::move(descriptor)), codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    pos_.reserve(codes_.size() * 2);
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        if (codes_[i] >= group_.order())
            fail(ErrorKind::BadInput, "ground element code out of range");
        if (!pos_.emplace(codes_[i], i).second)
            fail(ErrorKind::BadInput, "duplicate element in ground set");
    }
}

std::size_t GroundSet::position(code_t c) const {
    auto it = pos_.find(c);
    return it == pos_.end() ? npos : it->second;
}

GroundSet ground_star(const GroupSpec& g) {
    std::vector<code_t> codes;
    codes.reserve(g.order() - 1);
    for (code_t c = 1; c < g.order(); ++c) codes.push_back(c);
    return GroundSet(g, "star:" + g.to_string(), std::move(codes));
}

GroundSet ground_frame_star(const SubgroupFrame& f) {
    std::vector<code_t> codes = f.elements();
    codes.erase(std::remove(codes.begin(), codes.end(), code_t{0}), codes.end());
    std::ostringstream desc;
    desc << "frame-star:" << f.parent().to_string() << "/[";
    for (std::size_t i = 0; i < f.divisors().size(); ++i) {
        if (i) desc << ',';
        desc << f.divisors()[i];
    }
    desc << ']';
    return GroundSet(f.parent(), desc.str(), std::move(codes));
}

GroupSpec shifted_ambient(const GroupSpec& lead, const GroupSpec& tail) {
    std::vector<std::uint64_t> mods = lead.moduli();
    if (!tail.moduli().empty() && !mods.empty() && tail.moduli().front() > mods.back())
        fail(ErrorKind::BadInput, "shifted product requires lead moduli >= tail moduli");
    mods.insert(mods.end(), tail.moduli().begin(), tail.moduli().end());
    return GroupSpec(std::move(mods));
}

GroundSet ground_shifted_product(const GroupSpec& lead, const GroupSpec& tail) {
    GroupSpec ambient = shifted_ambient(lead, tail);
    // lead occupies the leading coordinates: its unit weight in the ambient
    // code is the tail order; tail elements embed identically.
    std::vector<code_t> codes;
    codes.reserve((lead.order() - 1) * (tail.order() - 1));
    for (code_t u = 1; u < lead.order(); ++u)
        for (code_t v = 1; v < tail.order(); ++v)
            codes.push_back(u * tail.order() + v);
    return GroundSet(ambient, "shifted:" + lead.to_string() + "+" + tail.to_string(),
                     std::move(codes));
}

GroundSet ground_explicit(GroupSpec ambient, std::vector<code_t> codes) {
    std::ostringstream desc;
    desc << "explicit:" << ambient.to_string() << ":" << codes.size();
    return GroundSet(std::move(ambient), desc.str(), std::move(codes));
}

SizeMultiset SubsetFamily::size_multiset() const {
    std::vector<std::uint64_t> v;
    v.reserve(sets.size());
    for (const auto& s : sets) v.push_back(s.size());
    return SizeMultiset(std::move(v));
}

const char* failure_kind_name(FailureKind k) {
    switch (k) {
        case FailureKind::Sum: return "sum";
        case FailureKind::Duplicate: return "duplicate";
        case FailureKind::Overlap: return "overlap";
        case FailureKind::OutsideGround: return "outside-ground";
        case FailureKind::SizeMismatch: return "size-mismatch";
        case FailureKind::IncompleteCover: return "incomplete-cover";
    }
    return "unknown";
}

bool VerifyReport::has(FailureKind k) const {
    for (auto& [idx, kind] : failures)
        if (kind == k) return true;
    return false;
}

std::string VerifyReport::summary() const {
    if (ok) return "ok";
    std::ostringstream out;
    out << failures.size() << " failure(s):";
    for (auto& [idx, kind] : failures) {
        out << ' ';
        if (idx >= 0) out << "set#" << idx << ':';
        out << failure_kind_name(kind);
    }
    return out.str();
}

VerifyReport verify_family(const GroundSet& ground, const SubsetFamily& family,
                           const std::optional<SizeMultiset>& expected_sizes,
                           code_t target, bool require_exact_cover) {
    VerifyReport report;
    auto flag = [&](long idx, FailureKind k) {
        report.ok = false;
        report.failures.emplace_back(idx, k);
    };

    if (family.group != ground.group()) {
        flag(-1, FailureKind::OutsideGround);
        return report;
    }
    const GroupSpec& g = family.group;

    Bitset covered(ground.size());
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
        const auto& set = family.sets[i];
        long idx = static_cast<long>(i);
        if (set.empty()) {
            flag(idx, FailureKind::SizeMismatch);
            continue;
        }
        bool dup = false, overlap = false, outside = false;
        code_t sum = 0;
        // per-set duplicate detection on a sorted copy
        std::vector<code_t> sorted(set);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 1; j < sorted.size(); ++j)
            if (sorted[j] == sorted[j - 1]) dup = true;
        for (code_t c : set) {
            sum = g.add(sum, c);
            std::size_t pos = ground.position(c);
            if (pos == GroundSet::npos) {
                outside = true;
                continue;
            }
            if (covered.test(pos))
                overlap = true;
            else
                covered.set(pos);
        }
        if (dup) flag(idx, FailureKind::Duplicate);
        if (overlap && !dup) flag(idx, FailureKind::Overlap);
        if (outside) flag(idx, FailureKind::OutsideGround);
        if (sum != target) flag(idx, FailureKind::Sum);
    }

    if (expected_sizes) {
        if (family.size_multiset() != *expected_sizes) flag(-1, FailureKind::SizeMismatch);
    }
    if (require_exact_cover && !covered.all_set()) flag(-1, FailureKind::IncompleteCover);
    return report;
}

bool MergePlan::trivial() const {
    for (const auto& pieces : piece_sizes)
        if (pieces.size() != 1) return false;
    return true;
}

std::pair<SizeMultiset, MergePlan> reduce_sizes(const SizeMultiset& sizes) {
    if (sizes.min_size() < 3)
        fail(ErrorKind::SizePrecondition, "size reduction requires all parts >= 3");
    MergePlan plan;
    std::vector<std::uint64_t> reduced;
    for (std::uint64_t q : sizes.sizes()) {
        std::vector<std::uint64_t> pieces;
        if (q <= 5) {
            pieces.push_back(q);
        } else {
            std::uint64_t k = q / 3, r = q % 3;
            if (r == 0) {
                pieces.assign(k, 3);
            } else {
                pieces.assign(k - 1, 3);
                pieces.push_back(r == 1 ? 4 : 5);
            }
        }
        reduced.insert(reduced.end(), pieces.begin(), pieces.end());
        plan.piece_sizes.push_back(std::move(pieces));
    }
    return {SizeMultiset(std::move(reduced)), std::move(plan)};
}

SubsetFamily reassemble(const SubsetFamily& pieces, const MergePlan& plan) {
    // bucket the piece sets by size, then give each original part its pieces
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_size;
    for (std::size_t i = 0; i < pieces.sets.size(); ++i)
        by_size[pieces.sets[i].size()].push_back(i);

    SubsetFamily out;
    out.group = pieces.group;
    for (const auto& wanted : plan.piece_sizes) {
        std::vector<code_t> part;
        for (std::uint64_t s : wanted) {
            auto it = by_size.find(s);
            if (it == by_size.end() || it->second.empty())
                fail(ErrorKind::ConstructionBug,
                     "reassembly is missing a piece of size " + std::to_string(s));
            const auto& piece = pieces.sets[it->second.back()];
            it->second.pop_back();
            part.insert(part.end(), piece.begin(), piece.end());
        }
        std::sort(part.begin(), part.end());
        out.sets.push_back(std::move(part));
    }
    for (auto& [s, rest] : by_size)
        if (!rest.empty())
            fail(ErrorKind::ConstructionBug, "reassembly left unused pieces behind");
    return out;
}

}  // namespace zsp
