#pragma once
// Exact arithmetic, dense encodings, and structural queries for finite Abelian
// groups given as direct products of cyclic groups Z_{m_1} x ... x Z_{m_k}.
// Elements carry both a residue vector and a dense mixed-radix code (last
// coordinate varies fastest); hot paths work on codes.

#include <cstdint>
#include <string>
#include <vector>

#include "zsp/errors.hpp"

namespace zsp {

using code_t = std::uint64_t;

struct Element {
    std::vector<std::uint64_t> residues;
    code_t code = 0;
};

class GroupSpec {
public:
    GroupSpec() = default;  // trivial group (rank 0, order 1); internal use only
    explicit GroupSpec(std::vector<std::uint64_t> moduli);

    const std::vector<std::uint64_t>& moduli() const { return mods_; }
    std::size_t rank() const { return mods_.size(); }
    code_t order() const { return order_; }

    bool operator==(const GroupSpec& o) const { return mods_ == o.mods_; }
    bool operator!=(const GroupSpec& o) const { return mods_ != o.mods_; }

    bool is_two_group() const;
    std::uint64_t exponent() const;            // lcm of the moduli
    std::uint64_t involution_count() const;    // 2^{#even moduli} - 1
    code_t sum_all_codes() const;              // closed form for sum over all elements

    // arithmetic on dense codes
    code_t add(code_t x, code_t y) const;
    code_t neg(code_t x) const;
    code_t sub(code_t x, code_t y) const { return add(x, neg(y)); }
    code_t scale(std::int64_t k, code_t x) const;
    std::uint64_t element_order(code_t x) const;

    code_t encode(const std::vector<std::uint64_t>& residues) const;
    std::vector<std::uint64_t> residues_of(code_t code) const;
    std::uint64_t residue(code_t code, std::size_t coord) const;
    code_t unit_code(std::size_t coord, std::uint64_t value = 1) const;

    std::string to_string() const;                 // canonical text, e.g. "Z4xZ2^2"
    std::string format_element(code_t code) const; // "(3, 0, 1)"

private:
    std::vector<std::uint64_t> mods_;    // sorted non-increasing
    std::vector<code_t> weight_;         // mixed-radix weights, last coordinate = 1
    code_t order_ = 1;
    bool pow2_ = false;                  // every modulus a power of two
    std::vector<unsigned> shift_;        // bit offset per coordinate when pow2_
};

GroupSpec parse_group_spec(const std::string& text);

// Element-level wrappers over the code arithmetic (validate arity/range).
Element make_element(const GroupSpec& g, std::vector<std::uint64_t> residues);
Element decode(const GroupSpec& g, code_t code);
code_t encode(const GroupSpec& g, const Element& x);
Element add(const GroupSpec& g, const Element& x, const Element& y);
Element neg(const GroupSpec& g, const Element& x);
Element scale(const GroupSpec& g, std::int64_t k, const Element& x);
std::uint64_t involution_count(const GroupSpec& g);
Element sum_all_elements(const GroupSpec& g);
std::uint64_t exponent(const GroupSpec& g);
Element parse_element(const GroupSpec& g, const std::string& text);

// Coordinate-aligned subgroup {g : divisors[i] | residues[i]} with its
// canonical reduced spec (divide coordinate i by divisors[i], drop collapsed
// coordinates, re-sort canonically) and the lift/project isomorphism pair.
class SubgroupFrame {
public:
    SubgroupFrame(const GroupSpec& parent, std::vector<std::uint64_t> divisors);

    const GroupSpec& parent() const { return parent_; }
    const GroupSpec& child() const { return child_; }
    const std::vector<std::uint64_t>& divisors() const { return div_; }
    code_t subgroup_order() const { return child_.order(); }

    bool contains(code_t parent_code) const;
    code_t lift(code_t child_code) const;      // canonical iso child -> subgroup
    code_t project(code_t parent_code) const;  // inverse of lift; pre: contains()

    std::vector<code_t> elements() const;             // subgroup, ascending parent codes
    std::vector<code_t> coset(code_t rep_code) const; // rep + subgroup, ascending

private:
    GroupSpec parent_;
    GroupSpec child_;
    std::vector<std::uint64_t> div_;
    std::vector<std::size_t> child_coord_;  // child coordinate -> parent coordinate
};

SubgroupFrame frame_subgroup(const GroupSpec& g, std::vector<std::uint64_t> divisors);
GroupSpec frame_spec(const SubgroupFrame& f);
Element frame_lift(const SubgroupFrame& f, const Element& child_element);
std::vector<Element> coset(const SubgroupFrame& f, const Element& rep);

}  // namespace zsp
