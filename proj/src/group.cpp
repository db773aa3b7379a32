// Group arithmetic, parsing, and coordinate-aligned subgroup frames.

#include "zsp/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace zsp {

namespace {

constexpr code_t kMaxOrder = code_t{1} << 62;

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm_capped(std::uint64_t a, std::uint64_t b) {
    // inputs divide the group order <= 2^62, so the lcm does too
    return a / gcd_u64(a, b) * b;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::uint64_t> moduli) : mods_(std::move(moduli)) {
    if (mods_.empty()) fail(ErrorKind::BadInput, "group spec needs at least one modulus");
    for (auto m : mods_)
        if (m < 2) fail(ErrorKind::BadInput, "modulus < 2 in group spec");
    std::sort(mods_.begin(), mods_.end(), std::greater<>());
    order_ = 1;
    for (auto m : mods_) {
        if (order_ > kMaxOrder / m)
            fail(ErrorKind::BadInput, "group order exceeds 2^62");
        order_ *= m;
    }
    weight_.assign(mods_.size(), 1);
    for (std::size_t i = mods_.size(); i-- > 1;)
        weight_[i - 1] = weight_[i] * mods_[i];
    pow2_ = std::all_of(mods_.begin(), mods_.end(), is_pow2);
    if (pow2_) {
        shift_.resize(mods_.size());
        for (std::size_t i = 0; i < mods_.size(); ++i)
            shift_[i] = static_cast<unsigned>(__builtin_ctzll(weight_[i]));
    }
}

bool GroupSpec::is_two_group() const { return pow2_ && !mods_.empty(); }

std::uint64_t GroupSpec::exponent() const {
    std::uint64_t e = 1;
    for (auto m : mods_) e = lcm_capped(e, m);
    return e;
}

std::uint64_t GroupSpec::involution_count() const {
    unsigned evens = 0;
    for (auto m : mods_)
        if (m % 2 == 0) ++evens;
    return (std::uint64_t{1} << evens) - 1;
}

code_t GroupSpec::sum_all_codes() const {
    // Coordinate i of the sum over all elements is (order/m_i) * (m_i/2 if m_i
    // even else 0) mod m_i: the unique involution when |I| = 1, zero otherwise.
    std::vector<std::uint64_t> res(mods_.size(), 0);
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        std::uint64_t m = mods_[i];
        if (m % 2 != 0) continue;
        unsigned __int128 copies = order_ / m % m;
        res[i] = static_cast<std::uint64_t>(copies * (m / 2) % m);
    }
    return encode(res);
}

code_t GroupSpec::add(code_t x, code_t y) const {
    if (pow2_) {
        code_t r = 0;
        for (std::size_t i = 0; i < mods_.size(); ++i) {
            code_t mask = mods_[i] - 1;
            code_t a = (x >> shift_[i]) & mask;
            code_t b = (y >> shift_[i]) & mask;
            r |= ((a + b) & mask) << shift_[i];
        }
        return r;
    }
    code_t r = 0;
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        code_t a = x / weight_[i] % mods_[i];
        code_t b = y / weight_[i] % mods_[i];
        r += (a + b) % mods_[i] * weight_[i];
    }
    return r;
}

code_t GroupSpec::neg(code_t x) const {
    code_t r = 0;
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        code_t a = x / weight_[i] % mods_[i];
        r += (a == 0 ? 0 : mods_[i] - a) * weight_[i];
    }
    return r;
}

code_t GroupSpec::scale(std::int64_t k, code_t x) const {
    code_t r = 0;
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        std::uint64_t m = mods_[i];
        std::uint64_t a = x / weight_[i] % m;
        std::uint64_t kk = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(m)) +
                                                       static_cast<std::int64_t>(m))) % m;
        unsigned __int128 prod = static_cast<unsigned __int128>(kk) * a;
        r += static_cast<code_t>(prod % m) * weight_[i];
    }
    return r;
}

std::uint64_t GroupSpec::element_order(code_t x) const {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        std::uint64_t m = mods_[i];
        std::uint64_t a = x / weight_[i] % m;
        o = lcm_capped(o, m / gcd_u64(m, a == 0 ? m : a));
    }
    return o;
}

code_t GroupSpec::encode(const std::vector<std::uint64_t>& residues) const {
    if (residues.size() != mods_.size())
        fail(ErrorKind::BadInput, "element arity does not match group rank");
    code_t c = 0;
    for (std::size_t i = 0; i < mods_.size(); ++i) {
        if (residues[i] >= mods_[i])
            fail(ErrorKind::BadInput, "residue out of range for its modulus");
        c += residues[i] * weight_[i];
    }
    return c;
}

std::vector<std::uint64_t> GroupSpec::residues_of(code_t code) const {
    if (code >= order_) fail(ErrorKind::BadInput, "element code out of range");
    std::vector<std::uint64_t> res(mods_.size());
    for (std::size_t i = 0; i < mods_.size(); ++i)
        res[i] = code / weight_[i] % mods_[i];
    return res;
}

std::uint64_t GroupSpec::residue(code_t code, std::size_t coord) const {
    return code / weight_[coord] % mods_[coord];
}

code_t GroupSpec::unit_code(std::size_t coord, std::uint64_t value) const {
    return value % mods_[coord] * weight_[coord];
}

std::string GroupSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < mods_.size();) {
        std::size_t j = i;
        while (j < mods_.size() && mods_[j] == mods_[i]) ++j;
        if (i) out << 'x';
        out << 'Z' << mods_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string GroupSpec::format_element(code_t code) const {
    auto res = residues_of(code);
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < res.size(); ++i) {
        if (i) out << ", ";
        out << res[i];
    }
    out << ')';
    return out.str();
}

GroupSpec parse_group_spec(const std::string& text) {
    std::vector<std::uint64_t> mods;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_number = [&]() -> std::uint64_t {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail(ErrorKind::BadInput, "expected a number in group spec: " + text);
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (v > (std::uint64_t{1} << 62) / 10)
                fail(ErrorKind::BadInput, "number too large in group spec");
            v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
            ++i;
        }
        return v;
    };
    skip_ws();
    while (true) {
        if (i >= text.size() || (text[i] != 'Z' && text[i] != 'z'))
            fail(ErrorKind::BadInput, "expected 'Z<k>' factor in group spec: " + text);
        ++i;
        std::uint64_t m = read_number();
        if (m < 2) fail(ErrorKind::BadInput, "modulus < 2 in group spec: " + text);
        std::uint64_t reps = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            reps = read_number();
            if (reps == 0) fail(ErrorKind::BadInput, "zero repetition in group spec");
            if (reps > 62) fail(ErrorKind::BadInput, "repetition too large in group spec");
            skip_ws();
        }
        for (std::uint64_t r = 0; r < reps; ++r) mods.push_back(m);
        if (i >= text.size()) break;
        if (text[i] != 'x' && text[i] != 'X' && text[i] != '*')
            fail(ErrorKind::BadInput, "expected 'x' between factors in group spec: " + text);
        ++i;
        skip_ws();
    }
    return GroupSpec(std::move(mods));
}

Element make_element(const GroupSpec& g, std::vector<std::uint64_t> residues) {
    Element e;
    e.code = g.encode(residues);
    e.residues = std::move(residues);
    return e;
}

Element decode(const GroupSpec& g, code_t code) {
    Element e;
    e.residues = g.residues_of(code);
    e.code = code;
    return e;
}

code_t encode(const GroupSpec& g, const Element& x) { return g.encode(x.residues); }

Element add(const GroupSpec& g, const Element& x, const Element& y) {
    return decode(g, g.add(g.encode(x.residues), g.encode(y.residues)));
}

Element neg(const GroupSpec& g, const Element& x) {
    return decode(g, g.neg(g.encode(x.residues)));
}

Element scale(const GroupSpec& g, std::int64_t k, const Element& x) {
    return decode(g, g.scale(k, g.encode(x.residues)));
}

std::uint64_t involution_count(const GroupSpec& g) { return g.involution_count(); }

Element sum_all_elements(const GroupSpec& g) { return decode(g, g.sum_all_codes()); }

std::uint64_t exponent(const GroupSpec& g) { return g.exponent(); }

Element parse_element(const GroupSpec& g, const std::string& text) {
    std::vector<std::uint64_t> res;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '(' ||
                text[i] == ')' || text[i] == ','))
            ++i;
    };
    skip();
    while (i < text.size()) {
        bool negative = false;
        if (text[i] == '-') {
            negative = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail(ErrorKind::BadInput, "malformed element tuple: " + text);
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
        std::size_t coord = res.size();
        if (coord >= g.rank()) fail(ErrorKind::BadInput, "too many coordinates: " + text);
        std::uint64_t m = g.moduli()[coord];
        v %= m;
        if (negative && v != 0) v = m - v;
        res.push_back(v);
        skip();
    }
    if (res.size() != g.rank())
        fail(ErrorKind::BadInput, "element tuple arity does not match group rank: " + text);
    return make_element(g, std::move(res));
}

SubgroupFrame::SubgroupFrame(const GroupSpec& parent, std::vector<std::uint64_t> divisors)
    : parent_(parent), div_(std::move(divisors)) {
    if (div_.size() != parent_.rank())
        fail(ErrorKind::BadInput, "frame divisor arity does not match group rank");
    for (std::size_t i = 0; i < div_.size(); ++i) {
        if (div_[i] == 0 || parent_.moduli()[i] % div_[i] != 0)
            fail(ErrorKind::BadInput, "frame divisor does not divide its modulus");
    }
    // child coordinates: reduced moduli > 1, sorted non-increasing (stable)
    std::vector<std::pair<std::uint64_t, std::size_t>> reduced;
    for (std::size_t i = 0; i < div_.size(); ++i) {
        std::uint64_t r = parent_.moduli()[i] / div_[i];
        if (r > 1) reduced.emplace_back(r, i);
    }
    std::stable_sort(reduced.begin(), reduced.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::uint64_t> child_mods;
    for (auto& [r, idx] : reduced) {
        child_mods.push_back(r);
        child_coord_.push_back(idx);
    }
    if (!child_mods.empty()) child_ = GroupSpec(std::move(child_mods));
}

bool SubgroupFrame::contains(code_t parent_code) const {
    for (std::size_t i = 0; i < div_.size(); ++i)
        if (parent_.residue(parent_code, i) % div_[i] != 0) return false;
    return true;
}

code_t SubgroupFrame::lift(code_t child_code) const {
    code_t p = 0;
    for (std::size_t j = 0; j < child_coord_.size(); ++j) {
        std::size_t i = child_coord_[j];
        std::uint64_t r = child_.residue(child_code, j);
        p += parent_.unit_code(i, r * div_[i]);
    }
    return p;
}

code_t SubgroupFrame::project(code_t parent_code) const {
    if (!contains(parent_code))
        fail(ErrorKind::BadInput, "projecting an element outside the subgroup");
    std::vector<std::uint64_t> res(child_coord_.size());
    for (std::size_t j = 0; j < child_coord_.size(); ++j) {
        std::size_t i = child_coord_[j];
        res[j] = parent_.residue(parent_code, i) / div_[i];
    }
    return child_.encode(res);
}

std::vector<code_t> SubgroupFrame::elements() const {
    std::vector<code_t> out;
    out.reserve(subgroup_order());
    for (code_t c = 0; c < subgroup_order(); ++c) out.push_back(lift(c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<code_t> SubgroupFrame::coset(code_t rep_code) const {
    std::vector<code_t> out;
    out.reserve(subgroup_order());
    for (code_t c = 0; c < subgroup_order(); ++c)
        out.push_back(parent_.add(rep_code, lift(c)));
    std::sort(out.begin(), out.end());
    return out;
}

SubgroupFrame frame_subgroup(const GroupSpec& g, std::vector<std::uint64_t> divisors) {
    return SubgroupFrame(g, std::move(divisors));
}

GroupSpec frame_spec(const SubgroupFrame& f) { return f.child(); }

Element frame_lift(const SubgroupFrame& f, const Element& child_element) {
    return decode(f.parent(), f.lift(f.child().encode(child_element.residues)));
}

std::vector<Element> coset(const SubgroupFrame& f, const Element& rep) {
    std::vector<Element> out;
    for (code_t c : f.coset(f.parent().encode(rep.residues)))
        out.push_back(decode(f.parent(), c));
    return out;
}

}  // namespace zsp
