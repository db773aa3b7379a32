// Complete-mapping construction ladder: linear companion maps for
// equal-exponent shapes, coordinate products, index-4 extensions through a
// (Z2)^2 quotient, and an explicit interval base for the Z_{2^m} x Z2 shape.
// Every mapping is certified before being returned.

#include <algorithm>

#include "zsp/bitset.hpp"
#include "zsp/engine.hpp"
#include "zsp/errors.hpp"

namespace zsp {

bool CompleteMapping::certify() const {
    if (phi.size() != group.order()) return false;
    Bitset seen_phi(phi.size()), seen_theta(phi.size());
    for (code_t g = 0; g < phi.size(); ++g) {
        code_t p = phi[g];
        if (p >= phi.size() || seen_phi.test(p)) return false;
        seen_phi.set(p);
        code_t th = group.add(g, p);
        if (seen_theta.test(th)) return false;
        seen_theta.set(th);
    }
    return true;
}

namespace {

// phi(x_0..x_{k-1}) = (x_1, ..., x_{k-1}, -(x_0+x_1)): the companion matrix
// of x^k + x + 1, invertible together with its theta successor over every
// Z_{2^alpha}.
CompleteMapping companion_mapping(const GroupSpec& g) {
    std::uint64_t k = g.rank();
    CompleteMapping cm;
    cm.group = g;
    cm.phi.resize(g.order());
    std::vector<std::uint64_t> in, out(k);
    for (code_t x = 0; x < g.order(); ++x) {
        in = g.residues_of(x);
        for (std::uint64_t i = 0; i + 1 < k; ++i) out[i] = in[i + 1];
        std::uint64_t m = g.moduli()[k - 1];
        out[k - 1] = (2 * m - in[0] % m - in[1] % m) % m;
        cm.phi[x] = g.encode(out);
    }
    return cm;
}

// Product of complete mappings on a leading/trailing coordinate split.
CompleteMapping product_mapping(const GroupSpec& g, const CompleteMapping& lead,
                                const CompleteMapping& tail) {
    CompleteMapping cm;
    cm.group = g;
    cm.phi.resize(g.order());
    std::uint64_t tail_order = tail.group.order();
    for (code_t x = 0; x < g.order(); ++x)
        cm.phi[x] = lead.phi[x / tail_order] * tail_order + tail.phi[x % tail_order];
    return cm;
}

// Lifts complete mappings on the frame child N and on the quotient G/N
// (any coset section works): phi(rep(q) + n) = rep(phi_Q(q)) + phi_N(n).
CompleteMapping extension_mapping(const GroupSpec& g, const std::vector<std::uint64_t>& divisors,
                                  const CompleteMapping& child,
                                  const CompleteMapping& quotient) {
    SubgroupFrame frame(g, divisors);
    std::vector<std::size_t> qcoords;
    std::vector<std::uint64_t> qmods;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        if (divisors[i] > 1) {
            qcoords.push_back(i);
            qmods.push_back(divisors[i]);
        }
    GroupSpec qspec(qmods);
    if (quotient.group != qspec)
        fail(ErrorKind::ConstructionBug, "extension quotient mismatch");

    // Section: the quotient class (q_i) is represented by the element with
    // residues q_i on the quotient coordinates and 0 elsewhere.
    auto rep_of = [&](code_t qcode) {
        std::vector<std::uint64_t> qres = qspec.residues_of(qcode);
        code_t rep = 0;
        for (std::size_t j = 0; j < qcoords.size(); ++j)
            rep = g.add(rep, g.unit_code(qcoords[j], qres[j]));
        return rep;
    };

    CompleteMapping cm;
    cm.group = g;
    cm.phi.resize(g.order());
    std::vector<std::uint64_t> qres(qcoords.size());
    for (code_t x = 0; x < g.order(); ++x) {
        for (std::size_t j = 0; j < qcoords.size(); ++j)
            qres[j] = g.residue(x, qcoords[j]) % divisors[qcoords[j]];
        code_t qcode = qspec.encode(qres);
        code_t n = g.sub(x, rep_of(qcode));
        code_t nc = frame.project(n);
        cm.phi[x] = g.add(rep_of(quotient.phi[qcode]), frame.lift(child.phi[nc]));
    }
    return cm;
}

// Z_n x Z2 (n = 2^m) admits no linear complete mapping (phi and phi + id
// would need odd determinant mod 2 simultaneously), so the base case works
// per parity class instead: with p = i mod 2,
//     theta(i, e) = (i/2 + e*n/2, 0)             for even i,
//     theta(i, e) = ((i-1)/2 + 1 + e*n/2, 1)     for odd i.
// Each class is carried by a halving map, so theta restricted to a class
// covers a length-n/2 interval of residues, and so does theta - id; the
// offsets make the two intervals landing on each output sheet adjacent, so
// both theta and theta - id tile Z_n twice over and are bijections.
CompleteMapping halved_pair_mapping(const GroupSpec& g) {
    std::uint64_t n = g.moduli()[0];
    CompleteMapping cm;
    cm.group = g;
    cm.phi.resize(g.order());
    for (code_t x = 0; x < g.order(); ++x) {
        std::uint64_t i = g.residue(x, 0), e = g.residue(x, 1);
        std::uint64_t ti = i % 2 == 0 ? (i / 2 + e * (n / 2)) % n
                                      : ((i - 1) / 2 + 1 + e * (n / 2)) % n;
        code_t theta = g.encode({ti, i % 2});
        cm.phi[x] = g.sub(theta, x);
    }
    return cm;
}

CompleteMapping build(const GroupSpec& g) {
    std::uint64_t k = g.rank();
    if (k == 0) {
        CompleteMapping cm;
        cm.group = g;
        cm.phi = {0};
        return cm;
    }
    const auto& mods = g.moduli();
    if (std::all_of(mods.begin(), mods.end(), [&](std::uint64_t m) { return m == mods[0]; })) {
        if (k == 1)
            fail(ErrorKind::ConstructionBug, "rank-1 group reached the mapping ladder");
        return companion_mapping(g);
    }
    if (k == 2) {
        if (mods[1] == 2) return halved_pair_mapping(g);
        // Index-4 extension: divide both coordinates by 2.
        GroupSpec child({mods[0] / 2, mods[1] / 2});
        return extension_mapping(g, {2, 2}, build(child), companion_mapping(GroupSpec({2, 2})));
    }
    if (k == 3) {
        std::vector<std::uint64_t> child_mods;
        if (mods[0] / 2 > 1) child_mods.push_back(mods[0] / 2);
        if (mods[1] / 2 > 1) child_mods.push_back(mods[1] / 2);
        child_mods.push_back(mods[2]);
        GroupSpec child(child_mods);
        return extension_mapping(g, {2, 2, 1}, build(child),
                                 companion_mapping(GroupSpec({2, 2})));
    }
    // k >= 4: product of the leading pair and the rest; both halves have
    // rank >= 2 so the recursion stays inside the ladder's domain.
    GroupSpec lead({mods[0], mods[1]});
    GroupSpec tail(std::vector<std::uint64_t>(mods.begin() + 2, mods.end()));
    return product_mapping(g, build(lead), build(tail));
}

}  // namespace

CompleteMapping complete_mapping(const GroupSpec& g) {
    if (!g.is_two_group())
        fail(ErrorKind::NotATwoGroup, g.to_string() + " is not a 2-group");
    if (g.involution_count() == 1)
        fail(ErrorKind::UniqueInvolution,
             g.to_string() + " has a unique involution; no complete mapping exists");
    CompleteMapping cm = build(g);
    if (!cm.certify())
        fail(ErrorKind::ConstructionBug,
             "complete mapping for " + g.to_string() + " failed its certificate");
    return cm;
}

}  // namespace zsp
