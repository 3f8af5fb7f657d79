#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcard/arith.hpp"
#include "sumcard/error.hpp"
#include "sumcard/geometry.hpp"

namespace sumcard {

// A = {0, v_1..v_{d+1}, w}: d+3 points whose hull is the simplex on the
// v_i, with the origin and w the two non-vertex points.
struct InstanceD3 {
    PointSet base;
    std::vector<int> vertex_indices;  // ascending, size dim+1
    int origin_index = -1;
    int w_index = -1;
    HullClassification hull;
    Int generation_index = 0;     // index of the lattice generated by A - A (must be 1)
    Int vertex_lattice_index = 0; // index of the lattice generated by v_1..v_{d+1}
    bool w_on_boundary = false;

    std::vector<Point> vertices() const {
        std::vector<Point> out;
        for (int i : vertex_indices) out.push_back(base.points[i]);
        return out;
    }
    const Point& w() const { return base.points[w_index]; }
};

/*
 * Invariants of the lifted vertex lattice Lambda = Z-span of the lifted
 * v_i.  mu are the coordinates of (0,1) in that basis, with reduced
 * denominators q_i; lcc = lcm(q_i) is the order of (0,1) in the quotient
 * Z^{d+1}/Lambda, and n_prime = n_lambda/lcc is the index of the enlarged
 * lattice generated by the lifts together with (0,1).
 */
struct LatticeInvariants {
    Int n_lambda = 0;
    RationalVector mu;
    std::vector<Int> q;
    Int lcc = 0;
    Int n_prime = 0;
    std::vector<Int> lambda_ints;  // n_lambda * mu_i, exact integers by Cramer
    bool origin_on_boundary = false;
};

struct MembershipCert {
    bool member = false;
    Int k = 0;              // multiplier of (0,1)
    std::vector<Int> c;     // coefficients of the lifted vertices
};

struct BoundsReport {
    std::int64_t h = 0;
    Int lower = 0;
    Int upper = 0;
    std::optional<Int> exact;
};

inline InstanceD3 make_instance_d3(const PointSet& a) {
    if (static_cast<int>(a.points.size()) != a.dim + 3)
        raise(ErrorKind::Argument, "instance requires exactly dim+3 points");
    InstanceD3 inst;
    inst.base = a;
    inst.hull = classify_hull(a);  // Degenerate error if not full-dimensional
    if (!inst.hull.is_simplex)
        raise(ErrorKind::Hypothesis, "hull is not a simplex on dim+1 vertices");
    inst.vertex_indices = inst.hull.vertex_indices;
    const Point zero(a.dim, 0);
    for (int i : inst.hull.interior_indices) {
        if (a.points[i] == zero)
            inst.origin_index = i;
        else
            inst.w_index = i;
    }
    if (inst.origin_index < 0)
        raise(ErrorKind::Hypothesis, "the origin must be one of the two non-vertex points");
    if (inst.w_index < 0) raise(ErrorKind::Internal, "missing w among the non-vertex points");
    auto index = difference_lattice_index(a);
    if (!index) raise(ErrorKind::Internal, "full-dimensional set with degenerate differences");
    if (*index != 1)
        raise(ErrorKind::Hypothesis,
              "differences generate a proper sublattice (index " + index->str() + ", need 1)");
    inst.generation_index = *index;
    std::vector<std::vector<std::int64_t>> vert_vecs;
    for (int i : inst.vertex_indices)
        vert_vecs.push_back(std::vector<std::int64_t>(a.points[i].begin(), a.points[i].end()));
    auto vindex = lattice_index(vert_vecs, a.dim);
    if (!vindex) raise(ErrorKind::Internal, "simplex vertices with rank-deficient span");
    inst.vertex_lattice_index = *vindex;
    BarycentricCoords wb = barycentric_in_simplex(inst.w(), inst.vertices(), a.dim);
    if (wb.location == Location::Outside)
        raise(ErrorKind::Internal, "non-vertex point outside the vertex simplex");
    inst.w_on_boundary = wb.location == Location::Boundary;
    return inst;
}

inline LatticeInvariants analyze_lattice(const InstanceD3& inst) {
    const int d = inst.base.dim;
    IntMatrix verts = lifted_matrix(inst.vertices(), d);
    LatticeInvariants inv;
    inv.n_lambda = abs_int(det_int(verts));
    if (inv.n_lambda == 0) raise(ErrorKind::Internal, "simplex lift matrix is singular");
    std::vector<Int> rhs(d + 1, Int(0));
    rhs[d] = 1;
    inv.mu = solve_rational(verts, rhs);
    Rational total = 0;
    for (const auto& m : inv.mu) {
        if (m < 0) raise(ErrorKind::Hypothesis, "origin lies outside the vertex simplex");
        if (m == 0) inv.origin_on_boundary = true;
        total += m;
    }
    if (total != 1) raise(ErrorKind::Internal, "barycentric coordinates fail to sum to one");
    inv.lcc = 1;
    for (const auto& m : inv.mu) {
        Int den = denominator(m);
        inv.q.push_back(den);
        inv.lcc = lcm_int(inv.lcc, den);
    }
    if (inv.n_lambda % inv.lcc != 0)
        raise(ErrorKind::Internal, "lcc fails to divide the lattice index");
    inv.n_prime = inv.n_lambda / inv.lcc;
    Int g = 0;
    for (const auto& m : inv.mu) {
        Rational scaled = m * inv.n_lambda;
        if (!is_integer(scaled))
            raise(ErrorKind::Internal, "Cramer numerator is not an integer");
        inv.lambda_ints.push_back(numerator(scaled));
        g = gcd_int(g, numerator(scaled));
    }
    if (g != inv.n_prime)
        raise(ErrorKind::Internal, "gcd of the scaled coordinates disagrees with n_prime");
    return inv;
}

/*
 * Membership of a lifted target in the natural-number span of
 * {(0,1), lifted v_1..v_{d+1}}: with t the rational coordinates of the
 * target in the lifted vertex basis, the target equals
 * k(0,1) + sum c_i v~_i iff c = t - k mu is a nonnegative integer vector;
 * k + sum c_i equals the height, so k ranges over 0..height.  Returns the
 * smallest-k certificate.
 */
inline MembershipCert pos_span_membership(const std::vector<Int>& target, const InstanceD3& inst,
                                          const LatticeInvariants& inv) {
    const int d = inst.base.dim;
    if (static_cast<int>(target.size()) != d + 1)
        raise(ErrorKind::Argument, "target must be a lifted point");
    if (target[d] < 0) raise(ErrorKind::Argument, "target height must be nonnegative");
    IntMatrix verts = lifted_matrix(inst.vertices(), d);
    RationalVector t = solve_rational(verts, target);
    for (Int k = 0; k <= target[d]; ++k) {
        MembershipCert cert;
        cert.k = k;
        bool ok = true;
        for (int i = 0; i <= d; ++i) {
            Rational ci = t[i] - inv.mu[i] * k;
            if (ci < 0 || !is_integer(ci)) {
                ok = false;
                break;
            }
            cert.c.push_back(numerator(ci));
        }
        if (!ok) continue;
        cert.member = true;
        return cert;
    }
    return MembershipCert{};
}

inline std::vector<Int> scaled_lifted_w(const InstanceD3& inst, const Int& factor) {
    std::vector<Int> t;
    for (std::int64_t c : inst.w()) t.push_back(factor * c);
    t.push_back(factor);
    return t;
}

// Equality-regime test: n_prime * lifted w lies in the positive span.
inline bool equality_condition(const InstanceD3& inst, const LatticeInvariants& inv) {
    return pos_span_membership(scaled_lifted_w(inst, inv.n_prime), inst, inv).member;
}

// Least M >= 1 with M * n_prime * lifted w in the positive span; always at
// most n_lambda / n_prime = lcc since n_lambda * w~ has nonnegative integer
// vertex coordinates outright.
inline Int compute_m_w(const InstanceD3& inst, const LatticeInvariants& inv) {
    for (Int m = 1; m * inv.n_prime <= inv.n_lambda; ++m) {
        if (pos_span_membership(scaled_lifted_w(inst, m * inv.n_prime), inst, inv).member)
            return m;
    }
    raise(ErrorKind::Internal, "no multiple of n_prime * w lifted into the positive span");
}

namespace detail {

inline Int binom_clamped(const Int& n, std::int64_t k) {
    if (n < k) return 0;
    return binomial(n.convert_to<std::int64_t>(), k);
}

// Number of points of the coset union over m in [0, blocks) at height h:
// each block contributes the height-(h-m) slice count of the enlarged
// positive span, C(h-m+d+1, d+1) - C(h-m+d+1-lcc, d+1) (the unique monoid
// relation lcc*(0,1) = sum lcc*mu_i*v~_i makes representations with the
// (0,1)-multiplier reduced below lcc unique, and the subtraction removes
// the overcount by the hockey-stick identity).
inline Int coset_slice_sum(std::int64_t h, const Int& blocks, const Int& lcc, int d) {
    Int total = 0;
    for (Int m = 0; m < blocks; ++m) {
        Int top = Int(h) - m + d + 1;
        total += binom_clamped(top, d + 1) - binom_clamped(top - lcc, d + 1);
    }
    return total;
}

}  // namespace detail

// Exact |hA| when the equality condition holds: the cone is then the
// disjoint union of the n_prime cosets m*w~ + enlarged positive span.
inline Int card_d3_exact(const InstanceD3& inst, const LatticeInvariants& inv, const Int& m_w,
                         std::int64_t h) {
    if (h < 0) raise(ErrorKind::Argument, "h must be nonnegative");
    if (m_w != 1)
        raise(ErrorKind::Hypothesis, "equality condition fails (m_w > 1); only bounds apply");
    return detail::coset_slice_sum(h, inv.n_prime, inv.lcc, inst.base.dim);
}

/*
 * Two-sided bounds on |hA|: the first n_prime cosets are pairwise disjoint
 * and inside the cone (lower), and m_w * n_prime cosets always cover it
 * (upper).  The lower value is exact for h <= n_prime - 1, where no cone
 * point needs more than h < n_prime copies of w, and for all h when the
 * equality condition holds.
 */
inline BoundsReport card_d3_bounds(const InstanceD3& inst, const LatticeInvariants& inv,
                                   const Int& m_w, std::int64_t h) {
    if (h < 0) raise(ErrorKind::Argument, "h must be nonnegative");
    BoundsReport out;
    out.h = h;
    out.lower = detail::coset_slice_sum(h, inv.n_prime, inv.lcc, inst.base.dim);
    out.upper = detail::coset_slice_sum(h, m_w * inv.n_prime, inv.lcc, inst.base.dim);
    if (m_w == 1 || Int(h) <= inv.n_prime - 1) out.exact = out.lower;
    return out;
}

// Bundle used by the CLI and the diagnostics: instance, invariants, m_w.
struct D3Analysis {
    InstanceD3 inst;
    LatticeInvariants inv;
    Int m_w = 0;
    bool equality = false;
};

inline D3Analysis analyze_d3(const PointSet& a) {
    D3Analysis out;
    out.inst = make_instance_d3(a);
    out.inv = analyze_lattice(out.inst);
    out.m_w = compute_m_w(out.inst, out.inv);
    out.equality = out.m_w == 1;
    return out;
}

}  // namespace sumcard
