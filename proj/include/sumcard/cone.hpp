#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "sumcard/arith.hpp"
#include "sumcard/dplus3.hpp"
#include "sumcard/error.hpp"
#include "sumcard/geometry.hpp"
#include "sumcard/linalg.hpp"
#include "sumcard/sumset.hpp"

namespace sumcard {

struct ConeBudget {
    Int max_abs_det = 10'000;
    std::int64_t max_box_cells = 10'000'000;
};

// Integer points of the half-open parallelepiped of a nonsingular basis
// (columns); their count equals |det|.
struct FundamentalDomain {
    IntMatrix basis;
    std::vector<Point> points;  // sorted lexicographically
    Int count = 0;
};

/*
 * Scan the integer bounding box of the parallelepiped (its vertices are the
 * 0/1-coefficient sums of the basis columns) and keep the points whose
 * basis coordinates all lie in [0,1).  Coordinates are tested exactly via
 * the adjugate: x has coordinate j equal to (adj x)_j / det.
 */
inline FundamentalDomain fundamental_domain_points(const IntMatrix& basis,
                                                   const ConeBudget& budget = ConeBudget{}) {
    if (basis.rows() != basis.cols()) raise(ErrorKind::Dimension, "basis must be square");
    const int n = basis.rows();
    Int det = det_int(basis);
    if (det == 0) raise(ErrorKind::Singular, "basis is singular");
    if (abs_int(det) > budget.max_abs_det)
        raise(ErrorKind::Budget, "basis determinant exceeds the enumeration budget");
    // adj[i][j] = cofactor of entry (j,i), so adj * basis = det * I.
    IntMatrix adj(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (n == 1) {
                adj.at(0, 0) = 1;
                continue;
            }
            IntMatrix sub(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub.at(rr, cc) = basis.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int minor = det_int(sub);
            adj.at(i, j) = ((i + j) % 2 == 0) ? minor : Int(-minor);
        }
    }
    std::vector<std::int64_t> lo(n, 0), hi(n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int r = 0; r < n; ++r) {
            std::int64_t s = 0;
            for (int c = 0; c < n; ++c)
                if (mask & (1u << c)) s += basis.at(r, c).convert_to<std::int64_t>();
            lo[r] = std::min(lo[r], s);
            hi[r] = std::max(hi[r], s);
        }
    }
    std::int64_t cells = 1;
    for (int r = 0; r < n; ++r) {
        std::int64_t width = hi[r] - lo[r] + 1;
        if (cells > budget.max_box_cells / width)
            raise(ErrorKind::Budget, "bounding box exceeds the enumeration budget");
        cells *= width;
    }
    FundamentalDomain fd{basis, {}, 0};
    Point cur(n);
    std::function<void(int)> scan = [&](int c) {
        if (c == n) {
            for (int j = 0; j < n; ++j) {
                Int t = 0;
                for (int i = 0; i < n; ++i) t += adj.at(j, i) * cur[i];
                bool inside = det > 0 ? (t >= 0 && t < det) : (t <= 0 && t > det);
                if (!inside) return;
            }
            fd.points.push_back(cur);
            return;
        }
        for (std::int64_t x = lo[c]; x <= hi[c]; ++x) {
            cur[c] = x;
            scan(c + 1);
        }
    };
    scan(0);
    std::sort(fd.points.begin(), fd.points.end());
    fd.count = Int(fd.points.size());
    if (fd.count != abs_int(det))
        raise(ErrorKind::Internal, "fundamental domain count disagrees with |det|");
    return fd;
}

// The unique representative of p modulo the basis lattice with all basis
// coordinates in [0,1): subtract the floor of each coordinate.
inline Point residue_of(const Point& p, const FundamentalDomain& fd) {
    const int n = fd.basis.rows();
    if (static_cast<int>(p.size()) != n)
        raise(ErrorKind::Dimension, "point length does not match the basis");
    std::vector<Int> rhs(p.begin(), p.end());
    RationalVector coords = solve_rational(fd.basis, rhs);
    Point out(n, 0);
    RationalVector acc(n, Rational(0));
    for (int j = 0; j < n; ++j) {
        Rational frac = coords[j] - rational_floor(coords[j]);
        for (int r = 0; r < n; ++r) acc[r] += frac * fd.basis.at(r, j);
    }
    for (int r = 0; r < n; ++r) {
        if (!is_integer(acc[r])) raise(ErrorKind::Internal, "residue is not an integer point");
        out[r] = numerator(acc[r]).convert_to<std::int64_t>();
    }
    if (!std::binary_search(fd.points.begin(), fd.points.end(), out))
        raise(ErrorKind::Internal, "residue missing from the fundamental domain");
    return out;
}

// A cone point from which subtracting any basis vector exits the cone;
// cone membership at height h is read off the h-th sumset layer.
struct MinimalElement {
    Point point;  // lifted, length dim+1
    std::int64_t height = 0;
    Point residue;
};

/*
 * All minimal elements of the cone of a up to the height limit, with their
 * residues in the fundamental domain of the lifted basis.  The theory
 * bounds every minimal height by |det(basis)| - 1, so a limit of at least
 * |det| - 1 sees them all.
 */
inline std::vector<MinimalElement> minimal_elements(const PointSet& a,
                                                    const std::vector<Point>& lifted_basis,
                                                    std::int64_t height_limit,
                                                    const Budget& budget = Budget{},
                                                    const ConeBudget& cone_budget = ConeBudget{}) {
    const int d = a.dim;
    if (static_cast<int>(lifted_basis.size()) != d + 1)
        raise(ErrorKind::Argument, "basis must consist of dim+1 lifted vectors");
    IntMatrix basis(d + 1, d + 1);
    for (int c = 0; c <= d; ++c) {
        if (static_cast<int>(lifted_basis[c].size()) != d + 1)
            raise(ErrorKind::Dimension, "basis vector length must be dim+1");
        for (int r = 0; r <= d; ++r) basis.at(r, c) = lifted_basis[c][r];
    }
    FundamentalDomain fd = fundamental_domain_points(basis, cone_budget);
    std::vector<SumsetLayer> layers = sumset_layers(a, height_limit, budget);
    std::vector<MinimalElement> out;
    for (std::int64_t h = 0; h <= height_limit; ++h) {
        for (const Point& g : layers[h].points) {
            bool minimal = true;
            for (const Point& b : lifted_basis) {
                std::int64_t bh = b[d];
                if (h - bh < 0) continue;  // below the cone: subtraction exits
                Point shifted(d);
                for (int c = 0; c < d; ++c) shifted[c] = g[c] - b[c];
                if (h - bh <= height_limit && layers[h - bh].contains(shifted)) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
            MinimalElement el;
            el.point = g;
            el.point.push_back(h);
            el.height = h;
            el.residue = residue_of(el.point, fd);
            out.push_back(std::move(el));
        }
    }
    return out;
}

// Multiplicity bookkeeping for the coset covering of the cone: for each
// cone point up to the height limit, how many of the m_w * n_prime cosets
// m*w~ + enlarged positive span contain it, and how many among the first
// n_prime (which the theory says are pairwise disjoint).
struct PointMultiplicity {
    Point lifted;
    int full_count = 0;        // over m in [0, m_w * n_prime)
    int restricted_count = 0;  // over m in [0, n_prime)
};

struct DecompositionReport {
    std::int64_t height_limit = 0;
    Int n_prime = 0;
    Int m_w = 0;
    std::vector<PointMultiplicity> multiplicities;
    bool covering_full = true;        // every point in some coset, m < m_w * n_prime
    bool covering_restricted = true;  // every point in some coset, m < n_prime
    bool disjoint_restricted = true;  // no point in two cosets with m < n_prime
    std::int64_t points_checked = 0;
};

inline DecompositionReport verify_decomposition(const D3Analysis& an, std::int64_t height_limit,
                                                const Budget& budget = Budget{}) {
    DecompositionReport rep;
    rep.height_limit = height_limit;
    rep.n_prime = an.inv.n_prime;
    rep.m_w = an.m_w;
    const int d = an.inst.base.dim;
    const Point& w = an.inst.w();
    Int blocks = an.m_w * an.inv.n_prime;
    std::vector<SumsetLayer> layers = sumset_layers(an.inst.base, height_limit, budget);
    for (std::int64_t h = 0; h <= height_limit; ++h) {
        for (const Point& g : layers[h].points) {
            PointMultiplicity pm;
            pm.lifted = g;
            pm.lifted.push_back(h);
            for (Int m = 0; m < blocks; ++m) {
                if (m > h) break;  // the shifted height would be negative
                std::vector<Int> target;
                for (int c = 0; c < d; ++c) target.push_back(Int(g[c]) - m * w[c]);
                target.push_back(Int(h) - m);
                if (pos_span_membership(target, an.inst, an.inv).member) {
                    ++pm.full_count;
                    if (m < an.inv.n_prime) ++pm.restricted_count;
                }
            }
            if (pm.full_count < 1) rep.covering_full = false;
            if (pm.restricted_count < 1) rep.covering_restricted = false;
            if (pm.restricted_count > 1) rep.disjoint_restricted = false;
            ++rep.points_checked;
            rep.multiplicities.push_back(std::move(pm));
        }
    }
    return rep;
}

}  // namespace sumcard
