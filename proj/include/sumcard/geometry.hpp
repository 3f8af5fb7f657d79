#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "sumcard/arith.hpp"
#include "sumcard/error.hpp"
#include "sumcard/linalg.hpp"

namespace sumcard {

inline constexpr int kMaxDim = 6;

using Point = std::vector<std::int64_t>;

// A finite set of distinct integer points in Z^dim.
struct PointSet {
    int dim = 0;
    std::vector<Point> points;
};

inline PointSet make_point_set(int dim, std::vector<Point> points) {
    if (dim < 1 || dim > kMaxDim) raise(ErrorKind::Dimension, "dimension must be within 1..6");
    if (points.empty()) raise(ErrorKind::Argument, "empty point set");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            raise(ErrorKind::Dimension, "point length does not match dimension");
    std::vector<Point> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        raise(ErrorKind::Argument, "points must be distinct");
    return PointSet{dim, std::move(points)};
}

inline Point lift(const Point& p) {
    Point q = p;
    q.push_back(1);
    return q;
}

// Matrix whose columns are the lifted points (v, 1).
inline IntMatrix lifted_matrix(const std::vector<Point>& points, int dim) {
    IntMatrix m(dim + 1, static_cast<int>(points.size()));
    for (int c = 0; c < static_cast<int>(points.size()); ++c) {
        for (int r = 0; r < dim; ++r) m.at(r, c) = points[c][r];
        m.at(dim, c) = 1;
    }
    return m;
}

// Rank of the lifted point matrix; points affinely span R^dim iff this is
// dim + 1.
inline int lifted_rank(const std::vector<Point>& points, int dim) {
    return rank_int(lifted_matrix(points, dim));
}

enum class Location { Interior, Boundary, Outside };

inline const char* location_name(Location loc) {
    switch (loc) {
        case Location::Interior: return "interior";
        case Location::Boundary: return "boundary";
        case Location::Outside: return "outside";
    }
    return "unknown";
}

struct BarycentricCoords {
    RationalVector coords;
    Location location = Location::Outside;
};

// Exact barycentric coordinates of p with respect to a nondegenerate
// simplex on dim+1 vertices: solve [lifted vertices] mu = (p, 1).
inline BarycentricCoords barycentric_in_simplex(const Point& p, const std::vector<Point>& simplex,
                                                int dim) {
    if (static_cast<int>(simplex.size()) != dim + 1)
        raise(ErrorKind::Argument, "simplex must have dim+1 vertices");
    if (static_cast<int>(p.size()) != dim)
        raise(ErrorKind::Dimension, "point length does not match dimension");
    IntMatrix m = lifted_matrix(simplex, dim);
    Point lifted_p = lift(p);
    std::vector<Int> rhs(lifted_p.begin(), lifted_p.end());
    BarycentricCoords out;
    out.coords = solve_rational(m, rhs);  // Singular error if simplex degenerate
    bool any_zero = false;
    for (const auto& c : out.coords) {
        if (c < 0) return BarycentricCoords{out.coords, Location::Outside};
        if (c == 0) any_zero = true;
    }
    out.location = any_zero ? Location::Boundary : Location::Interior;
    return out;
}

namespace detail {

inline void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> chosen;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(chosen.size()) == k) return fn(chosen);
        for (int i = start; i < n; ++i) {
            if (n - i < k - static_cast<int>(chosen.size())) break;
            chosen.push_back(i);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(0);
}

inline std::vector<Point> select_points(const std::vector<Point>& pts,
                                        const std::vector<int>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(pts[i]);
    return out;
}

// Affine functional vanishing on the hyperplane spanned by the dim points
// in `plane`: x -> det(lifted [plane, x]).  Callers must ensure the plane
// points are affinely independent (lifted rank == dim).
inline Int hyperplane_side(const std::vector<Point>& plane, const Point& x, int dim) {
    std::vector<Point> cols = plane;
    cols.push_back(x);
    return det_int(lifted_matrix(cols, dim));
}

// True iff some affinely independent subset of at most dim+1 points of pts
// carries p with nonnegative affine coefficients (Caratheodory certificate).
inline bool caratheodory_member(const Point& p, const std::vector<Point>& pts, int dim) {
    const int n = static_cast<int>(pts.size());
    Point lifted_p = lift(p);
    std::vector<Int> rhs(lifted_p.begin(), lifted_p.end());
    for (int k = std::min(dim + 1, n); k >= 1; --k) {
        bool found = false;
        for_each_subset(n, k, [&](const std::vector<int>& idx) {
            std::vector<Point> sub = select_points(pts, idx);
            IntMatrix m = lifted_matrix(sub, dim);
            if (rank_int(m) != k) return false;
            auto mu = solve_consistent(m, rhs);
            if (!mu) return false;
            for (const auto& c : *mu)
                if (c < 0) return false;
            found = true;
            return true;
        });
        if (found) return true;
    }
    return false;
}

}  // namespace detail

/*
 * Exact location of p relative to conv(s): membership by exhaustive
 * Caratheodory enumeration, then boundary vs. interior by enumerating
 * supporting hyperplanes (every facet of a full-dimensional hull is spanned
 * by dim affinely independent points of s, so checking all dim-subsets that
 * keep the whole set on one closed side finds every facet).  For point sets
 * that do not affinely span R^dim the ambient interior is empty and members
 * are reported as boundary.
 */
inline Location hull_membership(const Point& p, const PointSet& s) {
    if (static_cast<int>(p.size()) != s.dim)
        raise(ErrorKind::Dimension, "point length does not match dimension");
    if (s.points.empty()) raise(ErrorKind::Argument, "empty point set");
    if (!detail::caratheodory_member(p, s.points, s.dim)) return Location::Outside;
    if (lifted_rank(s.points, s.dim) < s.dim + 1) return Location::Boundary;
    const int n = static_cast<int>(s.points.size());
    bool on_boundary = false;
    detail::for_each_subset(n, s.dim, [&](const std::vector<int>& idx) {
        std::vector<Point> plane = detail::select_points(s.points, idx);
        if (lifted_rank(plane, s.dim) != s.dim) return false;
        bool pos = false, neg = false;
        for (const auto& q : s.points) {
            Int side = detail::hyperplane_side(plane, q, s.dim);
            if (side > 0) pos = true;
            if (side < 0) neg = true;
            if (pos && neg) return false;
        }
        if (detail::hyperplane_side(plane, p, s.dim) == 0) {
            on_boundary = true;
            return true;
        }
        return false;
    });
    return on_boundary ? Location::Boundary : Location::Interior;
}

struct HullClassification {
    std::vector<int> vertex_indices;    // ascending
    std::vector<int> interior_indices;  // non-vertices, ascending
    bool is_simplex = false;
};

// Vertex iff the point lies outside the hull of the other points.  Requires
// the set to affinely span R^dim.
inline HullClassification classify_hull(const PointSet& s) {
    if (lifted_rank(s.points, s.dim) < s.dim + 1)
        raise(ErrorKind::Degenerate, "points do not affinely span the space");
    HullClassification out;
    const int n = static_cast<int>(s.points.size());
    for (int i = 0; i < n; ++i) {
        std::vector<Point> others;
        others.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(s.points[j]);
        PointSet rest{s.dim, std::move(others)};
        if (hull_membership(s.points[i], rest) == Location::Outside)
            out.vertex_indices.push_back(i);
        else
            out.interior_indices.push_back(i);
    }
    out.is_simplex = static_cast<int>(out.vertex_indices.size()) == s.dim + 1;
    return out;
}

/*
 * Primitive-direction integer dependency among dim+2 lifted points,
 * computed from the alternating maximal minors of the (dim+1) x (dim+2)
 * lift matrix (the Laplace-expansion kernel vector).  The result is sign
 * normalized so the first nonzero entry is positive, and the residual
 * sum lambda_i * lifted(v_i) = 0 is asserted exactly.  When the
 * differences of the points generate Z^dim the minors are coprime, so this
 * is the primitive generator of the dependency lattice.
 */
inline std::vector<Int> lifted_kernel_dependency(const std::vector<Point>& points, int dim) {
    if (static_cast<int>(points.size()) != dim + 2)
        raise(ErrorKind::Argument, "dependency requires exactly dim+2 points");
    IntMatrix m = lifted_matrix(points, dim);
    const int n = dim + 2;
    std::vector<Int> lambda(n);
    bool any_nonzero = false;
    for (int omit = 0; omit < n; ++omit) {
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
            if (c != omit) cols.push_back(c);
        Int minor = det_int(m.select_columns(cols));
        lambda[omit] = (omit % 2 == 0) ? minor : Int(-minor);
        if (lambda[omit] != 0) any_nonzero = true;
    }
    if (!any_nonzero) raise(ErrorKind::Degenerate, "all maximal minors vanish");
    for (const auto& l : lambda) {
        if (l != 0) {
            if (l < 0)
                for (auto& x : lambda) x = -x;
            break;
        }
    }
    for (int r = 0; r <= dim; ++r) {
        Int acc = 0;
        for (int c = 0; c < n; ++c) acc += lambda[c] * m.at(r, c);
        if (acc != 0) raise(ErrorKind::Internal, "dependency residual is nonzero");
    }
    return lambda;
}

// Index in Z^dim of the subgroup generated by all pairwise differences of s
// (equivalently by p_i - p_0); nullopt when the differences are rank
// deficient, i.e. the set is not full-dimensional.
inline std::optional<Int> difference_lattice_index(const PointSet& s) {
    std::vector<std::vector<std::int64_t>> diffs;
    for (std::size_t i = 1; i < s.points.size(); ++i) {
        std::vector<std::int64_t> d(s.dim);
        for (int c = 0; c < s.dim; ++c) d[c] = s.points[i][c] - s.points[0][c];
        diffs.push_back(std::move(d));
    }
    return lattice_index(diffs, s.dim);
}

// All lattice points strictly inside the simplex, found by scanning its
// integer bounding box with exact barycentric tests.  Returned sorted.
inline std::vector<Point> simplex_interior_points(const std::vector<Point>& simplex, int dim) {
    if (static_cast<int>(simplex.size()) != dim + 1)
        raise(ErrorKind::Argument, "simplex must have dim+1 vertices");
    std::vector<std::int64_t> lo(dim, INT64_MAX), hi(dim, INT64_MIN);
    for (const auto& v : simplex) {
        for (int c = 0; c < dim; ++c) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
    }
    std::vector<Point> out;
    Point cur(dim);
    std::function<void(int)> scan = [&](int c) {
        if (c == dim) {
            if (barycentric_in_simplex(cur, simplex, dim).location == Location::Interior)
                out.push_back(cur);
            return;
        }
        for (std::int64_t x = lo[c]; x <= hi[c]; ++x) {
            cur[c] = x;
            scan(c + 1);
        }
    };
    scan(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct Facet {
    std::vector<int> incident;   // indices into the owning point vector
    std::vector<int> spanning;   // dim affinely independent incident indices
    int inside_sign = 0;         // sign of hyperplane_side on the interior side
};

// All facets of conv(pts) for a full-dimensional set, found by scanning
// dim-subsets whose hyperplane keeps every point on one closed side.
inline std::vector<Facet> enumerate_facets(const std::vector<Point>& pts, int dim) {
    const int n = static_cast<int>(pts.size());
    std::vector<Facet> facets;
    std::set<std::vector<int>> seen;
    for_each_subset(n, dim, [&](const std::vector<int>& idx) {
        std::vector<Point> plane = select_points(pts, idx);
        if (lifted_rank(plane, dim) != dim) return false;
        bool pos = false, neg = false;
        std::vector<int> incident;
        for (int q = 0; q < n; ++q) {
            Int side = hyperplane_side(plane, pts[q], dim);
            if (side > 0) pos = true;
            else if (side < 0) neg = true;
            else incident.push_back(q);
            if (pos && neg) return false;
        }
        if (pos == neg) return false;  // all points on the hyperplane: degenerate input
        if (seen.insert(incident).second)
            facets.push_back(Facet{incident, idx, pos ? 1 : -1});
        return false;
    });
    return facets;
}

// dim! times the volume of the pyramid with the given apex over a facet
// carrying |facet| in {dim, dim+1} points.  A facet with dim+1 points is
// triangulated through the positive part of the kernel vector of its lifted
// (square, corank one) matrix, mirroring the Radon covering one dimension
// down.
inline Int pyramid_volume_dfact(const std::vector<Point>& facet_pts, const Point& apex, int dim) {
    auto simplex_part = [&](std::vector<Point> base) {
        base.push_back(apex);
        return abs_int(det_int(lifted_matrix(base, dim)));
    };
    if (static_cast<int>(facet_pts.size()) == dim) return simplex_part(facet_pts);
    if (static_cast<int>(facet_pts.size()) != dim + 1)
        raise(ErrorKind::Internal, "facet carries an unexpected number of points");
    IntMatrix m = lifted_matrix(facet_pts, dim);  // (dim+1) x (dim+1), rank dim
    const int n = dim + 1;
    std::vector<Int> kernel(n, 0);
    for (int col = 0; col < n && kernel == std::vector<Int>(n, Int(0)); ++col) {
        for (int row = 0; row < n; ++row) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != col) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != row) cols.push_back(c);
            IntMatrix sub(n - 1, n - 1);
            for (int r = 0; r < n - 1; ++r)
                for (int c = 0; c < n - 1; ++c) sub.at(r, c) = m.at(rows[r], cols[c]);
            Int cof = det_int(sub);
            kernel[row] = ((row + col) % 2 == 0) ? cof : Int(-cof);
        }
    }
    bool any = false;
    for (const auto& k : kernel)
        if (k != 0) any = true;
    if (!any) raise(ErrorKind::Internal, "facet kernel vector vanished");
    for (const auto& k : kernel) {
        if (k != 0) {
            if (k < 0)
                for (auto& x : kernel) x = -x;
            break;
        }
    }
    Int total = 0;
    for (int i = 0; i < n; ++i) {
        if (kernel[i] <= 0) continue;
        std::vector<Point> base;
        for (int j = 0; j < n; ++j)
            if (j != i) base.push_back(facet_pts[j]);
        total += simplex_part(base);
    }
    return total;
}

// Positive part of the dependency of dim+2 affinely spanning points: by the
// Radon covering, this equals dim! times the volume of their hull.
inline Int dependency_volume_dfact(const std::vector<Point>& pts, int dim) {
    std::vector<Int> lambda = lifted_kernel_dependency(pts, dim);
    Int r = 0;
    for (const auto& l : lambda)
        if (l > 0) r += l;
    return r;
}

}  // namespace detail

/*
 * dim! times the Euclidean volume of conv(s), exactly.  Hull vertices are
 * classified first; a simplex is a single determinant, dim+2 vertices go
 * through the Radon covering (sum of the positive dependency entries), and
 * dim+3 vertices peel one vertex u and add the pyramids over the facets of
 * the remaining hull visible from u.
 */
inline Int hull_volume_dfact(const PointSet& s) {
    if (lifted_rank(s.points, s.dim) < s.dim + 1)
        raise(ErrorKind::Degenerate, "points do not affinely span the space");
    HullClassification cls = classify_hull(s);
    std::vector<Point> verts = detail::select_points(s.points, cls.vertex_indices);
    const int nv = static_cast<int>(verts.size());
    const int dim = s.dim;
    if (nv < dim + 1) raise(ErrorKind::Internal, "full-dimensional hull with too few vertices");
    if (nv == dim + 1) return abs_int(det_int(lifted_matrix(verts, dim)));
    if (nv == dim + 2) return detail::dependency_volume_dfact(verts, dim);
    if (nv > dim + 3) raise(ErrorKind::Argument, "hulls with more than dim+3 vertices unsupported");
    for (int drop = 0; drop < nv; ++drop) {
        std::vector<Point> rest;
        for (int i = 0; i < nv; ++i)
            if (i != drop) rest.push_back(verts[i]);
        if (lifted_rank(rest, dim) != dim + 1) continue;
        const Point& u = verts[drop];
        Int total = detail::dependency_volume_dfact(rest, dim);
        for (const auto& facet : detail::enumerate_facets(rest, dim)) {
            std::vector<Point> plane = detail::select_points(rest, facet.spanning);
            Int side = detail::hyperplane_side(plane, u, dim);
            bool visible = (facet.inside_sign > 0) ? (side < 0) : (side > 0);
            if (!visible) continue;
            total += detail::pyramid_volume_dfact(detail::select_points(rest, facet.incident), u,
                                                  dim);
        }
        return total;
    }
    raise(ErrorKind::Internal, "no vertex removal keeps the hull full-dimensional");
}

}  // namespace sumcard
