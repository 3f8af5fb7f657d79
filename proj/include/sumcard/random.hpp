#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumcard/dplus2.hpp"
#include "sumcard/dplus3.hpp"
#include "sumcard/error.hpp"
#include "sumcard/geometry.hpp"
#include "sumcard/linalg.hpp"

namespace sumcard {

// splitmix64: tiny, seedable, stable across platforms; documented in the
// README so instance streams are reproducible from the seed alone.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform enough for rejection sampling; bias is irrelevant here.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) raise(ErrorKind::Argument, "empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

  private:
    std::uint64_t state_;
};

inline Point sample_point(SplitMix64& rng, int dim, std::int64_t bound) {
    Point p(dim);
    for (int c = 0; c < dim; ++c) p[c] = rng.uniform_int(-bound, bound);
    return p;
}

/*
 * Random dim+2 set with distinct points in [-bound, bound]^dim whose
 * differences generate Z^dim and whose normalized volume r stays within
 * r_cap (keeps the brute-force comparison window tractable).  nullopt when
 * max_tries rejections run out.
 */
inline std::optional<PointSet> sample_d2_instance(SplitMix64& rng, int dim, std::int64_t bound,
                                                  const Int& r_cap, int max_tries = 10'000) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Point> pts;
        bool distinct = true;
        for (int i = 0; i < dim + 2 && distinct; ++i) {
            Point p = sample_point(rng, dim, bound);
            for (const auto& q : pts)
                if (q == p) distinct = false;
            pts.push_back(std::move(p));
        }
        if (!distinct) continue;
        if (lifted_rank(pts, dim) != dim + 1) continue;
        PointSet s{dim, pts};
        auto index = difference_lattice_index(s);
        if (!index || *index != 1) continue;
        RadonData radon = affine_dependency(s);
        if (radon.r > r_cap) continue;
        return s;
    }
    return std::nullopt;
}

/*
 * Random dim+3 set {0, v_1..v_{dim+1}, w}: vertices drawn until their
 * lifted determinant is nonzero and within n_cap, the origin must lie in
 * the closed simplex without being a vertex, w is drawn uniformly from the
 * strictly interior lattice points, and A - A must generate Z^dim.
 */
inline std::optional<PointSet> sample_d3_instance(SplitMix64& rng, int dim, std::int64_t bound,
                                                  const Int& n_cap, int max_tries = 20'000) {
    const Point zero(dim, 0);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Point> verts;
        bool distinct = true;
        for (int i = 0; i < dim + 1 && distinct; ++i) {
            Point p = sample_point(rng, dim, bound);
            if (p == zero) distinct = false;
            for (const auto& q : verts)
                if (q == p) distinct = false;
            verts.push_back(std::move(p));
        }
        if (!distinct) continue;
        Int det = abs_int(det_int(lifted_matrix(verts, dim)));
        if (det == 0 || det > n_cap) continue;
        BarycentricCoords ob = barycentric_in_simplex(zero, verts, dim);
        if (ob.location == Location::Outside) continue;
        std::vector<Point> inner = simplex_interior_points(verts, dim);
        std::vector<Point> candidates;
        for (auto& p : inner)
            if (p != zero) candidates.push_back(std::move(p));
        if (candidates.empty()) continue;
        Point w = candidates[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1))];
        std::vector<Point> pts;
        pts.push_back(zero);
        for (auto& v : verts) pts.push_back(v);
        pts.push_back(std::move(w));
        PointSet s{dim, pts};
        auto index = difference_lattice_index(s);
        if (!index || *index != 1) continue;
        return s;
    }
    return std::nullopt;
}

// Random nonsingular square basis with entries in [-bound, bound] and
// |det| <= det_cap.
inline std::optional<IntMatrix> sample_basis(SplitMix64& rng, int n, std::int64_t bound,
                                             const Int& det_cap, int max_tries = 10'000) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        IntMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = rng.uniform_int(-bound, bound);
        Int det = abs_int(det_int(m));
        if (det == 0 || det > det_cap) continue;
        return m;
    }
    return std::nullopt;
}

}  // namespace sumcard
