#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "sumcard/arith.hpp"
#include "sumcard/error.hpp"
#include "sumcard/geometry.hpp"

namespace sumcard {

struct Budget {
    std::int64_t max_layer_points = 10'000'000;
    std::int64_t max_abs_coordinate = 1'000'000'000'000'000;  // guards against overflow
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Open-addressing set of points keyed by zero-padded fixed-width arrays.
// Linear probing over a power-of-two table; slot is empty while its first
// lane holds the sentinel (inputs are magnitude-checked so the sentinel can
// never be a real coordinate).
class FlatPointSet {
  public:
    static constexpr std::int64_t kEmpty = INT64_MIN;

    explicit FlatPointSet(std::size_t expected = 64) {
        std::size_t cap = 64;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, empty_slot());
        mask_ = cap - 1;
    }

    std::size_t size() const { return count_; }

    bool insert(const std::array<std::int64_t, kMaxDim>& key) {
        if ((count_ + 1) * 10 >= slots_.size() * 7) grow();
        return insert_no_grow(key);
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& slot : slots_)
            if (slot[0] != kEmpty) fn(slot);
    }

  private:
    static std::array<std::int64_t, kMaxDim> empty_slot() {
        std::array<std::int64_t, kMaxDim> s{};
        s[0] = kEmpty;
        return s;
    }

    static std::size_t hash_key(const std::array<std::int64_t, kMaxDim>& key) {
        std::uint64_t h = 0x8000000000000000ull;
        for (std::int64_t v : key) h = mix64(h ^ static_cast<std::uint64_t>(v));
        return static_cast<std::size_t>(h);
    }

    bool insert_no_grow(const std::array<std::int64_t, kMaxDim>& key) {
        std::size_t i = hash_key(key) & mask_;
        while (slots_[i][0] != kEmpty) {
            if (slots_[i] == key) return false;
            i = (i + 1) & mask_;
        }
        slots_[i] = key;
        ++count_;
        return true;
    }

    void grow() {
        std::vector<std::array<std::int64_t, kMaxDim>> old = std::move(slots_);
        slots_.assign(old.size() * 2, empty_slot());
        mask_ = slots_.size() - 1;
        count_ = 0;
        for (const auto& slot : old)
            if (slot[0] != kEmpty) insert_no_grow(slot);
    }

    std::vector<std::array<std::int64_t, kMaxDim>> slots_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;
};

inline std::array<std::int64_t, kMaxDim> key_of(const Point& p) {
    std::array<std::int64_t, kMaxDim> key{};
    for (std::size_t i = 0; i < p.size(); ++i) key[i] = p[i];
    return key;
}

}  // namespace detail

struct SumsetLayer {
    std::int64_t h = 0;
    std::vector<Point> points;  // sorted lexicographically

    bool contains(const Point& p) const {
        return std::binary_search(points.begin(), points.end(), p);
    }
};

/*
 * Layers 0A = {0}, 1A, ..., h_max*A computed by repeatedly adding A to the
 * previous layer through a flat hash set, each layer then sorted for
 * deterministic output and binary-search lookup.
 */
inline std::vector<SumsetLayer> sumset_layers(const PointSet& a, std::int64_t h_max,
                                              const Budget& budget = Budget{}) {
    if (h_max < 0) raise(ErrorKind::Argument, "h must be nonnegative");
    std::int64_t max_abs = 0;
    for (const auto& p : a.points)
        for (std::int64_t c : p) max_abs = std::max(max_abs, c < 0 ? -c : c);
    if (max_abs > 0 && h_max > budget.max_abs_coordinate / max_abs)
        raise(ErrorKind::Budget, "h times coordinate magnitude exceeds the overflow guard");
    std::vector<SumsetLayer> layers;
    layers.push_back(SumsetLayer{0, {Point(a.dim, 0)}});
    for (std::int64_t h = 1; h <= h_max; ++h) {
        const auto& prev = layers.back().points;
        detail::FlatPointSet set(prev.size() + a.points.size());
        for (const auto& p : prev) {
            for (const auto& q : a.points) {
                Point sum(a.dim);
                for (int i = 0; i < a.dim; ++i) sum[i] = p[i] + q[i];
                set.insert(detail::key_of(sum));
                if (static_cast<std::int64_t>(set.size()) > budget.max_layer_points)
                    raise(ErrorKind::Budget, "layer exceeds the point budget");
            }
        }
        SumsetLayer layer;
        layer.h = h;
        layer.points.reserve(set.size());
        set.for_each([&](const std::array<std::int64_t, kMaxDim>& key) {
            layer.points.emplace_back(key.begin(), key.begin() + a.dim);
        });
        std::sort(layer.points.begin(), layer.points.end());
        layers.push_back(std::move(layer));
    }
    return layers;
}

inline std::vector<Point> iterated_sumset(const PointSet& a, std::int64_t h,
                                          const Budget& budget = Budget{}) {
    return sumset_layers(a, h, budget).back().points;
}

// Fast cardinality-only variant: layers are kept as fixed-width arrays with
// no per-point allocation and no sorting, since only the sizes are needed.
inline std::vector<Int> cardinality_sequence(const PointSet& a, std::int64_t h_max,
                                             const Budget& budget = Budget{}) {
    if (h_max < 0) raise(ErrorKind::Argument, "h must be nonnegative");
    std::int64_t max_abs = 0;
    for (const auto& p : a.points)
        for (std::int64_t c : p) max_abs = std::max(max_abs, c < 0 ? -c : c);
    if (max_abs > 0 && h_max > budget.max_abs_coordinate / max_abs)
        raise(ErrorKind::Budget, "h times coordinate magnitude exceeds the overflow guard");
    std::vector<std::array<std::int64_t, kMaxDim>> gens;
    for (const auto& p : a.points) gens.push_back(detail::key_of(p));
    std::vector<std::array<std::int64_t, kMaxDim>> prev{detail::key_of(Point(a.dim, 0))};
    std::vector<Int> out{Int(1)};
    for (std::int64_t h = 1; h <= h_max; ++h) {
        detail::FlatPointSet set(prev.size() + gens.size());
        for (const auto& p : prev) {
            for (const auto& q : gens) {
                std::array<std::int64_t, kMaxDim> sum{};
                for (int i = 0; i < a.dim; ++i) sum[i] = p[i] + q[i];
                set.insert(sum);
                if (static_cast<std::int64_t>(set.size()) > budget.max_layer_points)
                    raise(ErrorKind::Budget, "layer exceeds the point budget");
            }
        }
        prev.clear();
        prev.reserve(set.size());
        set.for_each(
            [&](const std::array<std::int64_t, kMaxDim>& key) { prev.push_back(key); });
        out.push_back(Int(prev.size()));
    }
    return out;
}

struct KhovanskiiFit {
    std::int64_t h0 = 0;          // least index from which the sequence is polynomial
    int degree = 0;               // degree of the fitted polynomial
    std::int64_t base = 0;        // Newton expansion point
    RationalVector newton;        // p(x) = sum_k newton[k] * C(x - base, k)
    Int leading_times_dfact = 0;  // degree-th forward difference at the base

    Rational evaluate(std::int64_t x) const {
        Rational acc = 0;
        for (std::size_t k = 0; k < newton.size(); ++k)
            acc += newton[k] * binomial_poly(Rational(x - base), static_cast<std::int64_t>(k));
        return acc;
    }
};

/*
 * Fit the eventual polynomial of a cardinality sequence for a dim-dimensional
 * set.  Growth is eventually polynomial of degree dim, so the fit requires
 * the trailing dim+2 forward differences of order dim+1 to vanish (needs at
 * least 2*dim+3 terms); the polynomial is then the Newton form through the
 * last dim+1 values and h0 is the least index from which it matches.
 */
inline KhovanskiiFit khovanskii_fit(const std::vector<Int>& seq, int dim) {
    if (dim < 1 || dim > kMaxDim) raise(ErrorKind::Dimension, "dimension must be within 1..6");
    const std::int64_t len = static_cast<std::int64_t>(seq.size());
    if (len < 2 * dim + 3)
        raise(ErrorKind::NotStabilized, "sequence too short to certify polynomial growth");
    std::vector<std::vector<Int>> diff(dim + 2);
    diff[0] = seq;
    for (int k = 1; k <= dim + 1; ++k) {
        diff[k].resize(diff[k - 1].size() - 1);
        for (std::size_t i = 0; i + 1 < diff[k - 1].size(); ++i)
            diff[k][i] = diff[k - 1][i + 1] - diff[k - 1][i];
    }
    const auto& top = diff[dim + 1];
    for (std::int64_t i = static_cast<std::int64_t>(top.size()) - dim - 2;
         i < static_cast<std::int64_t>(top.size()); ++i) {
        if (top[i] != 0)
            raise(ErrorKind::NotStabilized, "trailing differences have not vanished");
    }
    KhovanskiiFit fit;
    fit.base = len - 1 - dim;
    for (int k = 0; k <= dim; ++k) fit.newton.push_back(Rational(diff[k][fit.base]));
    fit.degree = 0;
    for (int k = dim; k >= 0; --k) {
        if (fit.newton[k] != 0) {
            fit.degree = k;
            break;
        }
    }
    fit.leading_times_dfact = diff[dim][fit.base];
    std::int64_t h0 = len - 1;
    while (h0 > 0 && fit.evaluate(h0 - 1) == Rational(seq[h0 - 1])) --h0;
    fit.h0 = h0;
    return fit;
}

}  // namespace sumcard
