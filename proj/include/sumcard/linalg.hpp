#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "sumcard/arith.hpp"
#include "sumcard/error.hpp"

namespace sumcard {

inline constexpr int kMaxMatrixDim = 16;

// Dense integer matrix, row-major, dimensions capped at 16x16.  All the
// lattice work in this library happens on (d+1)x(d+2)-sized matrices with
// d <= 6, so the cap is a guard rail, not a real limit.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        check_dims(rows, cols);
        data_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
    }

    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : rows_(static_cast<int>(rows.size())), cols_(0) {
        if (rows.size() == 0) raise(ErrorKind::Dimension, "matrix with zero rows");
        cols_ = static_cast<int>(rows.begin()->size());
        check_dims(rows_, cols_);
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cols_)
                raise(ErrorKind::Dimension, "ragged matrix initializer");
            for (std::int64_t v : row) data_.emplace_back(v);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix select_columns(const std::vector<int>& cols) const {
        IntMatrix out(rows_, static_cast<int>(cols.size()));
        for (int r = 0; r < rows_; ++r)
            for (int j = 0; j < static_cast<int>(cols.size()); ++j) out.at(r, j) = at(r, cols[j]);
        return out;
    }

    IntMatrix with_column_replaced(int col, const std::vector<Int>& values) const {
        if (static_cast<int>(values.size()) != rows_)
            raise(ErrorKind::Dimension, "replacement column has wrong length");
        IntMatrix out = *this;
        for (int r = 0; r < rows_; ++r) out.at(r, col) = values[r];
        return out;
    }

  private:
    static void check_dims(int rows, int cols) {
        if (rows < 1 || cols < 1 || rows > kMaxMatrixDim || cols > kMaxMatrixDim)
            raise(ErrorKind::Dimension, "matrix dimensions must be within 1..16");
    }

    int rows_;
    int cols_;
    std::vector<Int> data_;
};

/*
 * Determinant by Bareiss fraction-free elimination.  Every intermediate
 * value is the determinant of a leading minor of the input, so entries stay
 * integral (the division by the previous pivot is exact) and growth is
 * bounded by Hadamard's inequality instead of exploding the way plain
 * integer Gaussian elimination does.
 */
inline Int det_int(const IntMatrix& m) {
    if (m.rows() != m.cols()) raise(ErrorKind::Dimension, "determinant of non-square matrix");
    const int n = m.rows();
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int det = a.at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

// Rank of an integer matrix by fraction-free elimination with full pivot
// search over the remaining columns.
inline int rank_int(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c) std::swap(a.at(rank, c), a.at(pivot, c));
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a.at(i, j) = (a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j)) / prev;
            a.at(i, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    return rank;
}

// Exact solution of a nonsingular square system via Cramer's rule on
// Bareiss determinants.  Components come back fully reduced.
inline RationalVector solve_rational(const IntMatrix& m, const std::vector<Int>& rhs) {
    if (m.rows() != m.cols()) raise(ErrorKind::Dimension, "solve on non-square matrix");
    if (static_cast<int>(rhs.size()) != m.rows())
        raise(ErrorKind::Dimension, "right-hand side length mismatch");
    const Int det = det_int(m);
    if (det == 0) raise(ErrorKind::Singular, "singular system");
    RationalVector x(m.cols());
    for (int i = 0; i < m.cols(); ++i)
        x[i] = make_rational(det_int(m.with_column_replaced(i, rhs)), det);
    return x;
}

// Exact solve of an overdetermined system A x = b where A has full column
// rank.  Returns nullopt when the system is inconsistent.  Plain rational
// Gaussian elimination; every matrix here is at most 7x8.
inline std::optional<RationalVector> solve_consistent(const IntMatrix& a,
                                                      const std::vector<Int>& rhs) {
    const int rows = a.rows(), cols = a.cols();
    if (static_cast<int>(rhs.size()) != rows)
        raise(ErrorKind::Dimension, "right-hand side length mismatch");
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) aug[r][c] = Rational(a.at(r, c));
        aug[r][cols] = Rational(rhs[r]);
    }
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(aug[rank], aug[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || aug[r][col] == 0) continue;
            Rational f = aug[r][col] / aug[rank][col];
            for (int c = col; c <= cols; ++c) aug[r][c] -= f * aug[rank][c];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (aug[r][cols] != 0) return std::nullopt;
    if (rank < cols) raise(ErrorKind::Argument, "solve_consistent requires full column rank");
    RationalVector x(cols);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][cols] / aug[r][pivot_col[r]];
    return x;
}

namespace detail {

inline void minor_gcd_rec(const IntMatrix& m, int dim, int start, std::vector<int>& chosen,
                          Int& g) {
    if (static_cast<int>(chosen.size()) == dim) {
        g = gcd_int(g, det_int(m.select_columns(chosen)));
        return;
    }
    for (int c = start; c < m.cols(); ++c) {
        if (m.cols() - c < dim - static_cast<int>(chosen.size())) break;
        chosen.push_back(c);
        minor_gcd_rec(m, dim, c + 1, chosen, g);
        chosen.pop_back();
    }
}

}  // namespace detail

// Index of the sublattice of Z^dim spanned by the given vectors: the gcd of
// all dim x dim minors of the matrix whose columns are the vectors (equal to
// the product of the invariant factors).  nullopt means the span has rank
// below dim, i.e. the index is infinite.
inline std::optional<Int> lattice_index(const std::vector<std::vector<std::int64_t>>& vectors,
                                        int dim) {
    if (dim < 1 || dim > kMaxMatrixDim) raise(ErrorKind::Dimension, "dimension out of range");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            raise(ErrorKind::Dimension, "vector length does not match dimension");
    if (static_cast<int>(vectors.size()) < dim) return std::nullopt;
    if (static_cast<int>(vectors.size()) > kMaxMatrixDim)
        raise(ErrorKind::Dimension, "too many vectors");
    IntMatrix m(dim, static_cast<int>(vectors.size()));
    for (int c = 0; c < static_cast<int>(vectors.size()); ++c)
        for (int r = 0; r < dim; ++r) m.at(r, c) = vectors[c][r];
    Int g = 0;
    std::vector<int> chosen;
    detail::minor_gcd_rec(m, dim, 0, chosen, g);
    if (g == 0) return std::nullopt;
    return abs_int(g);
}

}  // namespace sumcard
