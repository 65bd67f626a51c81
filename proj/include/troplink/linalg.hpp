/**
 * Dense exact rational matrices with fraction-free rank, plus the reduced
 * row echelon utilities (null spaces, linear solves, canonical reduction
 * modulo a subspace) used by the polyhedral code.
 *
 * Rank uses Bareiss elimination on a denominator-cleared integer copy with
 * deterministic pivoting (first nonzero in row-major order), so results are
 * bit-reproducible and intermediate entries stay single-minor sized. No
 * machine-word arithmetic anywhere.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "troplink/numbers.hpp"

namespace troplink {

class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static RationalMatrix from_rows(const std::vector<RatVector>& rows,
                                    std::size_t cols_if_empty = 0) {
        std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        RationalMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("RationalMatrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static RationalMatrix from_int_rows(const std::vector<IntVector>& rows,
                                        std::size_t cols_if_empty = 0) {
        std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        RationalMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("RationalMatrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RationalMatrix multiply(const RationalMatrix& other) const {
        if (cols_ != other.rows_)
            throw std::invalid_argument("RationalMatrix: dimension mismatch in multiply");
        RationalMatrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    const Rat& b = other(k, j);
                    if (b != 0) out(i, j) += a * b;
                }
            }
        return out;
    }

    bool is_zero() const {
        for (const Rat& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

/** Rank over Q of a set of integer rows, by fraction-free Bareiss elimination. */
inline std::size_t rank_int_rows(std::vector<IntVector> a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::size_t rk = 0, row = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        const Int& p = a[row][col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            const Int f = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                // Exact division by Sylvester's determinant identity; entries
                // stay minor-sized. Zero entries stay zero when f is zero.
                if (f == 0) {
                    if (a[i][j] != 0) a[i][j] = (p * a[i][j]) / prev;
                } else {
                    a[i][j] = (p * a[i][j] - f * a[row][j]) / prev;
                }
            }
            a[i][col] = 0;
        }
        prev = p;
        ++row;
        ++rk;
    }
    return rk;
}

/** Rank over Q, exact. Empty matrices have rank 0. */
inline std::size_t rank(const RationalMatrix& m) {
    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<IntVector> a(m.rows(), IntVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, denominator(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    return rank_int_rows(std::move(a), m.cols());
}

/** Reduced row echelon form over Q (pivot entries 1, pivot columns cleared). */
struct RowEchelon {
    std::vector<RatVector> rows;   // nonzero rows only
    std::vector<std::size_t> pivot_cols;  // one per row, strictly increasing
};

inline RowEchelon rref(std::vector<RatVector> a, std::size_t cols) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[row], a[piv]);
        const Rat p = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    a.resize(row);
    out.rows = std::move(a);
    return out;
}

inline RowEchelon rref_int(const std::vector<IntVector>& a, std::size_t cols) {
    std::vector<RatVector> q;
    q.reserve(a.size());
    for (const IntVector& r : a) q.push_back(to_rat(r));
    return rref(std::move(q), cols);
}

/**
 * Primitive integer basis of the null space {x : M x = 0} of the matrix with
 * the given rows. Deterministic (free variables in increasing column order).
 */
inline std::vector<IntVector> null_space_int(const std::vector<IntVector>& rows,
                                             std::size_t cols) {
    RowEchelon re = rref_int(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : re.pivot_cols) is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        RatVector v(cols, Rat(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < re.rows.size(); ++r)
            v[re.pivot_cols[r]] = -re.rows[r][fc];
        basis.push_back(to_primitive_int(v));
    }
    return basis;
}

/**
 * Coefficients c with sum_i c_i * generators_i = target, if any (free
 * coefficients set to 0). Works for any number of generators.
 */
inline std::optional<RatVector> solve_combination(const std::vector<RatVector>& generators,
                                                  const RatVector& target) {
    const std::size_t dim = target.size();
    const std::size_t k = generators.size();
    // Augmented system [G | target] with generators as columns.
    std::vector<RatVector> aug(dim, RatVector(k + 1, Rat(0)));
    for (std::size_t j = 0; j < k; ++j) {
        if (generators[j].size() != dim)
            throw std::invalid_argument("solve_combination: length mismatch");
        for (std::size_t i = 0; i < dim; ++i) aug[i][j] = generators[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) aug[i][k] = target[i];
    RowEchelon re = rref(std::move(aug), k + 1);
    RatVector c(k, Rat(0));
    for (std::size_t r = 0; r < re.rows.size(); ++r) {
        if (re.pivot_cols[r] == k) return std::nullopt;  // inconsistent
        c[re.pivot_cols[r]] = re.rows[r][k];
    }
    return c;
}

inline std::optional<RatVector> solve_combination_int(const std::vector<IntVector>& generators,
                                                      const RatVector& target) {
    std::vector<RatVector> g;
    g.reserve(generators.size());
    for (const IntVector& v : generators) g.push_back(to_rat(v));
    return solve_combination(g, target);
}

/**
 * Canonical representative of v modulo the rational span of `subspace`:
 * subtracts the unique combination that zeroes v on the subspace's pivot
 * coordinates. Returns the zero vector iff v lies in the span.
 */
inline RatVector reduce_mod_subspace(const RatVector& v, const RowEchelon& subspace) {
    RatVector out = v;
    for (std::size_t r = 0; r < subspace.rows.size(); ++r) {
        const Rat f = out[subspace.pivot_cols[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= f * subspace.rows[r][j];
    }
    return out;
}

inline bool in_span(const IntVector& v, const RowEchelon& subspace) {
    return troplink::is_zero(reduce_mod_subspace(to_rat(v), subspace));
}

}  // namespace troplink
