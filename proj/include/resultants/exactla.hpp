#pragma once

#include "resultants/errors.hpp"
#include "resultants/rational.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace resultants {

template <class C>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<C> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_) throw ShapeError("entry count does not match the matrix shape");
    }

    static Matrix from_rows(const std::vector<std::vector<C>>& rows)
    {
        std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ShapeError("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = C(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    C& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const C& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<C>& entries() const { return entries_; }

    Matrix submatrix(const std::vector<std::size_t>& row_set, const std::vector<std::size_t>& col_set) const
    {
        Matrix m(row_set.size(), col_set.size());
        for (std::size_t i = 0; i < row_set.size(); ++i)
            for (std::size_t j = 0; j < col_set.size(); ++j) {
                if (row_set[i] >= rows_ || col_set[j] >= cols_) throw IndexError("minor index out of range");
                m(i, j) = (*this)(row_set[i], col_set[j]);
            }
        return m;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw ShapeError("inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const C& aik = a(i, k);
                if (is_zero_entry(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    bool is_zero_matrix() const
    {
        for (const auto& e : entries_)
            if (!is_zero_entry(e)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    static bool is_zero_entry(const C& c)
    {
        using resultants::is_zero;
        return is_zero(c);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<C> entries_;
};

using ExactMat = Matrix<Rational>;
using IndexSet = std::vector<std::size_t>;

// Fraction-free Bareiss elimination on the row-wise denominator-cleared matrix.
Rational det(const ExactMat& m);

// Determinant of rows row_set and columns col_set (0-based, ascending).
Rational minor(const ExactMat& m, const IndexSet& row_set, const IndexSet& col_set);

Rational pfaffian(const ExactMat& m);

std::size_t rank(const ExactMat& m);

// Greedy pivot choice: scanning columns in column_order, keep each column that raises the rank
// of the selected rows; stops once the rank equals the number of rows. Returned ascending.
IndexSet pivot_columns(const ExactMat& m, const IndexSet& row_set, const IndexSet& column_order);

bool is_antisymmetric(const ExactMat& m);

// Division-free determinant by Laplace expansion memoized over column subsets; any commutative ring.
template <class C>
C det_expand(const Matrix<C>& m)
{
    if (!m.square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return C(1);
    if (n > 24) throw RangeError("cofactor expansion limited to 24 columns");
    using Mask = unsigned long;
    // minors[mask] = determinant of the last popcount(mask) rows restricted to the columns in mask.
    std::unordered_map<Mask, C> current, next;
    for (std::size_t j = 0; j < n; ++j) {
        const C& e = m(n - 1, j);
        using resultants::is_zero;
        if (!is_zero(e)) current.emplace(Mask{1} << j, e);
    }
    for (std::size_t level = 2; level <= n; ++level) {
        const std::size_t row = n - level;
        next.clear();
        for (const auto& [mask, value] : current) {
            for (std::size_t j = 0; j < n; ++j) {
                if (mask & (Mask{1} << j)) continue;
                const C& e = m(row, j);
                using resultants::is_zero;
                if (is_zero(e)) continue;
                // Sign of placing column j in front of the columns of mask smaller than j.
                int position = __builtin_popcountl(mask & ((Mask{1} << j) - 1));
                C term = e * value;
                auto key = mask | (Mask{1} << j);
                auto it = next.find(key);
                if (position % 2 == 0) {
                    if (it == next.end()) next.emplace(key, std::move(term));
                    else it->second += term;
                } else {
                    if (it == next.end()) next.emplace(key, -term);
                    else it->second -= term;
                }
            }
        }
        std::swap(current, next);
    }
    auto it = current.find((n == 8 * sizeof(Mask)) ? ~Mask{0} : ((Mask{1} << n) - 1));
    return it == current.end() ? C{} : it->second;
}

namespace detail {

template <class C>
C pfaffian_on(const Matrix<C>& m, std::vector<std::size_t>& active)
{
    if (active.empty()) return C(1);
    const std::size_t first = active.front();
    C total{};
    for (std::size_t k = 1; k < active.size(); ++k) {
        const std::size_t j = active[k];
        using resultants::is_zero;
        if (is_zero(m(first, j))) continue;
        std::vector<std::size_t> rest;
        rest.reserve(active.size() - 2);
        for (std::size_t t = 1; t < active.size(); ++t)
            if (t != k) rest.push_back(active[t]);
        C term = m(first, j) * pfaffian_on(m, rest);
        if (k % 2 == 1) total += term;
        else total -= term;
    }
    return total;
}

}  // namespace detail

// Pfaffian by first-row expansion pf(A) = sum_j (-1)^j A_1j pf(A without rows/cols 1, j); any commutative ring.
template <class C>
C pfaffian_expand(const Matrix<C>& m)
{
    if (!m.square() || m.rows() % 2 != 0) throw ShapeError("Pfaffian needs a square matrix of even size");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == -m(j, i))) throw AntisymmetryError("matrix is not antisymmetric");
    std::vector<std::size_t> active(m.rows());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
    return detail::pfaffian_on(m, active);
}

}  // namespace resultants
