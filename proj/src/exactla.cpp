#include "resultants/exactla.hpp"

#include "resultants/bitmeter.hpp"

#include <algorithm>

namespace resultants {

namespace {

struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> a;
    Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

// Scales each row by the lcm of its denominators; returns the product of the scales.
Integer clear_denominators(const ExactMat& m, const IndexSet& row_set, const IndexSet& col_set, IntegerMatrix& out)
{
    out.rows = row_set.size();
    out.cols = col_set.size();
    out.a.assign(out.rows * out.cols, Integer(0));
    Integer cleared = 1;
    for (std::size_t i = 0; i < out.rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < out.cols; ++j) {
            const Rational& q = m(row_set[i], col_set[j]);
            if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < out.cols; ++j) {
            const Rational& q = m(row_set[i], col_set[j]);
            if (sgn(q) == 0) continue;
            out.at(i, j) = q.get_num() * (l / q.get_den());
        }
        cleared *= l;
    }
    return cleared;
}

IndexSet iota_set(std::size_t n)
{
    IndexSet s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i;
    return s;
}

Integer bareiss_det(IntegerMatrix& a)
{
    const std::size_t n = a.rows;
    if (n == 0) return 1;
    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a.at(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(a.at(swap_row, k)) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        const Integer& pivot = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& target = a.at(i, j);
                target *= pivot;
                mpz_submul(target.get_mpz_t(), a.at(i, k).get_mpz_t(), a.at(k, j).get_mpz_t());
                mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        BitMeter::note(pivot);
        previous = pivot;
    }
    Integer result = a.at(n - 1, n - 1);
    BitMeter::note(result);
    return sign < 0 ? Integer(-result) : result;
}

}  // namespace

Rational minor(const ExactMat& m, const IndexSet& row_set, const IndexSet& col_set)
{
    if (row_set.size() != col_set.size()) throw ShapeError("minor needs as many rows as columns");
    for (std::size_t i : row_set)
        if (i >= m.rows()) throw IndexError("minor row out of range");
    for (std::size_t j : col_set)
        if (j >= m.cols()) throw IndexError("minor column out of range");
    IntegerMatrix a;
    Integer cleared = clear_denominators(m, row_set, col_set, a);
    Rational result(bareiss_det(a), cleared);
    result.canonicalize();
    return result;
}

Rational det(const ExactMat& m)
{
    if (!m.square()) throw ShapeError("determinant of a non-square matrix");
    return minor(m, iota_set(m.rows()), iota_set(m.cols()));
}

namespace {

// Row-echelon rank scan over the chosen rows, columns visited in the given order.
IndexSet rank_scan(const ExactMat& m, const IndexSet& row_set, const IndexSet& column_order)
{
    IntegerMatrix a;
    clear_denominators(m, row_set, iota_set(m.cols()), a);
    const std::size_t nrows = a.rows;
    IndexSet chosen;
    std::vector<bool> used(nrows, false);
    // Fraction-free elimination, one pivot per accepted column.
    for (std::size_t col : column_order) {
        if (chosen.size() == nrows) break;
        std::size_t pivot_row = nrows;
        for (std::size_t i = 0; i < nrows; ++i)
            if (!used[i] && sgn(a.at(i, col)) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row == nrows) continue;
        used[pivot_row] = true;
        chosen.push_back(col);
        const Integer pivot = a.at(pivot_row, col);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (used[i] || sgn(a.at(i, col)) == 0) continue;
            const Integer factor = a.at(i, col);
            Integer g;
            mpz_gcd(g.get_mpz_t(), factor.get_mpz_t(), pivot.get_mpz_t());
            const Integer down = pivot / g, across = factor / g;
            for (std::size_t j = 0; j < a.cols; ++j) {
                Integer& target = a.at(i, j);
                target *= down;
                mpz_submul(target.get_mpz_t(), across.get_mpz_t(), a.at(pivot_row, j).get_mpz_t());
            }
            Integer content = 0;
            for (std::size_t j = 0; j < a.cols; ++j) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.at(i, j).get_mpz_t());
            if (content > 1)
                for (std::size_t j = 0; j < a.cols; ++j) mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), content.get_mpz_t());
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

std::size_t rank(const ExactMat& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rank_scan(m, iota_set(m.rows()), iota_set(m.cols())).size();
}

IndexSet pivot_columns(const ExactMat& m, const IndexSet& row_set, const IndexSet& column_order)
{
    return rank_scan(m, row_set, column_order);
}

bool is_antisymmetric(const ExactMat& m)
{
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

Rational pfaffian(const ExactMat& m)
{
    if (!m.square()) throw ShapeError("Pfaffian of a non-square matrix");
    if (m.rows() % 2 != 0) throw ShapeError("Pfaffian of an odd-dimensional matrix");
    if (!is_antisymmetric(m)) throw AntisymmetryError("matrix is not antisymmetric");
    return pfaffian_expand(m);
}

}  // namespace resultants
