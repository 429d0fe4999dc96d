#pragma once

#include "resultants/assembly.hpp"
#include "resultants/exactla.hpp"
#include "resultants/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace resultants {

enum class HybridVariant {
    a,  // x^{r-2} f_j with J_kappa, |kappa| = r-1 (3|r); x_i f_j with J_k (4|2)
    b,  // x^{r-1} f_j with J_kappa, |kappa| = r-2 (3|r only)
};

namespace detail {

template <class C>
BasicHomPoly<C> leibniz_det(const std::vector<std::vector<BasicHomPoly<C>>>& m, int nvars, int degree)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BasicHomPoly<C> total(nvars, degree);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        BasicHomPoly<C> term = m[0][perm[0]];
        for (std::size_t i = 1; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
        if (term.is_zero()) continue;
        if (inversions % 2 == 0) total += term;
        else total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Multisets k_1 <= ... <= k_m of variable indices, ascending lexicographically.
inline void multisets(int n, int m, int start, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == m) {
        out.push_back(current);
        return;
    }
    for (int k = start; k < n; ++k) {
        current.push_back(k);
        multisets(n, m, k, current, out);
        current.pop_back();
    }
}

}  // namespace detail

inline std::vector<std::vector<int>> index_multisets(int n, int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    detail::multisets(n, m, 0, current, out);
    return out;
}

template <class C>
BasicHomPoly<C> jacobian(const BasicPolySystem<C>& sys)
{
    const int n = sys.nvars();
    std::vector<std::vector<BasicHomPoly<C>>> m;
    int degree = 0;
    for (int i = 0; i < n; ++i) {
        if (sys[i].degree() < 1) throw DegreeError("Jacobian of a constant form");
        degree += sys[i].degree() - 1;
        std::vector<BasicHomPoly<C>> row;
        for (int j = 0; j < n; ++j) row.push_back(sys[i].partial(j));
        m.push_back(std::move(row));
    }
    return detail::leibniz_det(m, n, degree);
}

// The generating determinant det(sum_m (p.d)^m d_j f_i / ((r-1)...(r-m))) in variables (x_1..x_n, p_1..p_n).
template <class C>
BasicHomPoly<C> jacobian_generating(const BasicPolySystem<C>& sys)
{
    if (!sys.equal_degrees()) throw DegreeError("Jacobian-like expansion needs equal degrees");
    const int n = sys.nvars(), r = sys[0].degree();
    if (r < 1) throw DegreeError("Jacobian of a constant form");
    std::vector<BasicHomPoly<C>> p_var;
    for (int k = 0; k < n; ++k) {
        Exponent e(2 * n, 0);
        e[n + k] = 1;
        p_var.push_back(BasicHomPoly<C>::monomial(e, C(1)));
    }
    std::vector<std::vector<BasicHomPoly<C>>> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BasicHomPoly<C> power = sys[i].partial(j).embedded(2 * n, 0);
            BasicHomPoly<C> entry = power;
            Rational falling = 1;
            for (int order = 1; order <= r - 1; ++order) {
                BasicHomPoly<C> next(2 * n, r - 1);
                for (int k = 0; k < n; ++k) {
                    BasicHomPoly<C> d = power.partial(k);
                    if (!d.is_zero()) next += p_var[k] * d;
                }
                power = std::move(next);
                if (power.is_zero()) break;
                falling *= r - order;
                entry += power.scaled(C(Rational(1) / falling));
            }
            m[i].push_back(std::move(entry));
        }
    return detail::leibniz_det(m, 2 * n, n * (r - 1));
}

// J_kappa: the p^alpha coefficient of the generating determinant times alpha!,
// alpha the multiplicity vector of the multiset kappa (0-based indices).
template <class C>
BasicHomPoly<C> jac_like_coeff_from(const BasicHomPoly<C>& generating, int n, const std::vector<int>& kappa)
{
    Exponent alpha(n, 0);
    for (int k : kappa) {
        if (k < 0 || k >= n) throw IndexError("p-variable index out of range");
        ++alpha[k];
    }
    Integer factorial = 1;
    for (int a : alpha)
        for (int t = 2; t <= a; ++t) factorial *= t;
    const C scale{Rational(factorial)};
    BasicHomPoly<C> out(n, generating.degree() - static_cast<int>(kappa.size()));
    for (const auto& [e, c] : generating.terms()) {
        if (!std::equal(alpha.begin(), alpha.end(), e.begin() + n)) continue;
        Exponent x(e.begin(), e.begin() + n);
        out.add_term(x, c * scale);
    }
    return out;
}

template <class C>
BasicHomPoly<C> jac_like_coeff(const BasicPolySystem<C>& sys, const std::vector<int>& kappa)
{
    if (!sys.equal_degrees()) throw DegreeError("Jacobian-like expansion needs equal degrees");
    if (static_cast<int>(kappa.size()) > sys[0].degree() - 1)
        throw RangeError("J index order exceeds the truncation r - 1");
    return jac_like_coeff_from(jacobian_generating(sys), sys.nvars(), kappa);
}

template <class C>
Matrix<C> hybrid_matrix(const BasicPolySystem<C>& sys, HybridVariant variant = HybridVariant::a)
{
    const int n = sys.nvars();
    if (!sys.equal_degrees()) throw ShapeError("hybrid formulas need equal degrees");
    const int r = sys[0].degree();
    int multiplier_degree = 0, j_order = 0;
    if (n == 3 && r >= 2) {
        multiplier_degree = variant == HybridVariant::a ? r - 2 : r - 1;
        j_order = variant == HybridVariant::a ? r - 1 : r - 2;
    } else if (n == 4 && r == 2 && variant == HybridVariant::a) {
        multiplier_degree = 1;
        j_order = 1;
    } else {
        throw ShapeError("no hybrid formula for shape " + std::to_string(n) + "|" + std::to_string(r) +
                         (variant == HybridVariant::b ? " variant b" : ""));
    }
    std::vector<BasicHomPoly<C>> rows;
    for (const auto& s : monomials_of_degree(n, multiplier_degree))
        for (int j = 0; j < n; ++j) rows.push_back(BasicHomPoly<C>::monomial(s, C(1)) * sys[j]);
    const BasicHomPoly<C> generating = jacobian_generating(sys);
    for (const auto& kappa : index_multisets(n, j_order)) rows.push_back(jac_like_coeff_from(generating, n, kappa));
    MonomialBasis basis(n, r + multiplier_degree);
    if (rows.size() != basis.size())
        throw SquarenessError(std::to_string(rows.size()) + " rows against " + std::to_string(basis.size()) + " columns");
    return coefficient_matrix(rows, basis);
}

Rational resultant_hybrid(const PolySystem& sys, HybridVariant variant = HybridVariant::a);

}  // namespace resultants
