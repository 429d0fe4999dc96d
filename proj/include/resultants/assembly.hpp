#pragma once

#include "resultants/exactla.hpp"
#include "resultants/polyring.hpp"

#include <vector>

namespace resultants {

// Row i holds the coefficients of rows[i] in the graded-lex basis of the given degree.
template <class C>
Matrix<C> coefficient_matrix(const std::vector<BasicHomPoly<C>>& rows, const MonomialBasis& basis)
{
    Matrix<C> m(rows.size(), basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].degree() != basis.degree() || rows[i].nvars() != basis.nvars())
            throw DegreeError("row polynomial does not live in the column basis");
        for (const auto& [e, c] : rows[i].terms()) m(i, basis.index_of(e)) = c;
    }
    return m;
}

// All products x^s * f for s running over the graded-lex monomials of degree q.
template <class C>
std::vector<BasicHomPoly<C>> multiples(const BasicHomPoly<C>& f, int q)
{
    std::vector<BasicHomPoly<C>> out;
    for (const auto& s : monomials_of_degree(f.nvars(), q)) out.push_back(BasicHomPoly<C>::monomial(s, C(1)) * f);
    return out;
}

}  // namespace resultants
