#pragma once

#include "resultants/assembly.hpp"
#include "resultants/exactla.hpp"
#include "resultants/polyring.hpp"

#include <vector>

namespace resultants {

// Square Sylvester matrix of two binary forms: x^s f for |s| = r_2 - 1, then x^t g for |t| = r_1 - 1.
template <class C>
Matrix<C> sylvester_matrix(const BasicHomPoly<C>& f, const BasicHomPoly<C>& g)
{
    if (f.nvars() != 2 || g.nvars() != 2) throw DimensionError("Sylvester matrix needs two binary forms");
    if (f.degree() < 1 || g.degree() < 1) throw DegreeError("Sylvester matrix needs positive degrees");
    auto rows = multiples(f, g.degree() - 1);
    for (auto& row : multiples(g, f.degree() - 1)) rows.push_back(std::move(row));
    return coefficient_matrix(rows, MonomialBasis(2, f.degree() + g.degree() - 1));
}

Rational resultant_2(const HomPoly& f, const HomPoly& g);
Rational resultant_2(const PolySystem& sys);

// Equal-degree rectangular matrix of all x^s f_i with |s| = q; rows grouped by equation, then by s.
template <class C>
Matrix<C> generalized_sylvester(const BasicPolySystem<C>& sys, int q)
{
    if (!sys.equal_degrees()) throw DegreeError("generalized Sylvester matrix needs equal degrees");
    if (q < 0) throw DegreeError("negative multiplier degree");
    std::vector<BasicHomPoly<C>> rows;
    for (const auto& f : sys.polys())
        for (auto& row : multiples(f, q)) rows.push_back(std::move(row));
    return coefficient_matrix(rows, MonomialBasis(sys.nvars(), sys[0].degree() + q));
}

// a^{r_2} b^{r_1} prod_{i,j} (beta_j - alpha_i).
Rational resultant_from_roots(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Rational& a, const Rational& b);

// a * prod_i (x_2 - alpha_i x_1), the homogenization matching the root-product sign.
HomPoly binary_form_from_roots(const std::vector<Rational>& roots, const Rational& leading);

}  // namespace resultants
