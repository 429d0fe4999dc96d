#include "resultants/sylvester.hpp"

namespace resultants {

Rational resultant_2(const HomPoly& f, const HomPoly& g) { return det(sylvester_matrix(f, g)); }

Rational resultant_2(const PolySystem& sys)
{
    if (sys.nvars() != 2) throw DimensionError("Sylvester resultant needs n = 2");
    return resultant_2(sys[0], sys[1]);
}

Rational resultant_from_roots(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Rational& a, const Rational& b)
{
    Rational result = pow(a, beta.size()) * pow(b, alpha.size());
    for (const auto& ai : alpha)
        for (const auto& bj : beta) result *= bj - ai;
    return result;
}

HomPoly binary_form_from_roots(const std::vector<Rational>& roots, const Rational& leading)
{
    HomPoly p = HomPoly::constant(2, leading);
    for (const auto& root : roots) {
        HomPoly factor(2, 1);
        factor.add_term({0, 1}, Rational(1));
        factor.add_term({1, 0}, -root);
        p = p * factor;
    }
    return p;
}

}  // namespace resultants
