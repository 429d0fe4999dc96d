#include "resultants/bezout.hpp"
#include "resultants/assembly.hpp"
#include "resultants/calibration.hpp"

#include <algorithm>

namespace resultants {

Rational PluckerTable::operator()(const std::vector<int>& columns) const
{
    std::vector<int> sorted = columns;
    int sign = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j)
            if (sorted[j] > sorted[j + 1]) {
                std::swap(sorted[j], sorted[j + 1]);
                sign = -sign;
            }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
    auto it = minors.find(sorted);
    if (it == minors.end()) throw IndexError("Plücker coordinate out of range");
    return sign > 0 ? it->second : Rational(-it->second);
}

ExactMat coefficient_rows(const PolySystem& sys)
{
    if (!sys.equal_degrees()) throw DegreeError("Plücker coordinates need equal degrees");
    return coefficient_matrix(sys.polys(), MonomialBasis(sys.nvars(), sys[0].degree()));
}

PluckerTable plucker_minors(const PolySystem& sys)
{
    ExactMat c = coefficient_rows(sys);
    PluckerTable t;
    t.n = sys.nvars();
    t.r = sys[0].degree();
    const int n = t.n, m = static_cast<int>(c.cols());
    IndexSet rows(n);
    for (int i = 0; i < n; ++i) rows[i] = static_cast<std::size_t>(i);
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    if (n > m) return t;
    while (true) {
        IndexSet cols(pick.begin(), pick.end());
        std::vector<int> key(n);
        for (int i = 0; i < n; ++i) key[i] = pick[i] + 1;
        t.minors.emplace(std::move(key), minor(c, rows, cols));
        int i = n - 1;
        while (i >= 0 && pick[i] == m - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return t;
}

Rational plucker_relation(const PluckerTable& M)
{
    if (M.n == 2 && M.r == 3) return M(1, 2) * M(3, 4) - M(1, 3) * M(2, 4) + M(1, 4) * M(2, 3);
    if (M.n == 3 && M.r == 2)
        return M(1, 2, 3) * M(4, 5, 6) - M(1, 2, 4) * M(3, 5, 6) + M(1, 2, 5) * M(3, 4, 6) - M(1, 2, 6) * M(3, 4, 5) +
               M(1, 3, 4) * M(2, 5, 6) - M(1, 3, 5) * M(2, 4, 6) + M(1, 3, 6) * M(2, 4, 5) + M(1, 4, 5) * M(2, 3, 6) -
               M(1, 4, 6) * M(2, 3, 5) + M(1, 5, 6) * M(2, 3, 4);
    throw ShapeError("a single Plücker relation exists only for 2|3 and 3|2");
}

Rational bezout_raw(const PluckerTable& M)
{
    if (M.n != 2) throw ShapeError("closed Bezout formulas cover n = 2 only");
    switch (M.r) {
    case 1:
        return M(1, 2);
    case 2:
        return M(1, 2) * M(2, 3) - M(1, 3) * M(1, 3);
    case 3: {
        ExactMat b = ExactMat::from_rows({{M(1, 2), M(1, 3), M(1, 4)},
                                          {M(1, 3), M(1, 4) + M(2, 3), M(2, 4)},
                                          {M(1, 4), M(2, 4), M(3, 4)}});
        return det(b);
    }
    default:
        throw ShapeError("closed Bezout formulas cover degrees 1, 2, 3");
    }
}

Rational resultant_bezout(const PolySystem& sys)
{
    if (sys.nvars() != 2 || !sys.equal_degrees() || sys[0].degree() < 1 || sys[0].degree() > 3)
        throw ShapeError("Bezout formula needs shape 2|1, 2|2 or 2|3, got " + shape_label(sys));
    const int r = sys[0].degree();
    Rational raw = bezout_raw(plucker_minors(sys));
    return raw / reference_constant("bezout", {2, r}, [&]() -> Rational { return bezout_raw(plucker_minors(reference_system({r, r}))); });
}

ExactMat pfaffian_matrix_32(const PluckerTable& t)
{
    if (t.n != 3 || t.r != 2) throw ShapeError("the Pfaffian formula is for 3|2");
    auto M = [&](int label) { return t(label / 100, label / 10 % 10, label % 10); };
    // Upper triangle, row by row; the lower triangle is its negative.
    const std::vector<std::vector<Rational>> upper = {
        {M(356), M(456), M(246), M(156), M(146), M(256), M(346)},
        {-M(346), M(146), M(136), M(126), M(236), M(156) - M(236)},
        {M(245), M(146), M(145), M(246), M(345)},
        {M(134), M(124), M(234) - M(145), -M(234)},
        {M(123), -M(126), M(126) - M(135)},
        {M(134) - M(125), -M(134)},
        {M(146) - M(235)},
    };
    ExactMat a(8, 8);
    for (std::size_t i = 0; i < upper.size(); ++i)
        for (std::size_t k = 0; k < upper[i].size(); ++k) {
            const std::size_t j = i + 1 + k;
            a(i, j) = upper[i][k];
            a(j, i) = -upper[i][k];
        }
    return a;
}

Rational resultant_pfaffian_32(const PolySystem& sys)
{
    if (sys.nvars() != 3 || !sys.equal_degrees() || sys[0].degree() != 2)
        throw ShapeError("Pfaffian formula needs shape 3|2, got " + shape_label(sys));
    Rational raw = pfaffian(pfaffian_matrix_32(plucker_minors(sys)));
    return raw / reference_constant("pfaffian", {3, 2}, []() -> Rational {
        return pfaffian(pfaffian_matrix_32(plucker_minors(reference_system({2, 2, 2}))));
    });
}

}  // namespace resultants
