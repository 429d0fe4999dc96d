#pragma once

#include "resultants/exactla.hpp"
#include "resultants/polyring.hpp"

#include <map>
#include <vector>

namespace resultants {

// Maximal minors of the n x C(n+r-1, r) coefficient matrix, keyed by ascending 1-based column tuples.
struct PluckerTable {
    int n = 0;
    int r = 0;
    std::map<std::vector<int>, Rational> minors;

    // M with any index order; antisymmetric, zero on repeated columns.
    Rational operator()(const std::vector<int>& columns) const;
    Rational operator()(int i, int j) const { return (*this)({i, j}); }
    Rational operator()(int i, int j, int k) const { return (*this)({i, j, k}); }
};

ExactMat coefficient_rows(const PolySystem& sys);

PluckerTable plucker_minors(const PolySystem& sys);

// The single quadratic Plücker relation for 2|3 and 3|2; zero on realizable tables.
Rational plucker_relation(const PluckerTable& t);

// Closed Bezout formulas for 2|1, 2|2, 2|3, before calibration.
Rational bezout_raw(const PluckerTable& t);
Rational resultant_bezout(const PolySystem& sys);

// The 8 x 8 antisymmetric matrix of Plücker coordinates whose Pfaffian is R_{3|2}.
ExactMat pfaffian_matrix_32(const PluckerTable& t);
Rational resultant_pfaffian_32(const PolySystem& sys);

}  // namespace resultants
