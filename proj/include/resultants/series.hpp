#pragma once

#include "resultants/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <string>
#include <vector>

namespace resultants {

using Real = boost::multiprecision::mpfr_float;

// Sets the mpfr default precision (in decimal digits) for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rational& q);

// Truncated power series sum_{k <= order} coeffs[k] var^k with exact coefficients.
struct UniSeries {
    std::string var = "x";
    int order = 0;
    std::vector<Rational> coeffs;

    UniSeries() : coeffs(1) {}
    UniSeries(std::string v, int ord) : var(std::move(v)), order(ord), coeffs(static_cast<std::size_t>(ord) + 1) {}

    const Rational& operator[](int k) const { return coeffs.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return coeffs.at(static_cast<std::size_t>(k)); }

    Rational evaluate(const Rational& x) const;
    Real evaluate(const Real& x) const;
};

UniSeries operator+(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const UniSeries& a, const UniSeries& b);  // truncated at min(order)
std::vector<std::string> coefficient_strings(const UniSeries& s);

// Laurent polynomial in several variables; terms outside [lower, upper] are dropped.
struct MultiSeries {
    std::vector<std::string> vars;
    std::vector<int> lower;
    std::vector<int> upper;
    std::map<std::vector<int>, Rational> terms;

    MultiSeries() = default;
    MultiSeries(std::vector<std::string> v, std::vector<int> lo, std::vector<int> hi);

    void add(const std::vector<int>& e, const Rational& c);
    MultiSeries derivative(int var) const;
    bool is_zero() const { return terms.empty(); }
};

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);

Rational pochhammer(const Rational& a, int k);

UniSeries pochhammer_2f1(const Rational& a, const Rational& b, const Rational& c, int order);

// Sum of the generalized hypergeometric series pFq(a; b | z); requires |z| < 1 when p = q + 1.
Real hypergeometric_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b, const Real& z);

// 2F1(a, b; a + b | z) for 0 <= 1 - z < 1, split as A - B log(1 - z).
struct LogSplit {
    Real regular;
    Real log_coefficient;
};
LogSplit hypergeometric_2f1_balanced(const Rational& a, const Rational& b, const Real& z);

// V(eps)/pi for the curve (x^2 + y^2)^2 + eps x^2 y^2 = 1.
UniSeries area_series_quartic(int order);

struct J24Branches {
    Real z;
    Real j1;
    Real j2;
    Real regular;
};

// Both hypergeometric branches of the 2|4 integral discriminant on (x^2 + y^2)^2 + eps x^2 y^2
// and their combination regular at eps = 0; 4 pi times `regular` is the area V(eps).
J24Branches j24_branches(const Rational& eps, int digits = 50);
Real j24_regular_branch(const Rational& eps, int digits = 50);

struct VolumeResult {
    Real value;
    bool closed_form = true;
};

// Volume enclosed by a rho^4 + b rho^2 t^2 + c t^4 = hbar in four dimensions (rho the radius in R^3).
VolumeResult volume_4d(const Rational& a, const Rational& b, const Rational& c, const Rational& hbar, int digits = 50);

// Small root of x^r + x + c = 0 as a series in c, with `terms` nonzero coefficients
// (truncation order (r - 1)(terms - 1) + 1).
UniSeries root_series_fixed_point(int r, int terms);

// (rk)! / (k! ((r-1)k + 1)!)
Integer root_series_coefficient(int r, int k);

enum class RootBranch { small, large };

// lambda(f0, f1, f2) solving f0 + f1 lambda + f2 lambda^2 = 0, built from the root series x(c)
// of x^2 + x + c via lambda = (f1/f2) x(f0 f2 / f1^2), or the other root.
MultiSeries quadratic_root_series(const UniSeries& x_of_c, RootBranch branch);

// (d0 d2 - d1 d1) lambda, terms of f0-degree up to `order`.
MultiSeries ward_operator(const MultiSeries& lambda, int order);

MultiSeries ward_residual_quadratic(int order, RootBranch branch = RootBranch::small);

}  // namespace resultants
