#include "resultants/series.hpp"
#include "resultants/discrim.hpp"
#include "resultants/errors.hpp"
#include "resultants/polyring.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace resultants {

namespace {

unsigned digits_for(int digits)
{
    if (digits < 10) throw DomainError("working precision below 10 digits");
    return static_cast<unsigned>(digits);
}

Real epsilon_real()
{
    // Relative stopping threshold a few digits beyond the working precision.
    return boost::multiprecision::pow(Real(10), -static_cast<long>(Real::default_precision()) - 5);
}

Real digamma(const Rational& x)
{
    Real in = to_real(x);
    Real out;
    mpfr_digamma(out.backend().data(), in.backend().data(), MPFR_RNDN);
    return out;
}

}  // namespace

PrecisionGuard::PrecisionGuard(int digits) : saved_(Real::default_precision())
{
    Real::default_precision(digits_for(digits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real to_real(const Rational& q)
{
    Real num(q.get_num().get_mpz_t());
    Real den(q.get_den().get_mpz_t());
    return num / den;
}

Rational UniSeries::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Real UniSeries::evaluate(const Real& x) const
{
    Real acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + to_real(*it);
    return acc;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b)
{
    UniSeries out(a.var, std::min(a.order, b.order));
    for (int k = 0; k <= out.order; ++k) out[k] = a[k] + b[k];
    return out;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b)
{
    UniSeries out(a.var, std::min(a.order, b.order));
    for (int i = 0; i <= out.order; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; i + j <= out.order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<std::string> coefficient_strings(const UniSeries& s)
{
    std::vector<std::string> out;
    out.reserve(s.coeffs.size());
    for (const auto& c : s.coeffs) out.push_back(to_string(c));
    return out;
}

MultiSeries::MultiSeries(std::vector<std::string> v, std::vector<int> lo, std::vector<int> hi)
    : vars(std::move(v)), lower(std::move(lo)), upper(std::move(hi))
{
    if (lower.size() != vars.size() || upper.size() != vars.size()) throw DimensionError("series bounds do not match the variables");
}

void MultiSeries::add(const std::vector<int>& e, const Rational& c)
{
    if (e.size() != vars.size()) throw DimensionError("series exponent length mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < lower[i] || e[i] > upper[i]) return;
    if (resultants::is_zero(c)) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (resultants::is_zero(it->second)) terms.erase(it);
    }
}

MultiSeries MultiSeries::derivative(int var) const
{
    MultiSeries out = *this;
    out.terms.clear();
    const auto v = static_cast<std::size_t>(var);
    --out.lower.at(v);
    --out.upper.at(v);
    for (const auto& [e, c] : terms) {
        if (e[v] == 0) continue;
        auto d = e;
        --d[v];
        out.add(d, c * e[v]);
    }
    return out;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b)
{
    if (a.vars != b.vars) throw DimensionError("series over different variables");
    MultiSeries out(a.vars, a.lower, a.upper);
    for (std::size_t i = 0; i < a.vars.size(); ++i) {
        out.lower[i] = std::min(a.lower[i], b.lower[i]);
        out.upper[i] = std::max(a.upper[i], b.upper[i]);
    }
    for (const auto& [e, c] : a.terms) out.add(e, c);
    for (const auto& [e, c] : b.terms) out.add(e, -c);
    return out;
}

Rational pochhammer(const Rational& a, int k)
{
    Rational out(1);
    for (int j = 0; j < k; ++j) out *= a + j;
    return out;
}

UniSeries pochhammer_2f1(const Rational& a, const Rational& b, const Rational& c, int order)
{
    if (order < 0) throw RangeError("negative series order");
    if (c.get_den() == 1 && sgn(c) <= 0 && -c < order)
        throw PoleError("lower parameter " + to_string(c) + " meets a pole within the truncation");
    UniSeries out("z", order);
    Rational term(1);
    out[0] = term;
    for (int k = 0; k < order; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1));
        out[k + 1] = term;
    }
    return out;
}

Real hypergeometric_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b, const Real& z)
{
    for (const auto& bj : b)
        if (bj.get_den() == 1 && sgn(bj) <= 0) throw PoleError("non-positive integer lower parameter");
    if (a.size() > b.size() + 1) throw DomainError("divergent hypergeometric series");
    if (a.size() == b.size() + 1 && abs(z) >= 1) throw DomainError("hypergeometric argument outside the unit disc");
    const Real tol = epsilon_real();
    Real sum = 1;
    Real term = 1;
    for (long k = 0;; ++k) {
        Rational ratio(1);
        for (const auto& ai : a) ratio *= ai + k;
        for (const auto& bj : b) ratio /= bj + k;
        ratio /= k + 1;
        if (is_zero(ratio)) break;
        term *= to_real(ratio) * z;
        sum += term;
        if (abs(term) <= tol * abs(sum) && k > 4) break;
        if (k > 10'000'000) throw DomainError("hypergeometric series failed to converge");
    }
    return sum;
}

LogSplit hypergeometric_2f1_balanced(const Rational& a, const Rational& b, const Real& z)
{
    const Real w = 1 - z;
    if (w < 0 || w >= 1) throw DomainError("balanced expansion needs 0 < z <= 1");
    const Rational c = a + b;
    const Real prefactor = boost::multiprecision::tgamma(to_real(c))
                           / (boost::multiprecision::tgamma(to_real(a)) * boost::multiprecision::tgamma(to_real(b)));
    const Real tol = epsilon_real();
    Real psi_one = digamma(Rational(1));
    Real psi_a = digamma(a);
    Real psi_b = digamma(b);
    Real regular = 0;
    Real log_coefficient = 0;
    Real weight = 1;  // (a)_n (b)_n / (n!)^2 w^n
    for (long n = 0;; ++n) {
        regular += weight * (2 * psi_one - psi_a - psi_b);
        log_coefficient += weight;
        if (w == 0) break;
        Rational ratio = (a + n) * (b + n) / Rational((n + 1) * (n + 1));
        psi_one += Real(1) / (n + 1);
        psi_a += 1 / to_real(a + n);
        psi_b += 1 / to_real(b + n);
        weight *= to_real(ratio) * w;
        if (abs(weight) <= tol && n > 4) break;
        if (n > 10'000'000) throw DomainError("balanced expansion failed to converge");
    }
    return {prefactor * regular, prefactor * log_coefficient};
}

UniSeries area_series_quartic(int order)
{
    if (order < 0) throw RangeError("negative series order");
    // (1 + eps s^2 / 4)^(-1/2) with s = sin(2 phi); the mean of s^(2k) is binom(2k, k) / 4^k.
    UniSeries out("eps", order);
    for (int k = 0; k <= order; ++k) {
        Integer central;
        mpz_bin_uiui(central.get_mpz_t(), 2UL * static_cast<unsigned long>(k), static_cast<unsigned long>(k));
        Integer denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 64, static_cast<unsigned long>(k));
        Rational c(central * central, denom);
        c.canonicalize();
        out[k] = (k % 2 == 0) ? c : Rational(-c);
    }
    return out;
}

J24Branches j24_branches(const Rational& eps, int digits)
{
    PrecisionGuard guard(digits);
    const HomPoly form = make_poly(2, 4, {{{4, 0}, Rational(1)}, {{2, 2}, Rational(2) + eps}, {{0, 4}, Rational(1)}});
    const Rational i2 = invariant(form, InvariantTag::i2_24);
    const Rational i3 = invariant(form, InvariantTag::i3_24);
    if (sgn(i2) <= 0) throw DomainError("I2 must be positive for the real branches");
    const Rational zq = 6 * i3 * i3 / (i2 * i2 * i2);
    if (zq > 1 || zq <= -1) throw DomainError("hypergeometric argument " + to_string(zq) + " outside the convergence region");

    namespace bm = boost::multiprecision;
    const Real z = to_real(zq);
    const Real i2r = to_real(i2);
    const Real s1 = bm::pow(i2r, Real(-1) / 4);
    const Real s2 = to_real(i3) * bm::pow(i2r, Real(-7) / 4);
    const Real six = 6;
    const Real w1 = bm::pow(six, Real(-1) / 4) * bm::tgamma(Real(3) / 2) / (bm::tgamma(Real(7) / 12) * bm::tgamma(Real(11) / 12));
    const Real w2 = bm::pow(six, Real(1) / 4) * bm::tgamma(Real(1) / 2) / (bm::tgamma(Real(1) / 12) * bm::tgamma(Real(5) / 12));

    J24Branches out;
    out.z = z;
    const Rational a1(1, 12), b1(5, 12), a2(7, 12), b2(11, 12);
    if (zq <= Rational(1, 2)) {
        out.j1 = s1 * hypergeometric_pfq({a1, b1}, {Rational(1, 2)}, z);
        out.j2 = s2 * hypergeometric_pfq({a2, b2}, {Rational(3, 2)}, z);
        out.regular = w1 * out.j1 - w2 * out.j2;
        return out;
    }
    const LogSplit f1 = hypergeometric_2f1_balanced(a1, b1, z);
    const LogSplit f2 = hypergeometric_2f1_balanced(a2, b2, z);
    const Real w = 1 - z;
    if (w == 0) {
        // Each branch diverges logarithmically at z = 1; only the combination has a limit.
        const Real inf = std::numeric_limits<Real>::infinity();
        out.j1 = inf;
        out.j2 = inf;
        out.regular = w1 * s1 * f1.regular - w2 * s2 * f2.regular;
        return out;
    }
    const Real lw = bm::log(w);
    out.j1 = s1 * (f1.regular - f1.log_coefficient * lw);
    out.j2 = s2 * (f2.regular - f2.log_coefficient * lw);
    out.regular = w1 * s1 * f1.regular - w2 * s2 * f2.regular - (w1 * s1 * f1.log_coefficient - w2 * s2 * f2.log_coefficient) * lw;
    return out;
}

Real j24_regular_branch(const Rational& eps, int digits)
{
    PrecisionGuard guard(digits);
    return j24_branches(eps, digits).regular;
}

VolumeResult volume_4d(const Rational& a, const Rational& b, const Rational& c, const Rational& hbar, int digits)
{
    if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0 || sgn(hbar) <= 0) throw DomainError("volume needs positive a, b, c and hbar");
    PrecisionGuard guard(digits);
    namespace bm = boost::multiprecision;
    const Real pi = bm::acos(Real(-1));
    const Real value = pi * pi / bm::sqrt(to_real(a)) * to_real(hbar) / bm::sqrt(to_real(b) + 2 * bm::sqrt(to_real(a * c)));
    return {value, true};
}

Integer root_series_coefficient(int r, int k)
{
    Integer num, kf, den;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(r) * static_cast<unsigned long>(k));
    mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>((r - 1) * k + 1));
    return num / (kf * den);
}

UniSeries root_series_fixed_point(int r, int terms)
{
    if (r < 2) throw DegreeError("root series needs r >= 2");
    if (terms < 1) throw RangeError("root series needs at least one term");
    const int order = (r - 1) * (terms - 1) + 1;
    UniSeries c("c", order);
    c[1] = 1;
    UniSeries x("c", order);
    // Each pass fixes at least one more coefficient.
    for (int pass = 0; pass <= order; ++pass) {
        UniSeries power = x;
        for (int j = 1; j < r; ++j) power = power * x;
        UniSeries next("c", order);
        for (int k = 0; k <= order; ++k) next[k] = -(c[k] + power[k]);
        if (next.coeffs == x.coeffs) break;
        x = std::move(next);
    }
    return x;
}

MultiSeries quadratic_root_series(const UniSeries& x_of_c, RootBranch branch)
{
    const int order = x_of_c.order;
    MultiSeries out({"f0", "f1", "f2"}, {0, -(2 * order - 1), -1}, {order, 1, order});
    // (f1/f2) c^m = f0^m f1^(1-2m) f2^(m-1)
    for (int m = 0; m <= order; ++m) {
        Rational coeff = x_of_c[m];
        if (branch == RootBranch::large) coeff = -coeff - (m == 0 ? 1 : 0);
        out.add({m, 1 - 2 * m, m - 1}, coeff);
    }
    return out;
}

MultiSeries ward_operator(const MultiSeries& lambda, int order)
{
    MultiSeries residual = lambda.derivative(0).derivative(2) - lambda.derivative(1).derivative(1);
    for (auto it = residual.terms.begin(); it != residual.terms.end();) {
        if (it->first[0] > order) it = residual.terms.erase(it);
        else ++it;
    }
    residual.upper[0] = std::min(residual.upper[0], order);
    return residual;
}

MultiSeries ward_residual_quadratic(int order, RootBranch branch)
{
    if (order < 2) throw RangeError("Ward residual needs order >= 2");
    return ward_operator(quadratic_root_series(root_series_fixed_point(2, order + 1), branch), order);
}

}  // namespace resultants
