// One PASS/FAIL line per acceptance criterion; exit status 0 only when all pass.
#include "oracles.hpp"

#include "resultants/bezout.hpp"
#include "resultants/crosscheck.hpp"
#include "resultants/discrim.hpp"
#include "resultants/hybrid.hpp"
#include "resultants/koszul.hpp"
#include "resultants/pipeline.hpp"
#include "resultants/schurtrace.hpp"
#include "resultants/series.hpp"
#include "resultants/sylvester.hpp"
#include "resultants/sympoly.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>

using namespace resultants;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass) detail << "failed: ";
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Real abs_real(const Real& x) { return x < 0 ? Real(-x) : x; }

// Exponent k with ratio = base^k exactly, or -1.
long exact_exponent(const Rational& ratio, long base)
{
    Rational x = ratio;
    long k = 0;
    while (x > 1 && x.get_den() == 1 && x.get_num() % base == 0) {
        x /= base;
        ++k;
    }
    return x == 1 ? k : -1;
}

void criterion_1(Verdict& v)
{
    const auto start = std::chrono::steady_clock::now();
    const SymPoly a = SymPoly::variable(0), b = SymPoly::variable(1), c = SymPoly::variable(2), d = SymPoly::variable(3);
    BasicHomPoly<SymPoly> p(2, 3);
    p.add_term({3, 0}, a);
    p.add_term({2, 1}, b);
    p.add_term({1, 2}, c);
    p.add_term({0, 3}, d);
    auto g = gradient_system(p);
    SymPoly disc = det_expand(sylvester_matrix(g[0], g[1]));
    const Rational scale = Rational(1) / Rational(gradient_normalization(2, 3));
    disc = disc * SymPoly(scale);
    // Fermat calibration: the value at x^3 + y^3 must be positive.
    if (disc.evaluate({1, 0, 0, 1}) < 0) disc = -disc;
    const SymPoly expected = SymPoly(27) * a * a * d * d - b * b * c * c - SymPoly(18) * a * b * c * d + SymPoly(4) * a * c * c * c + SymPoly(4) * b * b * b * d;
    const double t = seconds_since(start);
    v.require(disc == expected, "symbolic binary cubic discriminant differs");
    v.require(disc.term_count() == 5, "expected 5 terms");
    v.require(t < 1.0, "runtime " + std::to_string(t) + " s");
    v.detail << (v.pass ? "" : " ") << "5 terms, " << t << " s";
}

void criterion_2(Verdict& v)
{
    struct Shape {
        std::vector<int> degrees;
        int count;
        std::vector<Method> methods;
    };
    const std::vector<Shape> shapes{
        {{2, 2}, 200, {}}, {{2, 3}, 200, {}}, {{2, 4}, 200, {}}, {{2, 2, 2}, 200, {}}, {{3, 3, 3}, 200, {}},
        {{2, 2, 2, 2}, 50, {Method::koszul, Method::hybrid}},
    };
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t seed = 20240;
    for (const auto& s : shapes) {
        const CrossRun run = cross_validate_random(s.degrees, s.count, seed++, s.methods);
        v.require(run.checked == s.count, run.shape + " checked " + std::to_string(run.checked));
        v.require(run.mismatches == 0, run.shape + " has " + std::to_string(run.mismatches) + " mismatches");
        for (const auto& f : run.failures) std::cerr << f.summary() << '\n';
        v.detail << run.shape << ' ' << run.checked << " ok (rejected " << run.rejected << "), ";
    }
    v.detail << seconds_since(start) << " s";
}

void criterion_3(Verdict& v)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<BasicHomPoly<SymPoly>> polys;
    int var = 0;
    for (int i = 0; i < 3; ++i) {
        BasicHomPoly<SymPoly> f(3, 2);
        for (const auto& e : monomials_of_degree(3, 2)) f.add_term(e, SymPoly::variable(var++));
        polys.push_back(f);
    }
    const SymPoly r32 = det_expand(hybrid_matrix(BasicPolySystem<SymPoly>(polys)));
    v.require(r32.term_count() == 21894, "R_{3|2} has " + std::to_string(r32.term_count()) + " monomials");

    BasicHomPoly<SymPoly> cubic(3, 3);
    var = 0;
    for (const auto& e : monomials_of_degree(3, 3)) cubic.add_term(e, SymPoly::variable(var++));
    const SymPoly d33 = det_expand(hybrid_matrix(gradient_system(cubic)));
    v.require(d33.term_count() == 2040, "D_{3|3} has " + std::to_string(d33.term_count()) + " monomials");

    // The symbolic matrices specialize to the numeric pipeline.
    Rng rng(3);
    PolySystem sys = random_system(3, 2, rng);
    std::vector<Rational> values;
    for (int i = 0; i < 3; ++i)
        for (const auto& e : monomials_of_degree(3, 2)) values.push_back(sys[static_cast<std::size_t>(i)].coeff(e));
    v.require(r32.evaluate(values) == det(hybrid_matrix(sys)), "symbolic R_{3|2} does not specialize");
    v.detail << r32.term_count() << " and " << d33.term_count() << " monomials, " << seconds_since(start) << " s";
}

void criterion_4(Verdict& v)
{
    Rng rng(4);
    PolySystem sys = random_system(3, 2, rng);
    auto dims = [](const KoszulComplex& c) {
        std::vector<std::size_t> d;
        for (const auto& s : c.spaces) d.push_back(s.dim);
        return d;
    };
    const KoszulComplex c4 = build_complex(sys, 4), c5 = build_complex(sys, 5), c6 = build_complex(sys, 6);
    v.require(dims(c4) == std::vector<std::size_t>{3, 18, 15}, "R = 4 dimensions");
    v.require(dims(c5) == std::vector<std::size_t>{9, 30, 21}, "R = 5 dimensions");
    const Rational d4 = det_of_complex(c4), d5 = det_of_complex(c5), d6 = det_of_complex(c6);
    v.require(d4 != 0, "zero determinant");
    v.require(abs(d4) == abs(d5) && abs(d4) == abs(d6), "R = 4, 5, 6 disagree");
    v.detail << "|DET| = " << to_string(abs(d4)) << " at R = 4, 5, 6";
}

void criterion_5(Verdict& v)
{
    Rng rng(5);
    int relations = 0, pfaffians = 0;
    for (int trial = 0; trial < 100; ++trial) {
        relations += plucker_relation(plucker_minors(random_system(2, 3, rng))) == 0;
        PolySystem sys = random_system(3, 2, rng);
        const PluckerTable t = plucker_minors(sys);
        relations += plucker_relation(t) == 0;
        const ExactMat a = pfaffian_matrix_32(t);
        const Rational pf = pfaffian(a);
        pfaffians += pf * pf == det(a);
    }
    v.require(relations == 200, std::to_string(200 - relations) + " nonzero relations");
    v.require(pfaffians == 100, std::to_string(100 - pfaffians) + " Pfaffian mismatches");
    v.detail << "200 relations vanish, 100 pf^2 = det";
}

void criterion_6(Verdict& v)
{
    Rng rng(6);
    PolySystem sys = random_system(3, 2, rng);
    auto q = [&](std::size_t i, int a, int b) {
        Exponent e(3, 0);
        ++e[static_cast<std::size_t>(a - 1)];
        ++e[static_cast<std::size_t>(b - 1)];
        return sys[i].coeff(e);
    };
    auto f = [&](int a, int b) { return q(0, a, b); };
    auto g = [&](int a, int b) { return q(1, a, b); };
    auto h = [&](int a, int b) { return q(2, a, b); };
    const Rational t1 = 4 * f(1, 1) + 4 * g(2, 2) + 4 * h(3, 3);
    const Rational t2 = 4 * f(1, 1) * f(1, 1) + 4 * g(1, 2) * f(1, 2) + 4 * h(1, 3) * f(1, 3) + 8 * g(1, 1) * f(2, 2) + 8 * h(1, 1) * f(3, 3) +
                        4 * g(2, 2) * g(2, 2) + 8 * g(3, 3) * h(2, 2) + 4 * g(2, 3) * h(2, 3) + 4 * h(3, 3) * h(3, 3);
    v.require(graded_trace(sys, 1) == t1, "T1");
    v.require(graded_trace(sys, 2) == t2, "T2");

    int checked = 0;
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        TruncSeries t({2, 1, 1});
        for (std::size_t i = 1; i < t.size(); ++i) {
            t.at(i) = Rational(num(rng), den(rng));
            t.at(i).canonicalize();
        }
        const TruncSeries P = (-t).exp();
        auto T = [&](int a, int b, int c) { return t[{a, b, c}]; };
        bool ok = P[{1, 0, 0}] == -T(1, 0, 0);
        ok = ok && P[{2, 0, 0}] == -T(2, 0, 0) + T(1, 0, 0) * T(1, 0, 0) / 2;
        ok = ok && P[{2, 1, 0}] == -T(2, 1, 0) + T(2, 0, 0) * T(0, 1, 0) + T(1, 0, 0) * T(1, 1, 0) - T(1, 0, 0) * T(1, 0, 0) * T(0, 1, 0) / 2;
        ok = ok && P[{1, 1, 1}] == -T(1, 1, 1) + T(1, 0, 0) * T(0, 1, 1) + T(0, 1, 0) * T(1, 0, 1) + T(1, 1, 0) * T(0, 0, 1) -
                                       T(0, 1, 0) * T(0, 0, 1) * T(1, 0, 0);
        checked += ok;
    }
    v.require(checked == 20, "multi-Schur polynomials differ on " + std::to_string(20 - checked) + " samples");
    v.detail << "T1, T2 and P_{10} .. P_{111} on 20 random trace tables";
}

void criterion_7(Verdict& v)
{
    Rng rng(7);
    for (auto tag : all_invariant_tags()) {
        const int n = invariant_nvars(tag);
        const HomPoly p = random_form(n, invariant_form_degree(tag), rng, -5, 5);
        const Rational base = invariant(p, tag);
        int same = 0;
        for (int trial = 0; trial < 50; ++trial) same += invariant(p.substitute_linear(oracle::random_unimodular(n, rng)), tag) == base;
        v.require(same == 50, to_string(tag) + " changed on " + std::to_string(50 - same) + " substitutions");
    }
    for (auto [n, r] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
        std::optional<Rational> ratio;
        int constant = 0, singular = 0, mixed = 0;
        for (int trial = 0; trial < 50;) {
            const HomPoly p = random_form(n, r, rng);
            const Rational d = discriminant(p), i = discriminant_via_invariants(p);
            if (d == 0 || i == 0) {
                (d == i ? singular : mixed) += 1;
                if (mixed) break;
                continue;
            }
            const Rational value = d / i;
            if (!ratio) ratio = value;
            constant += value == *ratio;
            ++trial;
        }
        v.require(mixed == 0, "only one route vanished for " + std::to_string(n) + "|" + std::to_string(r));
        v.require(ratio && constant == 50, "ratio not constant for " + std::to_string(n) + "|" + std::to_string(r));
        if (!ratio) continue;
        v.detail << n << '|' << r << " ratio " << to_string(*ratio);
        if (singular) v.detail << " (" << singular << " singular redrawn)";
        v.detail << ", ";
    }
    v.detail << "6 invariants x 50 substitutions";
}

void criterion_8(Verdict& v)
{
    Rng rng(8);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            SymmetricForm sf{n, 2, {}};
            const Rational c2 = dist(rng), c11(dist(rng), 1 + trial);
            sf.set({2}, c2);
            sf.set({1, 1}, c11);
            ExactMat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = i == j ? c2 + c11 : c11;
            v.require(symmetric_disc(sf) == det(m), "quadratic product formula, n = " + std::to_string(n));
        }
    for (int n = 2; n <= 3; ++n) {
        std::optional<Rational> ratio;
        for (int trial = 0; trial < 10; ++trial) {
            SymmetricForm sf{n, 3, {}};
            for (const auto& y : partitions(3)) sf.set(y, dist(rng));
            if (sf.coefficient({3}) == 0) sf.set({3}, 1);
            const Rational raw = symmetric_disc(sf);
            const Rational value = discriminant(sf.expand());
            if (raw == 0) {
                v.require(value == 0, "cubic product formula vanishes alone, n = " + std::to_string(n));
                continue;
            }
            if (!ratio) ratio = value / raw;
            v.require(value == *ratio * raw, "cubic product formula ratio varies, n = " + std::to_string(n));
        }
        v.detail << "cubic n = " << n << " ratio " << (ratio ? to_string(*ratio) : "?") << ", ";
    }
    v.detail << "quadratic n = 2..8";
}

void criterion_9(Verdict& v)
{
    PrecisionGuard guard(50);
    const Real pi = boost::multiprecision::acos(Real(-1));
    v.require(coefficient_strings(area_series_quartic(4)) == std::vector<std::string>{"1", "-1/16", "9/1024", "-25/16384", "1225/4194304"},
              "area coefficients");
    const UniSeries area = area_series_quartic(120);
    for (const Rational& e : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
        const Real expected = pi * area.evaluate(to_real(e));
        const Real got = 4 * pi * j24_regular_branch(e, 50);
        v.require(abs_real(got - expected) / expected < Real("1e-9"), "regular branch at eps = " + to_string(e));
    }
    for (int r : {2, 6}) {
        const UniSeries x = root_series_fixed_point(r, 7);
        for (int k = 0; k <= 6; ++k) v.require(abs(x[(r - 1) * k + 1]) == Rational(root_series_coefficient(r, k)), "root series r = " + std::to_string(r));
    }
    const UniSeries catalan = root_series_fixed_point(2, 7), sextic = root_series_fixed_point(6, 6);
    const std::vector<int> cat{1, 1, 2, 5, 14, 42, 132}, six{1, 1, 6, 51, 506, 5481};
    for (std::size_t k = 0; k < cat.size(); ++k) v.require(abs(catalan[static_cast<int>(k) + 1]) == cat[k], "Catalan numbers");
    for (std::size_t k = 0; k < six.size(); ++k) v.require(abs(sextic[5 * static_cast<int>(k) + 1]) == six[k], "sextic tree numbers");
    v.require(ward_residual_quadratic(4, RootBranch::small).is_zero(), "Ward residual, small branch");
    v.require(ward_residual_quadratic(4, RootBranch::large).is_zero(), "Ward residual, large branch");
    double worst = 0;
    const std::vector<Rational> grid{Rational(1, 2), Rational(1), Rational(2)};
    for (const auto& a : grid)
        for (const auto& b : grid)
            for (const auto& c : grid) {
                const double closed = volume_4d(a, b, c, 1, 30).value.convert_to<double>();
                const double quad = oracle::volume_quadrature(a.get_d(), b.get_d(), c.get_d(), 1.0);
                worst = std::max(worst, std::abs(closed - quad) / closed);
            }
    v.require(worst < 1e-6, "volume quadrature deviation " + std::to_string(worst));
    v.detail << (v.pass ? "" : " ") << "worst volume deviation " << worst;
}

void criterion_10(Verdict& v)
{
    Rng rng(10);
    const std::vector<std::vector<int>> shapes{{1, 1}, {2, 2}, {2, 3}, {3, 1}, {4, 4}, {2, 5}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3},
                                               {1, 2, 2}, {1, 1, 3}, {2, 2, 2, 2}, {1, 1, 1, 1}};
    int recovered = 0, total = 0;
    for (const auto& degrees : shapes) {
        PolySystem sys = random_system(degrees, rng);
        Rational base = compute_resultant(sys);
        while (base == 0) base = compute_resultant(sys = random_system(degrees, rng));
        const auto d = sys.partial_degrees();
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            std::vector<HomPoly> polys = sys.polys();
            polys[i] = polys[i].scaled(2);
            const long k = exact_exponent(compute_resultant(PolySystem(polys)) / base, 2);
            ++total;
            recovered += k == d[i];
            v.require(k == d[i], shape_label(sys) + " equation " + std::to_string(i + 1) + " exponent " + std::to_string(k));
        }
    }
    for (auto [n, r] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
        HomPoly p = random_form(n, r, rng);
        while (discriminant(p) == 0) p = random_form(n, r, rng);
        const long k = exact_exponent(discriminant(p.scaled(3)) / discriminant(p), 3);
        ++total;
        recovered += k == discriminant_degree(n, r);
        v.require(k == discriminant_degree(n, r), "discriminant " + std::to_string(n) + "|" + std::to_string(r) + " exponent " + std::to_string(k));
    }
    v.detail << (v.pass ? "" : " ") << recovered << "/" << total << " exponents recovered";
}

}  // namespace

// Optional arguments select criteria by number.
int main(int argc, char** argv)
{
    std::cout << std::unitbuf;
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
        {"binary cubic discriminant over indeterminates", criterion_1},
        {"cross-method exactness", criterion_2},
        {"symbolic monomial counts", criterion_3},
        {"Koszul tower", criterion_4},
        {"Plücker relations and Pfaffian", criterion_5},
        {"trace and multi-Schur regressions", criterion_6},
        {"SL invariance and invariant ratios", criterion_7},
        {"symmetric closed forms", criterion_8},
        {"series identities", criterion_9},
        {"degree laws", criterion_10},
    };
    std::set<std::size_t> selected;
    for (int a = 1; a < argc; ++a) selected.insert(std::stoul(argv[a]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!selected.empty() && !selected.count(i + 1)) continue;
        Verdict v;
        try {
            criteria[i].second(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << v.detail.str() << '\n';
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << '\n';
    return failed == 0 ? 0 : 1;
}
