#include "resultants/crosscheck.hpp"
#include "resultants/koszul.hpp"
#include "resultants/schurtrace.hpp"
#include "resultants/sylvester.hpp"

#include <doctest.h>

using namespace resultants;

namespace {

std::vector<std::size_t> dims(const KoszulComplex& c)
{
    std::vector<std::size_t> d;
    for (const auto& s : c.spaces) d.push_back(s.dim);
    return d;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

TEST_SUITE("koszul")
{
    TEST_CASE("theta subsets are listed with the highest indices first")
    {
        CHECK(theta_subsets(3, 2) == std::vector<std::vector<int>>{{1, 2}, {0, 2}, {0, 1}});
        CHECK(theta_subsets(3, 1) == std::vector<std::vector<int>>{{2}, {1}, {0}});
        CHECK(theta_subsets(3, 0) == std::vector<std::vector<int>>{{}});
        CHECK(theta_subsets(4, 2).size() == 6);
    }

    TEST_CASE("space dimensions and Euler characteristics for 3|2")
    {
        Rng rng(1);
        PolySystem sys = random_system(3, 2, rng);
        KoszulComplex c3 = build_complex(sys, 3);
        CHECK(dims(c3) == std::vector<std::size_t>{9, 10});
        CHECK(c3.chi == 1);
        KoszulComplex c4 = build_complex(sys, 4);
        CHECK(dims(c4) == std::vector<std::size_t>{3, 18, 15});
        CHECK(c4.chi == 0);
        KoszulComplex c5 = build_complex(sys, 5);
        CHECK(dims(c5) == std::vector<std::size_t>{9, 30, 21});
        CHECK(c5.chi == 0);
        KoszulComplex c6 = build_complex(sys, 6);
        CHECK(dims(c6) == std::vector<std::size_t>{1, 18, 45, 28});
        CHECK(c6.spaces.front().p == 0);
        CHECK(c6.spaces.front().q == 3);
        for (int R = 4; R <= 8; ++R) CHECK(koszul_euler_characteristic(3, 2, R) == 0);
        CHECK(minimal_koszul_degree(3, 2) == 4);
        CHECK(minimal_koszul_degree(2, 3) == 5);
        CHECK(minimal_koszul_degree(3, 3) == 7);
        CHECK(minimal_koszul_degree(4, 2) == 5);
        CHECK_THROWS_AS(build_complex(random_system({2, 2, 3}, rng), 4), DegreeError);
    }

    TEST_CASE("worked 3|2 differentials entry by entry")
    {
        Rng rng(2);
        PolySystem sys = random_system(3, 2, rng);
        const auto& a = sys[0];
        const auto& b = sys[1];
        const auto& cc = sys[2];
        KoszulComplex c = build_complex(sys, 4);
        REQUIRE(c.diffs.size() == 2);
        const ExactMat& d1 = c.diffs[0];
        const ExactMat& d2 = c.diffs[1];
        REQUIRE(d1.rows() == 3);
        REQUIRE(d1.cols() == 18);
        REQUIRE(d2.rows() == 18);
        REQUIRE(d2.cols() == 15);

        // d1: rows theta2theta3, theta1theta3, theta1theta2; columns (m, theta3), (m, theta2), (m, theta1).
        const auto quad = monomials_of_degree(3, 2);
        for (std::size_t m = 0; m < quad.size(); ++m) {
            const auto& e = quad[m];
            const std::vector<std::vector<Rational>> block{
                {b.coeff(e), cc.coeff(e), 0},
                {-a.coeff(e), 0, cc.coeff(e)},
                {0, -a.coeff(e), -b.coeff(e)},
            };
            for (std::size_t row = 0; row < 3; ++row)
                for (std::size_t t = 0; t < 3; ++t) CHECK(d1(row, 3 * m + t) == block[row][t]);
        }

        // d2: row (m, theta3) holds c*m, (m, theta2) holds -b*m, (m, theta1) holds a*m.
        MonomialBasis quartic(3, 4);
        for (std::size_t m = 0; m < quad.size(); ++m) {
            const HomPoly mono = HomPoly::monomial(quad[m], Rational(1));
            const std::vector<HomPoly> images{mono * cc, -(mono * b), mono * a};
            for (std::size_t t = 0; t < 3; ++t)
                for (std::size_t col = 0; col < quartic.size(); ++col)
                    CHECK(d2(3 * m + t, col) == images[t].coeff(quartic[col]));
        }
    }

    TEST_CASE("nilpotency")
    {
        Rng rng(3);
        for (auto degrees : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 3, 3}, std::vector<int>{2, 2, 2, 2}}) {
            PolySystem sys = random_system(degrees, rng);
            const int R = minimal_koszul_degree(sys.nvars(), degrees[0]) + 1;
            KoszulComplex c = build_complex(sys, R);
            CHECK(nilpotency_check(c));
            KoszulComplex broken = c;
            REQUIRE(broken.diffs.size() >= 2);
            ExactMat& d = broken.diffs[0];
            bool changed = false;
            for (std::size_t i = 0; i < d.rows() && !changed; ++i)
                for (std::size_t j = 0; j < d.cols() && !changed; ++j)
                    if (d(i, j) != 0) {
                        d(i, j) += 1;
                        changed = true;
                    }
            CHECK_FALSE(nilpotency_check(broken));
        }
        CHECK(nilpotency_check(build_complex(random_system(3, 2, rng), 3)));
    }

    TEST_CASE("reference system")
    {
        KoszulComplex c = build_complex(reference_system({2, 2, 2}), 4);
        CHECK(abs_value(det_of_complex(c)) == 1);
        for (int n = 2; n <= 4; ++n)
            for (int r = 1; r <= (n == 4 ? 2 : 3); ++r) CHECK(resultant_koszul(reference_system(std::vector<int>(n, r))) == 1);
    }

    TEST_CASE("every complex of the 3|2 tower gives the same value up to sign")
    {
        Rng rng(4);
        for (int trial = 0; trial < 3; ++trial) {
            PolySystem sys = random_system(3, 2, rng);
            const Rational base = det_of_complex(build_complex(sys, 4));
            CHECK(base != 0);
            for (int R = 5; R <= 8; ++R) {
                const Rational value = det_of_complex(build_complex(sys, R));
                CHECK(abs_value(value) == abs_value(base));
                CHECK(resultant_koszul(sys, R) == resultant_koszul(sys, 4));
            }
        }
    }

    TEST_CASE("randomized subset choices give identical values")
    {
        Rng rng(5);
        for (int R : {4, 6}) {
            KoszulComplex c = build_complex(random_system(3, 2, rng), R);
            const Rational base = det_of_complex(c);
            for (std::uint64_t seed = 1; seed <= 6; ++seed) CHECK(det_of_complex(c, SubsetChoice{seed, 8}) == base);
        }
        KoszulComplex c = build_complex(random_system(3, 3, rng), 7);
        const Rational base = det_of_complex(c);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) CHECK(det_of_complex(c, SubsetChoice{seed, 8}) == base);
    }

    TEST_CASE("binary systems match Sylvester")
    {
        Rng rng(6);
        for (int r = 1; r <= 4; ++r)
            for (int trial = 0; trial < 3; ++trial) {
                PolySystem sys = random_system(2, r, rng);
                const Rational raw = det_of_complex(build_complex(sys, minimal_koszul_degree(2, r)));
                CHECK(abs_value(raw) == abs_value(resultant_2(sys)));
                CHECK(resultant_koszul(sys) == resultant_2(sys));
            }
        // Gradient pair of x^3 + x^2 y + x y^2 + y^3.
        PolySystem pair({make_poly(2, 2, {{{2, 0}, 3}, {{1, 1}, 2}, {{0, 2}, 1}}), make_poly(2, 2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 3}})});
        CHECK(resultant_koszul(pair) == 48);
    }

    TEST_CASE("agreement with the trace formula")
    {
        Rng rng(7);
        for (int trial = 0; trial < 3; ++trial) {
            PolySystem sys = random_system(3, 2, rng);
            CHECK(resultant_koszul(sys) == resultant_trace(sys));
        }
    }

    TEST_CASE("errors")
    {
        Rng rng(8);
        PolySystem sys = random_system(3, 2, rng);
        CHECK_THROWS_AS(det_of_complex(build_complex(sys, 3)), EulerError);
        CHECK_THROWS_AS(resultant_koszul(random_system({2, 3}, rng)), DegreeError);
    }

    TEST_CASE("systems with a common root give zero")
    {
        Rng rng(9);
        for (int r = 2; r <= 3; ++r) {
            PolySystem sys = singular_system(3, r, {1, -2, 3}, rng);
            CHECK(resultant_koszul(sys) == 0);
        }
        CHECK(resultant_koszul(singular_system(4, 2, {1, 1, 2, -1}, rng)) == 0);
    }

    TEST_CASE("finite differences of order d + 1 vanish")
    {
        Rng rng(10);
        PolySystem base = random_system(3, 2, rng);
        PolySystem direction = random_system(3, 2, rng, -2, 2);
        const long d = base.total_degree();
        REQUIRE(d == 12);
        auto shifted = [&](long k) {
            std::vector<HomPoly> polys;
            for (int i = 0; i < 3; ++i) polys.push_back(base[i] + direction[i].scaled(Rational(k)));
            return resultant_koszul(PolySystem(polys));
        };
        std::vector<Rational> values;
        for (long k = 0; k <= d + 1; ++k) values.push_back(shifted(k));
        auto difference = [&](long order) {
            Rational total;
            Integer binom = 1;
            for (long k = 0; k <= order; ++k) {
                total += ((order - k) % 2 == 0 ? 1 : -1) * Rational(binom) * values[static_cast<std::size_t>(k)];
                binom = binom * (order - k) / (k + 1);
            }
            return total;
        };
        CHECK(difference(d + 1) == 0);
        CHECK(difference(d) != 0);
    }

    TEST_CASE("degree r^(n-1) in each equation")
    {
        Rng rng(11);
        for (auto [n, r] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
            PolySystem sys = random_system(n, r, rng);
            const Rational base = resultant_koszul(sys);
            const Rational lambda(2, 3);
            long di = 1;
            for (int k = 1; k < n; ++k) di *= r;
            for (int i = 0; i < n; ++i) {
                std::vector<HomPoly> polys = sys.polys();
                polys[static_cast<std::size_t>(i)] = polys[static_cast<std::size_t>(i)].scaled(lambda);
                CHECK(resultant_koszul(PolySystem(polys)) == pow(lambda, static_cast<unsigned long>(di)) * base);
            }
        }
    }
}
