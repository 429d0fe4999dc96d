#include "oracles.hpp"

#include "resultants/discrim.hpp"
#include "resultants/hybrid.hpp"
#include "resultants/sylvester.hpp"
#include "resultants/sympoly.hpp"

#include <doctest.h>

using namespace resultants;

namespace {

// Epsilon group from (tensor, 1-based slot) pairs.
oracle::EpsilonGroup eps(std::initializer_list<std::pair<int, int>> slots)
{
    oracle::EpsilonGroup g;
    for (auto [t, s] : slots) g.push_back({t, s - 1});
    return g;
}

enum Tensor { I, J, K, L, M, S };

struct ContractionCase {
    InvariantTag tag;
    int tensors;
    std::vector<oracle::EpsilonGroup> groups;
    Rational factor;  // invariant = factor * contraction
};

std::vector<ContractionCase> contraction_cases()
{
    return {
        {InvariantTag::i4_23, 4, {eps({{I, 1}, {J, 1}}), eps({{I, 2}, {J, 2}}), eps({{K, 1}, {L, 1}}), eps({{K, 2}, {L, 2}}), eps({{I, 3}, {K, 3}}), eps({{J, 3}, {L, 3}})}, -1},
        {InvariantTag::i2_24, 2, {eps({{I, 1}, {J, 1}}), eps({{I, 2}, {J, 2}}), eps({{I, 3}, {J, 3}}), eps({{I, 4}, {J, 4}})}, 1},
        {InvariantTag::i3_24, 3, {eps({{I, 1}, {J, 1}}), eps({{I, 2}, {J, 2}}), eps({{I, 3}, {K, 1}}), eps({{I, 4}, {K, 2}}), eps({{J, 3}, {K, 3}}), eps({{J, 4}, {K, 4}})}, 1},
        {InvariantTag::i4_25, 4,
         {eps({{I, 1}, {J, 1}}), eps({{I, 2}, {J, 2}}), eps({{I, 3}, {J, 3}}), eps({{I, 4}, {K, 4}}), eps({{I, 5}, {K, 5}}), eps({{J, 4}, {L, 4}}),
          eps({{J, 5}, {L, 5}}), eps({{K, 1}, {L, 1}}), eps({{K, 2}, {L, 2}}), eps({{K, 3}, {L, 3}})},
         -1},
        {InvariantTag::i4_33, 4, {eps({{I, 1}, {J, 1}, {K, 1}}), eps({{I, 2}, {J, 2}, {L, 2}}), eps({{I, 3}, {K, 3}, {L, 3}}), eps({{L, 1}, {K, 2}, {J, 3}})}, Rational(1, 4)},
        {InvariantTag::i6_33, 6,
         {eps({{I, 1}, {K, 1}, {L, 1}}), eps({{I, 2}, {J, 2}, {S, 2}}), eps({{J, 1}, {K, 2}, {M, 1}}), eps({{L, 2}, {M, 2}, {K, 3}}),
          eps({{M, 3}, {S, 3}, {J, 3}}), eps({{L, 3}, {I, 3}, {S, 1}})},
         -1},
    };
}

HomPoly binary_quartic(const Rational& c40, const Rational& c22, const Rational& c04)
{
    return make_poly(2, 4, {{{4, 0}, c40}, {{2, 2}, c22}, {{0, 4}, c04}});
}

HomPoly fermat(int n, int r)
{
    HomPoly p(n, r);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = r;
        p.add_term(e, 1);
    }
    return p;
}

Rational cubic_discriminant(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
{
    return 27 * a * a * d * d - b * b * c * c - 18 * a * b * c * d + 4 * a * c * c * c + 4 * b * b * b * d;
}

SymmetricForm random_symmetric(int n, int r, Rng& rng)
{
    std::uniform_int_distribution<int> dist(-5, 5);
    SymmetricForm sf{n, r, {}};
    for (const auto& y : partitions(r)) sf.set(y, dist(rng));
    if (sf.coefficient({r}) == 0) sf.set({r}, 1);
    return sf;
}

}  // namespace

TEST_SUITE("discrim")
{
    TEST_CASE("gradient systems")
    {
        HomPoly q = make_poly(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
        PolySystem g = gradient_system(q);
        CHECK(g[0] == make_poly(2, 1, {{{1, 0}, 2}}));
        CHECK(g[1] == make_poly(2, 1, {{{0, 1}, 2}}));
        Rng rng(1);
        PolySystem g3 = gradient_system(random_form(3, 4, rng));
        for (const auto& p : g3.polys()) CHECK(p.degree() == 3);
        HomPoly cubic = make_poly(2, 3, {{{3, 0}, 2}, {{2, 1}, 3}, {{1, 2}, 5}, {{0, 3}, 7}});
        PolySystem pair = gradient_system(cubic);
        CHECK(pair[0] == make_poly(2, 2, {{{2, 0}, 6}, {{1, 1}, 6}, {{0, 2}, 5}}));
        CHECK(pair[1] == make_poly(2, 2, {{{2, 0}, 3}, {{1, 1}, 10}, {{0, 2}, 21}}));
        CHECK_THROWS_AS(gradient_system(make_poly(2, 1, {{{1, 0}, 1}})), DegreeError);
    }

    TEST_CASE("binary discriminants")
    {
        Rng rng(2);
        std::uniform_int_distribution<int> dist(-7, 7);
        for (int trial = 0; trial < 10; ++trial) {
            const Rational a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
            HomPoly quad = make_poly(2, 2, {{{2, 0}, a}, {{1, 1}, b}, {{0, 2}, c}});
            CHECK(discriminant(quad) == 4 * a * c - b * b);
            HomPoly cubic = make_poly(2, 3, {{{3, 0}, a}, {{2, 1}, b}, {{1, 2}, c}, {{0, 3}, d}});
            CHECK(discriminant(cubic) == cubic_discriminant(a, b, c, d));
        }
        HomPoly ones = make_poly(2, 3, {{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}});
        CHECK(discriminant(ones) == 16);
        for (int r = 2; r <= 6; ++r) CHECK(discriminant(fermat(2, r)) > 0);
        for (int r = 2; r <= 3; ++r) CHECK(discriminant(fermat(3, r)) > 0);
    }

    TEST_CASE("binary cubic discriminant over indeterminate coefficients")
    {
        const SymPoly a = SymPoly::variable(0), b = SymPoly::variable(1), c = SymPoly::variable(2), d = SymPoly::variable(3);
        BasicHomPoly<SymPoly> p(2, 3);
        p.add_term({3, 0}, a);
        p.add_term({2, 1}, b);
        p.add_term({1, 2}, c);
        p.add_term({0, 3}, d);
        auto g = gradient_system(p);
        const SymPoly res = det_expand(sylvester_matrix(g[0], g[1]));
        const SymPoly expected = SymPoly(27) * a * a * d * d - b * b * c * c - SymPoly(18) * a * b * c * d + SymPoly(4) * a * c * c * c + SymPoly(4) * b * b * b * d;
        CHECK(res == SymPoly(Rational(gradient_normalization(2, 3))) * expected);
        CHECK(expected.term_count() == 5);
    }

    TEST_CASE("ternary cubic discriminant has 2040 monomials")
    {
        BasicHomPoly<SymPoly> p(3, 3);
        int var = 0;
        for (const auto& e : monomials_of_degree(3, 3)) p.add_term(e, SymPoly::variable(var++));
        const SymPoly d = det_expand(hybrid_matrix(gradient_system(p)));
        CHECK(d.term_count() == 2040);
    }

    TEST_CASE("discriminant degree")
    {
        CHECK(discriminant_degree(2, 3) == 4);
        CHECK(discriminant_degree(3, 3) == 12);
        CHECK(discriminant_degree(2, 5) == 8);
        Rng rng(3);
        for (auto [n, r] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{3, 2}, std::pair{3, 3}}) {
            HomPoly p = random_form(n, r, rng);
            const Rational lambda(-3, 2);
            CHECK(discriminant(p.scaled(lambda)) == pow(lambda, static_cast<unsigned long>(discriminant_degree(n, r))) * discriminant(p));
        }
    }

    TEST_CASE("forms with a critical point have zero discriminant")
    {
        Rng rng(4);
        for (int r = 3; r <= 6; ++r) {
            HomPoly p = oracle::double_root_binary(r, rng);
            CHECK(discriminant(p) == 0);
            if (r == 3 || r == 4) CHECK(discriminant_via_invariants(p) == 0);
        }
        HomPoly t = oracle::singular_ternary(3, rng);
        CHECK(discriminant(t) == 0);
        CHECK(discriminant_via_invariants(t) == 0);
        CHECK(discriminant(oracle::singular_ternary(2, rng)) == 0);
        HomPoly generic = random_form(3, 3, rng);
        CHECK(discriminant(generic) != 0);
        CHECK(discriminant_via_invariants(generic) != 0);
    }

    TEST_CASE("invariants match epsilon contractions")
    {
        Rng rng(5);
        for (const auto& c : contraction_cases()) {
            CAPTURE(to_string(c.tag));
            for (int trial = 0; trial < 2; ++trial) {
                HomPoly p = random_form(invariant_nvars(c.tag), invariant_form_degree(c.tag), rng, -4, 4);
                CHECK(invariant(p, c.tag) == c.factor * oracle::contract(p, c.tensors, c.groups));
                CHECK(invariant(p, c.tag) != 0);
            }
        }
    }

    TEST_CASE("tags")
    {
        CHECK(all_invariant_tags().size() == 6);
        for (auto tag : all_invariant_tags()) CHECK(parse_invariant_tag(to_string(tag)) == tag);
        CHECK(to_string(InvariantTag::i4_23) == "I4@2|3");
        CHECK(invariant_degree(InvariantTag::i6_33) == 6);
        CHECK_THROWS_AS(invariant(fermat(2, 3), InvariantTag::i2_24), ShapeError);
        CHECK_THROWS_AS(discriminant_via_invariants(fermat(2, 5)), ShapeError);
    }

    TEST_CASE("SL invariance")
    {
        Rng rng(6);
        for (auto tag : all_invariant_tags()) {
            CAPTURE(to_string(tag));
            const int n = invariant_nvars(tag);
            HomPoly p = random_form(n, invariant_form_degree(tag), rng, -5, 5);
            for (int trial = 0; trial < 3; ++trial) {
                auto G = oracle::random_unimodular(n, rng);
                CHECK(invariant(p.substitute_linear(G), tag) == invariant(p, tag));
            }
        }
    }

    TEST_CASE("quartic invariants")
    {
        CHECK(invariant(fermat(2, 4), InvariantTag::i2_24) == 2);
        CHECK(discriminant_via_invariants(fermat(2, 4)) == 8);
        for (const Rational& e : {Rational(0), Rational(1), Rational(-3, 2), Rational(7, 5)}) {
            HomPoly p = binary_quartic(1, 2 + e, 1);
            CHECK(invariant(p, InvariantTag::i2_24) == Rational(8, 3) + Rational(2, 3) * e + e * e / 6);
            CHECK(invariant(p, InvariantTag::i3_24) == Rational(16, 9) + Rational(2, 3) * e - e * e / 6 - e * e * e / 36);
        }
    }

    TEST_CASE("invariant discriminants are fixed multiples of the gradient discriminant")
    {
        Rng rng(7);
        for (auto [n, r] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
            const Rational ratio = invariant_discriminant_ratio(n, r);
            CHECK(ratio > 0);
            for (int trial = 0; trial < 4; ++trial) {
                HomPoly p = random_form(n, r, rng);
                CHECK(discriminant(p) == ratio * discriminant_via_invariants(p));
            }
        }
    }

    TEST_CASE("a second quintic invariant of degree 8")
    {
        Rng rng(8);
        HomPoly sample = random_form(2, 5, rng);
        auto i4sq = [](const HomPoly& p) -> Rational {
            const Rational v = invariant(p, InvariantTag::i4_25);
            return v * v;
        };
        const Rational c = i4sq(sample) / discriminant(sample) + 1;
        auto i8 = [&](const HomPoly& p) -> Rational { return (i4sq(p) - c * discriminant(p)) / 64; };
        CHECK(i8(sample) != 0);
        for (int trial = 0; trial < 4; ++trial) {
            HomPoly p = random_form(2, 5, rng);
            auto G = oracle::random_unimodular(2, rng);
            CHECK(i8(p.substitute_linear(G)) == i8(p));
        }
    }

    TEST_CASE("partitions")
    {
        const std::vector<long> table{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
        for (int r = 0; r <= 10; ++r) CHECK(partition_count(r) == table[static_cast<std::size_t>(r)]);
        for (int r = 1; r <= 8; ++r) CHECK(static_cast<long>(partitions(r).size()) == table[static_cast<std::size_t>(r)]);
        CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    }

    TEST_CASE("symmetric quadrics")
    {
        for (int n = 1; n <= 5; ++n) {
            SymmetricForm sf{n, 2, {}};
            sf.set({2}, 1);
            CHECK(symmetric_disc(sf) == 1);
        }
        SymmetricForm sf{3, 2, {}};
        sf.set({2}, 1);
        sf.set({1, 1}, 1);
        CHECK(symmetric_disc(sf) == 4);
        CHECK(symmetric_quadratic_det(3, 1, 1) == 4);
        CHECK(symmetric_quadratic_det(4, Rational(2), Rational(-1, 3)) == pow(Rational(2), 3) * (2 + 4 * Rational(-1, 3)));

        Rng rng(9);
        for (int n = 2; n <= 4; ++n) {
            SymmetricForm first = random_symmetric(n, 2, rng);
            const Rational ratio = discriminant(first.expand()) / symmetric_disc(first);
            for (int trial = 0; trial < 4; ++trial) {
                SymmetricForm s = random_symmetric(n, 2, rng);
                CHECK(discriminant(s.expand()) == ratio * symmetric_disc(s));
            }
        }
    }

    TEST_CASE("symmetric cubics")
    {
        Rng rng(10);
        for (int n = 2; n <= 3; ++n) {
            SymmetricForm first = random_symmetric(n, 3, rng);
            const Rational ratio = discriminant(first.expand()) / symmetric_disc(first);
            CHECK(ratio != 0);
            for (int trial = 0; trial < 4; ++trial) {
                SymmetricForm s = random_symmetric(n, 3, rng);
                CHECK(discriminant(s.expand()) == ratio * symmetric_disc(s));
            }
        }
        SymmetricForm quartic{2, 4, {}};
        quartic.set({4}, 1);
        CHECK_THROWS_AS(symmetric_disc(quartic), RangeError);
    }

    TEST_CASE("decomposition of symmetric forms")
    {
        Rng rng(11);
        SymmetricForm s = random_symmetric(3, 3, rng);
        SymmetricForm back = symmetric_decomposition(s.expand());
        CHECK(back.expand() == s.expand());
        CHECK(discriminant_via_symmetric(s.expand()) == discriminant(s.expand()));
        CHECK_THROWS_AS(symmetric_decomposition(make_poly(2, 2, {{{2, 0}, 1}})), ShapeError);
    }
}
