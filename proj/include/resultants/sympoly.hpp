#pragma once

#include "resultants/rational.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace resultants {

// Sparse polynomial over Q in up to 32 indeterminates with total degree at most 15.
// Monomials are packed four bits per variable so a product of monomials is one addition.
class SymPoly {
public:
    using Key = unsigned __int128;
    static constexpr int kMaxVars = 32;
    static constexpr int kMaxDegree = 15;

    SymPoly() = default;
    SymPoly(const Rational& c);  // NOLINT(google-explicit-constructor): coefficient ring embedding
    SymPoly(int c);              // NOLINT(google-explicit-constructor)

    static SymPoly variable(int index);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int max_degree() const { return degree_; }

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator-=(const SymPoly& other);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator-(const SymPoly& a);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

    Rational evaluate(const std::vector<Rational>& values) const;

    // Replace variable i by weight[i].first * x_{weight[i].second}.
    SymPoly substitute_scaled(const std::vector<std::pair<Rational, int>>& weight) const;

    // Coefficient of a monomial given as an exponent vector.
    Rational coeff(const std::vector<int>& exponents) const;

    // Terms with exponent vectors of length nvars, in descending lex order.
    std::vector<std::pair<std::vector<int>, Rational>> sorted_terms(int nvars) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    struct KeyHash {
        std::size_t operator()(Key k) const noexcept
        {
            auto lo = static_cast<std::uint64_t>(k);
            auto hi = static_cast<std::uint64_t>(k >> 64);
            return static_cast<std::size_t>((lo * 0x9e3779b97f4a7c15ull) ^ (hi + 0x632be59bd9b4e019ull + (lo << 6)));
        }
    };

    static int exponent_at(Key k, int var) { return static_cast<int>((k >> (4 * var)) & 0xF); }
    static int key_degree(Key k);
    static Key pack(const std::vector<int>& exponents);
    void accumulate(Key k, const Rational& c);
    void refresh_degree();

    std::unordered_map<Key, Rational, KeyHash> terms_;
    int degree_ = 0;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }

}  // namespace resultants
