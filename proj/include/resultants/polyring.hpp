#pragma once

#include "resultants/errors.hpp"
#include "resultants/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace resultants {

// Exponent vector a_1..a_n of the monomial x_1^{a_1}...x_n^{a_n}.
using Exponent = std::vector<int>;

inline int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order with x_1 > x_2 > ... > x_n; "less" means "comes first".
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        int da = degree(a), db = degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int a : e) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001b3ull;
        return h;
    }
};

// All exponents of the given total degree in n variables, graded-lex ordered.
std::vector<Exponent> monomials_of_degree(int n, int degree);

class MonomialBasis {
public:
    MonomialBasis(int n, int degree);

    int nvars() const { return n_; }
    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Exponent>& monomials() const { return monomials_; }
    std::size_t index_of(const Exponent& e) const;

private:
    int n_;
    int degree_;
    std::vector<Exponent> monomials_;
    std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

std::size_t binomial(int n, int k);

// Homogeneous polynomial of degree r in n variables with coefficients in C.
// C is Rational for numeric work and SymPoly for expansions over indeterminates.
template <class C>
class BasicHomPoly {
public:
    using Coefficient = C;
    using TermMap = std::map<Exponent, C, GradedLex>;

    BasicHomPoly(int n, int r) : n_(n), r_(r)
    {
        if (n < 1) throw DimensionError("polynomial needs at least one variable");
        if (r < 0) throw DegreeError("negative degree");
    }

    int nvars() const { return n_; }
    int degree() const { return r_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    C coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(const Exponent& e, const C& c)
    {
        if (static_cast<int>(e.size()) != n_)
            throw DimensionError("exponent length " + std::to_string(e.size()) + " in " + std::to_string(n_) + " variables");
        for (int a : e)
            if (a < 0) throw DegreeError("negative exponent");
        if (resultants::degree(e) != r_)
            throw HomogeneityError("monomial of degree " + std::to_string(resultants::degree(e)) + " in a form of degree " + std::to_string(r_));
        accumulate(e, c);
    }

    static BasicHomPoly monomial(const Exponent& e, const C& c)
    {
        BasicHomPoly p(static_cast<int>(e.size()), resultants::degree(e));
        p.add_term(e, c);
        return p;
    }

    BasicHomPoly& operator+=(const BasicHomPoly& other)
    {
        require_same_space(other);
        for (const auto& [e, c] : other.terms_) accumulate(e, c);
        return *this;
    }

    BasicHomPoly& operator-=(const BasicHomPoly& other)
    {
        require_same_space(other);
        for (const auto& [e, c] : other.terms_) accumulate(e, -c);
        return *this;
    }

    friend BasicHomPoly operator+(BasicHomPoly a, const BasicHomPoly& b) { return a += b; }
    friend BasicHomPoly operator-(BasicHomPoly a, const BasicHomPoly& b) { return a -= b; }

    friend BasicHomPoly operator-(const BasicHomPoly& a)
    {
        BasicHomPoly out(a.n_, a.r_);
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend BasicHomPoly operator*(const BasicHomPoly& a, const BasicHomPoly& b)
    {
        if (a.n_ != b.n_) throw DimensionError("product of forms in different variable counts");
        BasicHomPoly out(a.n_, a.r_ + b.r_);
        Exponent e(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                out.accumulate(e, ca * cb);
            }
        return out;
    }

    BasicHomPoly scaled(const C& lambda) const
    {
        BasicHomPoly out(n_, r_);
        if (resultants_is_zero(lambda)) return out;
        for (const auto& [e, c] : terms_) out.accumulate(e, c * lambda);
        return out;
    }

    // d/dx_i with 0-based i; the result is a (possibly zero) form of degree r-1.
    BasicHomPoly partial(int i) const
    {
        if (i < 0 || i >= n_) throw IndexError("variable index out of range");
        if (r_ < 1) throw DegreeError("derivative of a degree-0 form");
        BasicHomPoly out(n_, r_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponent d = e;
            --d[i];
            out.accumulate(d, c * C(e[i]));
        }
        return out;
    }

    C evaluate(const std::vector<C>& point) const
    {
        if (static_cast<int>(point.size()) != n_) throw DimensionError("evaluation point has wrong length");
        C total{};
        for (const auto& [e, c] : terms_) {
            C term = c;
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * point[i];
            total += term;
        }
        return total;
    }

    // p(G x): each x_i is replaced by sum_j G[i][j] x_j.
    BasicHomPoly substitute_linear(const std::vector<std::vector<C>>& G) const
    {
        if (static_cast<int>(G.size()) != n_) throw DimensionError("substitution matrix has wrong size");
        std::vector<BasicHomPoly> images;
        images.reserve(n_);
        for (int i = 0; i < n_; ++i) {
            if (static_cast<int>(G[i].size()) != n_) throw DimensionError("substitution matrix is not square");
            BasicHomPoly lin(n_, 1);
            for (int j = 0; j < n_; ++j) {
                Exponent e(n_, 0);
                e[j] = 1;
                lin.accumulate(e, G[i][j]);
            }
            images.push_back(std::move(lin));
        }
        BasicHomPoly out(n_, r_);
        for (const auto& [e, c] : terms_) {
            BasicHomPoly term = constant(n_, c);
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * images[i];
            out += term;
        }
        return out;
    }

    // Same form viewed in new_n >= n variables, old variable i becoming variable offset + i.
    BasicHomPoly embedded(int new_n, int offset) const
    {
        if (offset < 0 || offset + n_ > new_n) throw DimensionError("embedding does not fit");
        BasicHomPoly out(new_n, r_);
        for (const auto& [e, c] : terms_) {
            Exponent w(new_n, 0);
            for (int i = 0; i < n_; ++i) w[offset + i] = e[i];
            out.terms_.emplace(std::move(w), c);
        }
        return out;
    }

    // Set x_i = 0 and drop that variable.
    BasicHomPoly restricted_without(int i) const
    {
        if (n_ < 2) throw DimensionError("cannot drop the only variable");
        BasicHomPoly out(n_ - 1, r_);
        for (const auto& [e, c] : terms_) {
            if (e[i] != 0) continue;
            Exponent w;
            w.reserve(n_ - 1);
            for (int j = 0; j < n_; ++j)
                if (j != i) w.push_back(e[j]);
            out.terms_.emplace(std::move(w), c);
        }
        return out;
    }

    template <class D, class F>
    BasicHomPoly<D> map_coefficients(F&& f) const
    {
        BasicHomPoly<D> out(n_, r_);
        for (const auto& [e, c] : terms_) {
            D d = f(c);
            if (!resultants_is_zero(d)) out.add_term(e, d);
        }
        return out;
    }

    static BasicHomPoly constant(int n, const C& c)
    {
        BasicHomPoly p(n, 0);
        p.accumulate(Exponent(n, 0), c);
        return p;
    }

    friend bool operator==(const BasicHomPoly& a, const BasicHomPoly& b)
    {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

private:
    static bool resultants_is_zero(const C& c)
    {
        using resultants::is_zero;
        return is_zero(c);
    }

    void accumulate(const Exponent& e, const C& c)
    {
        if (resultants_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (resultants_is_zero(it->second)) terms_.erase(it);
        }
    }

    void require_same_space(const BasicHomPoly& other) const
    {
        if (n_ != other.n_) throw DimensionError("forms in different variable counts");
        if (r_ != other.r_) throw HomogeneityError("sum of forms of different degrees");
    }

    int n_;
    int r_;
    TermMap terms_;
};

using HomPoly = BasicHomPoly<Rational>;

// n forms in n variables.
template <class C>
class BasicPolySystem {
public:
    using Poly = BasicHomPoly<C>;

    explicit BasicPolySystem(std::vector<Poly> polys) : polys_(std::move(polys))
    {
        if (polys_.empty()) throw DimensionError("empty system");
        const int n = polys_.front().nvars();
        if (static_cast<int>(polys_.size()) != n)
            throw DimensionError(std::to_string(polys_.size()) + " equations in " + std::to_string(n) + " variables");
        for (const auto& p : polys_)
            if (p.nvars() != n) throw DimensionError("equations in different variable counts");
    }

    int nvars() const { return static_cast<int>(polys_.size()); }
    const std::vector<Poly>& polys() const { return polys_; }
    const Poly& operator[](std::size_t i) const { return polys_[i]; }

    std::vector<int> degrees() const
    {
        std::vector<int> r;
        for (const auto& p : polys_) r.push_back(p.degree());
        return r;
    }

    bool equal_degrees() const
    {
        for (const auto& p : polys_)
            if (p.degree() != polys_.front().degree()) return false;
        return true;
    }

    // d_i = (prod_j r_j) / r_i, the degree of the resultant in the coefficients of f_i.
    std::vector<long> partial_degrees() const
    {
        std::vector<long> d;
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            long prod = 1;
            for (std::size_t j = 0; j < polys_.size(); ++j)
                if (j != i) prod *= polys_[j].degree();
            d.push_back(prod);
        }
        return d;
    }

    long total_degree() const
    {
        long d = 0;
        for (long di : partial_degrees()) d += di;
        return d;
    }

    friend bool operator==(const BasicPolySystem& a, const BasicPolySystem& b) { return a.polys_ == b.polys_; }

private:
    std::vector<Poly> polys_;
};

using PolySystem = BasicPolySystem<Rational>;

// Validating constructor: duplicates summed, zeros dropped.
HomPoly make_poly(int n, int r, const std::vector<std::pair<Exponent, Rational>>& entries);

// Symmetric tensor entry S_{i_1..i_r} with 1-based labels: s_a / multinomial(r; a).
Rational tensor_coeff(const HomPoly& p, const std::vector<int>& labels);

Integer multinomial(const Exponent& a);

// Coefficient of x^j in p^k.
Rational power_coeff(const HomPoly& p, int k, const Exponent& j);

// Memoized successive powers p, p^2, ... of one form.
class PowerCache {
public:
    explicit PowerCache(HomPoly base);

    const HomPoly& power(int k);
    Rational coeff(int k, const Exponent& j);

private:
    HomPoly base_;
    std::vector<HomPoly> powers_;
};

HomPoly mul(const HomPoly& p, const HomPoly& q);
HomPoly scale(const HomPoly& p, const Rational& lambda);
Rational evaluate(const HomPoly& p, const std::vector<Rational>& point);
HomPoly partial(const HomPoly& p, int i);

// x_1^r + ... + x_n^r per equation: the calibration reference system.
PolySystem reference_system(const std::vector<int>& degrees);

// Short shape label, "3|2" for equal degrees, "2|2,3" otherwise.
std::string shape_label(const PolySystem& sys);

std::string to_string(const HomPoly& p);

}  // namespace resultants
