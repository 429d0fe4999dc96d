#include "resultants/polyring.hpp"

#include <sstream>

namespace resultants {

namespace {

void fill_monomials(int n, int remaining, int var, Exponent& current, std::vector<Exponent>& out)
{
    if (var == n - 1) {
        current[var] = remaining;
        out.push_back(current);
        return;
    }
    for (int a = remaining; a >= 0; --a) {
        current[var] = a;
        fill_monomials(n, remaining - a, var + 1, current, out);
    }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int n, int degree)
{
    if (n < 1) throw DimensionError("monomials need at least one variable");
    std::vector<Exponent> out;
    if (degree < 0) return out;
    Exponent current(n, 0);
    fill_monomials(n, degree, 0, current, out);
    return out;
}

MonomialBasis::MonomialBasis(int n, int degree)
    : n_(n), degree_(degree), monomials_(monomials_of_degree(n, degree))
{
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Exponent& e) const
{
    auto it = index_.find(e);
    if (it == index_.end()) throw IndexError("monomial not in basis");
    return it->second;
}

std::size_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    std::size_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return result;
}

HomPoly make_poly(int n, int r, const std::vector<std::pair<Exponent, Rational>>& entries)
{
    HomPoly p(n, r);
    for (const auto& [e, c] : entries) p.add_term(e, c);
    return p;
}

Integer multinomial(const Exponent& a)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(degree(a)));
    for (int ai : a) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ai));
        result /= f;
    }
    return result;
}

Rational tensor_coeff(const HomPoly& p, const std::vector<int>& labels)
{
    if (static_cast<int>(labels.size()) != p.degree()) throw IndexError("tensor index has wrong length");
    Exponent a(p.nvars(), 0);
    for (int label : labels) {
        if (label < 1 || label > p.nvars()) throw IndexError("tensor index label out of range");
        ++a[label - 1];
    }
    return p.coeff(a) / Rational(multinomial(a));
}

PowerCache::PowerCache(HomPoly base) : base_(std::move(base))
{
    powers_.push_back(HomPoly::constant(base_.nvars(), Rational(1)));
}

const HomPoly& PowerCache::power(int k)
{
    if (k < 0) throw DegreeError("negative power");
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * base_);
    return powers_[k];
}

Rational PowerCache::coeff(int k, const Exponent& j)
{
    if (static_cast<int>(j.size()) != base_.nvars()) throw DimensionError("exponent length mismatch");
    if (degree(j) != k * base_.degree())
        throw DegreeError("coefficient index of degree " + std::to_string(degree(j)) + " requested from a power of degree " + std::to_string(k * base_.degree()));
    return power(k).coeff(j);
}

Rational power_coeff(const HomPoly& p, int k, const Exponent& j)
{
    PowerCache cache(p);
    return cache.coeff(k, j);
}

HomPoly mul(const HomPoly& p, const HomPoly& q) { return p * q; }
HomPoly scale(const HomPoly& p, const Rational& lambda) { return p.scaled(lambda); }
Rational evaluate(const HomPoly& p, const std::vector<Rational>& point) { return p.evaluate(point); }
HomPoly partial(const HomPoly& p, int i) { return p.partial(i); }

PolySystem reference_system(const std::vector<int>& degrees)
{
    const int n = static_cast<int>(degrees.size());
    std::vector<HomPoly> polys;
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = degrees[i];
        polys.push_back(HomPoly::monomial(e, Rational(1)));
    }
    return PolySystem(std::move(polys));
}

std::string shape_label(const PolySystem& sys)
{
    std::ostringstream out;
    out << sys.nvars() << '|';
    if (sys.equal_degrees()) {
        out << sys[0].degree();
    } else {
        auto r = sys.degrees();
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    }
    return out.str();
}

std::string to_string(const HomPoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string coeff = to_string(c);
        if (!first) {
            if (coeff.front() == '-') {
                out << " - ";
                coeff.erase(0, 1);
            } else {
                out << " + ";
            }
        }
        first = false;
        bool has_monomial = degree(e) > 0;
        if (!has_monomial || coeff != "1") {
            if (coeff == "-1" && has_monomial) out << '-';
            else out << coeff;
        }
        bool need_star = has_monomial && coeff != "1" && coeff != "-1";
        for (int i = 0; i < p.nvars(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << '*';
            need_star = true;
            out << 'x' << (i + 1);
            if (e[i] > 1) out << '^' << e[i];
        }
    }
    return out.str();
}

}  // namespace resultants
