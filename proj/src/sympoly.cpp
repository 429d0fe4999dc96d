#include "resultants/sympoly.hpp"

#include "resultants/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace resultants {

SymPoly::SymPoly(const Rational& c)
{
    if (sgn(c) != 0) terms_.emplace(Key{0}, c);
}

SymPoly::SymPoly(int c) : SymPoly(Rational(c)) {}

SymPoly SymPoly::variable(int index)
{
    if (index < 0 || index >= kMaxVars) throw RangeError("indeterminate index out of range");
    SymPoly p;
    p.terms_.emplace(Key{1} << (4 * index), Rational(1));
    p.degree_ = 1;
    return p;
}

int SymPoly::key_degree(Key k)
{
    int d = 0;
    for (int v = 0; v < kMaxVars; ++v) d += exponent_at(k, v);
    return d;
}

SymPoly::Key SymPoly::pack(const std::vector<int>& exponents)
{
    if (static_cast<int>(exponents.size()) > kMaxVars) throw RangeError("too many indeterminates");
    Key k = 0;
    int d = 0;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] < 0 || exponents[v] > kMaxDegree) throw RangeError("exponent out of packed range");
        d += exponents[v];
        k |= Key(static_cast<unsigned>(exponents[v])) << (4 * v);
    }
    if (d > kMaxDegree) throw RangeError("total degree out of packed range");
    return k;
}

void SymPoly::accumulate(Key k, const Rational& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void SymPoly::refresh_degree()
{
    degree_ = 0;
    for (const auto& [k, c] : terms_) degree_ = std::max(degree_, key_degree(k));
}

SymPoly& SymPoly::operator+=(const SymPoly& other)
{
    for (const auto& [k, c] : other.terms_) accumulate(k, c);
    refresh_degree();
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other)
{
    for (const auto& [k, c] : other.terms_) accumulate(k, -c);
    refresh_degree();
    return *this;
}

SymPoly operator-(const SymPoly& a)
{
    SymPoly out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
    out.degree_ = a.degree_;
    return out;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b)
{
    SymPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.degree_ + b.degree_ > SymPoly::kMaxDegree) throw RangeError("product exceeds the packed degree range");
    out.terms_.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
    Rational product;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            mpq_mul(product.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            out.accumulate(ka + kb, product);
        }
    out.degree_ = a.degree_ + b.degree_;
    if (!out.terms_.empty()) out.refresh_degree();
    return out;
}

Rational SymPoly::evaluate(const std::vector<Rational>& values) const
{
    Rational total;
    for (const auto& [k, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = exponent_at(k, v);
            if (e == 0) continue;
            if (v >= static_cast<int>(values.size())) throw DimensionError("missing value for an indeterminate");
            for (int i = 0; i < e; ++i) term *= values[v];
        }
        total += term;
    }
    return total;
}

SymPoly SymPoly::substitute_scaled(const std::vector<std::pair<Rational, int>>& weight) const
{
    SymPoly out;
    for (const auto& [k, c] : terms_) {
        Key image = 0;
        Rational factor = c;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = exponent_at(k, v);
            if (e == 0) continue;
            if (v >= static_cast<int>(weight.size())) throw DimensionError("missing substitution for an indeterminate");
            const auto& [w, target] = weight[v];
            if (target < 0 || target >= kMaxVars) throw RangeError("substitution target out of range");
            for (int i = 0; i < e; ++i) factor *= w;
            image += Key(static_cast<unsigned>(e)) << (4 * target);
        }
        out.accumulate(image, factor);
    }
    out.refresh_degree();
    return out;
}

Rational SymPoly::coeff(const std::vector<int>& exponents) const
{
    auto it = terms_.find(pack(exponents));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<std::vector<int>, Rational>> SymPoly::sorted_terms(int nvars) const
{
    std::vector<std::pair<std::vector<int>, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        std::vector<int> e(nvars);
        for (int v = 0; v < nvars; ++v) e[v] = exponent_at(k, v);
        if (key_degree(k) != std::accumulate(e.begin(), e.end(), 0))
            throw DimensionError("term uses an indeterminate beyond the requested count");
        out.emplace_back(std::move(e), c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

std::string SymPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(static_cast<int>(names.size()))) {
        std::string coeff = resultants::to_string(c);
        bool negative = coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (!first || negative) out << (first ? "-" : negative ? " - " : " + ");
        first = false;
        bool has_monomial = std::any_of(e.begin(), e.end(), [](int a) { return a > 0; });
        bool wrote = false;
        if (!has_monomial || coeff != "1") {
            out << coeff;
            wrote = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (wrote) out << '*';
            out << names[v];
            if (e[v] > 1) out << '^' << e[v];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace resultants
