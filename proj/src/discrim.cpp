#include "resultants/discrim.hpp"
#include "resultants/calibration.hpp"
#include "resultants/exactla.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

namespace resultants {

namespace {

struct InvariantTerm {
    int coeff;
    std::vector<std::pair<std::string, int>> factors;
};

#include "invariant_tables.inc"

struct TagInfo {
    InvariantTag tag;
    std::string_view name;
    int n, r, degree;
    const std::vector<InvariantTerm>* terms;
};

const std::array<TagInfo, 6>& tag_table()
{
    static const std::array<TagInfo, 6> table{{
        {InvariantTag::i4_23, "I4@2|3", 2, 3, 4, &i4_23},
        {InvariantTag::i2_24, "I2@2|4", 2, 4, 2, &i2_24},
        {InvariantTag::i3_24, "I3@2|4", 2, 4, 3, &i3_24},
        {InvariantTag::i4_25, "I4@2|5", 2, 5, 4, &i4_25},
        {InvariantTag::i4_33, "I4@3|3", 3, 3, 4, &i4_33},
        {InvariantTag::i6_33, "I6@3|3", 3, 3, 6, &i6_33},
    }};
    return table;
}

const TagInfo& info(InvariantTag tag)
{
    for (const auto& t : tag_table())
        if (t.tag == tag) return t;
    throw ParseError("unknown invariant");
}

}  // namespace

Integer gradient_normalization(int n, int r)
{
    if (r < 2) throw DegreeError("discriminant needs degree at least 2");
    Integer a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(r - 1), static_cast<unsigned long>(n));
    Integer numerator = a - (n % 2 == 0 ? 1 : -1);
    Integer exponent = numerator / r;
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(r), exponent.get_ui());
    return out;
}

Rational discriminant(const HomPoly& p, Method m)
{
    const PolySystem grad = gradient_system(p);
    return compute_resultant(grad, m) / Rational(gradient_normalization(p.nvars(), p.degree()));
}

long discriminant_degree(int n, int r)
{
    long d = n;
    for (int i = 0; i < n - 1; ++i) d *= r - 1;
    return d;
}

std::string to_string(InvariantTag tag) { return std::string(info(tag).name); }

InvariantTag parse_invariant_tag(std::string_view text)
{
    for (const auto& t : tag_table())
        if (t.name == text) return t.tag;
    throw ParseError("unknown invariant tag '" + std::string(text) + "'");
}

std::vector<InvariantTag> all_invariant_tags()
{
    std::vector<InvariantTag> out;
    for (const auto& t : tag_table()) out.push_back(t.tag);
    return out;
}

int invariant_nvars(InvariantTag tag) { return info(tag).n; }
int invariant_form_degree(InvariantTag tag) { return info(tag).r; }
int invariant_degree(InvariantTag tag) { return info(tag).degree; }

Rational invariant(const HomPoly& p, InvariantTag tag)
{
    const TagInfo& t = info(tag);
    if (p.nvars() != t.n || p.degree() != t.r)
        throw ShapeError(std::string(t.name) + " does not apply to a form of shape " + std::to_string(p.nvars()) + "|" +
                         std::to_string(p.degree()));
    std::map<std::string, Rational> entries;
    auto entry = [&](const std::string& label) -> const Rational& {
        auto it = entries.find(label);
        if (it != entries.end()) return it->second;
        std::vector<int> labels;
        for (char ch : label) labels.push_back(ch - '0');
        return entries.emplace(label, tensor_coeff(p, labels)).first->second;
    };
    Rational total = 0;
    for (const auto& term : *t.terms) {
        Rational product = term.coeff;
        for (const auto& [label, power] : term.factors) product *= pow(entry(label), static_cast<unsigned long>(power));
        total += product;
    }
    return total;
}

Rational discriminant_via_invariants(const HomPoly& p)
{
    const int n = p.nvars(), r = p.degree();
    if (n == 2 && r == 3) return invariant(p, InvariantTag::i4_23);
    if (n == 2 && r == 4) {
        Rational i2 = invariant(p, InvariantTag::i2_24), i3 = invariant(p, InvariantTag::i3_24);
        return i2 * i2 * i2 - 6 * i3 * i3;
    }
    if (n == 3 && r == 3) {
        Rational i4 = invariant(p, InvariantTag::i4_33), i6 = invariant(p, InvariantTag::i6_33);
        return 32 * i4 * i4 * i4 + 3 * i6 * i6;
    }
    throw ShapeError("no invariant formula for shape " + std::to_string(n) + "|" + std::to_string(r));
}

namespace {

HomPoly fermat(int n, int r)
{
    HomPoly p(n, r);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = r;
        p.add_term(e, Rational(1));
    }
    return p;
}

}  // namespace

Rational invariant_discriminant_ratio(int n, int r)
{
    return reference_constant("invariant-ratio", {n, r}, [&]() -> Rational {
        HomPoly f = fermat(n, r);
        return discriminant(f) / discriminant_via_invariants(f);
    });
}

Rational SymmetricForm::coefficient(const Partition& y) const
{
    auto it = C.find(y);
    return it == C.end() ? Rational(0) : it->second;
}

void SymmetricForm::set(const Partition& y, const Rational& value)
{
    int total = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 1 || (i > 0 && y[i] > y[i - 1])) throw DomainError("partition parts must be positive and weakly decreasing");
        total += y[i];
    }
    if (total != r) throw DegreeError("partition of " + std::to_string(total) + " in a form of degree " + std::to_string(r));
    if (is_zero(value)) C.erase(y);
    else C[y] = value;
}

HomPoly SymmetricForm::expand() const
{
    if (n < 1) throw DimensionError("symmetric form needs at least one variable");
    std::vector<HomPoly> power_sums(static_cast<std::size_t>(r) + 1, HomPoly(n, 0));
    for (int k = 1; k <= r; ++k) {
        HomPoly pk(n, k);
        for (int i = 0; i < n; ++i) {
            Exponent e(n, 0);
            e[i] = k;
            pk.add_term(e, Rational(1));
        }
        power_sums[k] = std::move(pk);
    }
    HomPoly out(n, r);
    for (const auto& [y, c] : C) {
        HomPoly term = HomPoly::constant(n, c);
        for (int part : y) term = term * power_sums[part];
        out += term;
    }
    return out;
}

std::vector<Partition> partitions(int r)
{
    std::vector<Partition> out;
    Partition current;
    std::function<void(int, int)> go = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
            current.push_back(part);
            go(left - part, part);
            current.pop_back();
        }
    };
    go(r, r);
    return out;
}

Rational symmetric_quadratic_det(int n, const Rational& c2, const Rational& c11)
{
    ExactMat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = i == j ? c2 + c11 : c11;
    return det(m);
}

Rational symmetric_disc(const SymmetricForm& sf)
{
    const int n = sf.n;
    if (n < 1) throw DimensionError("symmetric form needs at least one variable");
    if (sf.r == 2) {
        const Rational c2 = sf.coefficient({2}), c11 = sf.coefficient({1, 1});
        return pow(c2, static_cast<unsigned long>(n - 1)) * (c2 + n * c11);
    }
    if (sf.r != 3) throw RangeError("closed symmetric discriminants cover degrees 2 and 3");
    const Rational c3 = sf.coefficient({3}), c21 = sf.coefficient({2, 1}), c111 = sf.coefficient({1, 1, 1});
    const Rational b1 = n * n * c111 + n * c21 + c3;
    const Rational b2 = n * c21 + 3 * c3;
    const Rational b3 = c3;
    Rational product = 1;
    for (int k = 0; k < n; ++k) {
        Rational a(n - 2 * k, n);
        a.canonicalize();
        Rational b(4 * k * (n - k), 27 * n * n);
        b.canonicalize();
        Rational factor = a * a * b1 * b3 * b3 + b * b2 * b2 * b2;
        product *= pow(factor, static_cast<unsigned long>(binomial(n - 1, k)));
    }
    // B_3^{(n-3) 2^{n-1}}; the exponent is negative for n = 2.
    long exponent = (n - 3) * (1L << (n - 1));
    if (exponent >= 0) return product * pow(b3, static_cast<unsigned long>(exponent));
    if (is_zero(b3)) throw PoleError("symmetric discriminant has a pole at C_3 = 0 for n = 2");
    return product / pow(b3, static_cast<unsigned long>(-exponent));
}

SymmetricForm symmetric_decomposition(const HomPoly& p)
{
    const int n = p.nvars(), r = p.degree();
    SymmetricForm out{n, r, {}};
    const auto parts = partitions(r);  // p_r first
    std::vector<HomPoly> columns;
    for (const auto& y : parts) {
        SymmetricForm single{n, r, {}};
        single.set(y, Rational(1));
        columns.push_back(single.expand());
    }
    std::vector<Exponent> rows;
    for (const auto& e : monomials_of_degree(n, r))
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) rows.push_back(e);
    // Gauss-Jordan on [columns | p] restricted to the orbit representatives.
    const std::size_t m = rows.size(), k = parts.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = columns[j].coeff(rows[i]);
        a[i][k] = p.coeff(rows[i]);
    }
    std::vector<std::size_t> pivot_of_row;
    std::size_t row = 0;
    for (std::size_t j = 0; j < k && row < m; ++j) {
        std::size_t piv = row;
        while (piv < m && is_zero(a[piv][j])) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        const Rational inv = 1 / a[row][j];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || is_zero(a[i][j])) continue;
            const Rational f = a[i][j];
            for (std::size_t t = 0; t <= k; ++t) a[i][t] -= f * a[row][t];
        }
        pivot_of_row.push_back(j);
        ++row;
    }
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i) out.set(parts[pivot_of_row[i]], a[i][k]);
    if (!(out.expand() == p)) throw ShapeError("form is not symmetric");
    return out;
}

Rational discriminant_via_symmetric(const HomPoly& p)
{
    const int n = p.nvars(), r = p.degree();
    const Rational ratio = reference_constant("symmetric-ratio", {n, r}, [&]() -> Rational {
        HomPoly f = fermat(n, r);
        return discriminant(f) / symmetric_disc(symmetric_decomposition(f));
    });
    return ratio * symmetric_disc(symmetric_decomposition(p));
}

Integer partition_count(int r)
{
    if (r < 0) return 0;
    // Euler's pentagonal recurrence for prod 1/(1 - q^k).
    std::vector<Integer> p(static_cast<std::size_t>(r) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= r; ++m) {
        Integer total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const bool plus = k % 2 == 1;
            total += plus ? p[m - g1] : Integer(-p[m - g1]);
            if (g2 <= m) total += plus ? p[m - g2] : Integer(-p[m - g2]);
        }
        p[m] = total;
    }
    return p[r];
}

}  // namespace resultants
