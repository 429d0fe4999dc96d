#include "resultants/schurtrace.hpp"
#include "resultants/calibration.hpp"

#include <map>
#include <numeric>

namespace resultants {

void for_each_contingency_table(const std::vector<long>& rowsums, const std::vector<long>& colsums,
                                const std::function<void(const Table&)>& visit)
{
    const std::size_t rows = rowsums.size(), cols = colsums.size();
    if (std::accumulate(rowsums.begin(), rowsums.end(), 0L) != std::accumulate(colsums.begin(), colsums.end(), 0L)) return;
    for (long s : rowsums)
        if (s < 0) return;
    for (long s : colsums)
        if (s < 0) return;
    if (rows == 0 || cols == 0) {
        visit(Table(rows, std::vector<long>(cols, 0)));
        return;
    }
    Table t(rows, std::vector<long>(cols, 0));
    std::vector<long> col_left = colsums;
    std::function<void(std::size_t, std::size_t, long)> fill = [&](std::size_t i, std::size_t j, long row_left) {
        if (j + 1 == cols) {
            // The last cell of a row is forced.
            if (row_left > col_left[j]) return;
            t[i][j] = row_left;
            col_left[j] -= row_left;
            if (i + 1 == rows) {
                if (std::all_of(col_left.begin(), col_left.end(), [](long c) { return c == 0; })) visit(t);
            } else {
                fill(i + 1, 0, rowsums[i + 1]);
            }
            col_left[j] += row_left;
            return;
        }
        // Later columns of this row must be able to absorb what is left.
        long capacity_after = 0;
        for (std::size_t q = j + 1; q < cols; ++q) capacity_after += col_left[q];
        const long low = std::max(0L, row_left - capacity_after);
        const long high = std::min(row_left, col_left[j]);
        for (long v = high; v >= low; --v) {
            t[i][j] = v;
            col_left[j] -= v;
            fill(i, j + 1, row_left - v);
            col_left[j] += v;
        }
    };
    fill(0, 0, rowsums[0]);
}

std::vector<Table> contingency_tables(const std::vector<long>& rowsums, const std::vector<long>& colsums)
{
    std::vector<Table> out;
    for_each_contingency_table(rowsums, colsums, [&](const Table& t) { out.push_back(t); });
    return out;
}

TruncSeries::TruncSeries(std::vector<int> bound) : bound_(std::move(bound))
{
    std::size_t total = 1;
    stride_.resize(bound_.size());
    for (std::size_t i = bound_.size(); i-- > 0;) {
        if (bound_[i] < 0) throw DegreeError("negative series bound");
        stride_[i] = total;
        total *= static_cast<std::size_t>(bound_[i] + 1);
    }
    coeffs_.assign(total, Rational(0));
}

std::size_t TruncSeries::index(const std::vector<int>& k) const
{
    if (k.size() != bound_.size()) throw DimensionError("series index has wrong length");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 0 || k[i] > bound_[i]) throw RangeError("series index outside the truncation box");
        flat += stride_[i] * static_cast<std::size_t>(k[i]);
    }
    return flat;
}

std::vector<int> TruncSeries::multi_index(std::size_t flat) const
{
    std::vector<int> k(bound_.size());
    for (std::size_t i = 0; i < bound_.size(); ++i) {
        k[i] = static_cast<int>(flat / stride_[i]);
        flat %= stride_[i];
    }
    return k;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries out(bound_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncSeries TruncSeries::exp() const
{
    if (!is_zero(coeffs_[0])) throw DomainError("exp needs a series without constant term");
    const std::size_t size = coeffs_.size(), n = bound_.size();
    std::vector<std::vector<int>> idx(size);
    std::vector<int> grade(size);
    for (std::size_t f = 0; f < size; ++f) {
        idx[f] = multi_index(f);
        grade[f] = std::accumulate(idx[f].begin(), idx[f].end(), 0);
    }
    std::vector<std::size_t> support;
    for (std::size_t f = 1; f < size; ++f)
        if (!is_zero(coeffs_[f])) support.push_back(f);

    // |v| E_v = sum_{0 < u <= v} |u| S_u E_{v-u}
    TruncSeries out(bound_);
    out.coeffs_[0] = 1;
    Rational acc, term;
    for (std::size_t v = 1; v < size; ++v) {
        acc = 0;
        for (std::size_t u : support) {
            if (u > v) break;
            bool fits = true;
            for (std::size_t i = 0; i < n && fits; ++i) fits = idx[u][i] <= idx[v][i];
            if (!fits) continue;
            const Rational& e = out.coeffs_[v - u];
            if (is_zero(e)) continue;
            term = coeffs_[u] * e;
            acc += term * grade[u];
        }
        out.coeffs_[v] = acc / grade[v];
    }
    return out;
}

Rational TruncSeries::exp_coeff_by_partitions(const std::vector<int>& k) const
{
    const int total = std::accumulate(k.begin(), k.end(), 0);
    if (total == 0) return 1;
    // ordered[w] after m rounds: sum over ordered m-part partitions of w into nonzero parts of prod S.
    TruncSeries sub(k);
    std::vector<Rational> ordered(sub.size(), Rational(0));
    ordered[0] = 1;
    Rational result = 0, factorial = 1;
    for (int m = 1; m <= total; ++m) {
        std::vector<Rational> next(sub.size(), Rational(0));
        for (std::size_t w = 0; w < sub.size(); ++w) {
            if (is_zero(ordered[w])) continue;
            const auto wi = sub.multi_index(w);
            for (std::size_t u = 1; u < sub.size(); ++u) {
                auto ui = sub.multi_index(u);
                bool fits = true;
                for (std::size_t i = 0; i < ui.size() && fits; ++i) fits = wi[i] + ui[i] <= k[i];
                if (!fits) continue;
                const Rational& s = (*this)[ui];
                if (is_zero(s)) continue;
                for (std::size_t i = 0; i < ui.size(); ++i) ui[i] += wi[i];
                next[sub.index(ui)] += ordered[w] * s;
            }
        }
        ordered = std::move(next);
        factorial *= m;
        result += ordered[sub.index(k)] / factorial;
    }
    return result;
}

namespace {

struct Power {
    int n = 0;
    int side = 0;  // exponents range over 0..side-1 per variable
    std::vector<std::vector<int>> exps;
    std::vector<Integer> values;
    std::vector<int> dense;  // flat exponent -> position in exps, or -1

    int lookup(const std::vector<long>& e) const
    {
        std::size_t flat = 0;
        for (int i = 0; i < n; ++i) {
            if (e[i] >= side) return -1;
            flat = flat * static_cast<std::size_t>(side) + static_cast<std::size_t>(e[i]);
        }
        return dense[flat];
    }
};

// Exact determinant of a small integer matrix; closed forms up to 3 x 3.
long small_det(std::vector<std::vector<long>>& a)
{
    const std::size_t m = a.size();
    switch (m) {
    case 0:
        return 1;
    case 1:
        return a[0][0];
    case 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    case 3:
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    default:
        break;
    }
    std::vector<std::vector<__int128>> b(m, std::vector<__int128>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b[i][j] = a[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (b[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < m && b[p][k] == 0) ++p;
            if (p == m) return 0;
            std::swap(b[k], b[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j) b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
        prev = b[k][k];
    }
    return static_cast<long>(sign * b[m - 1][m - 1]);
}

}  // namespace

struct TraceEngine::Impl {
    int n = 0;
    std::vector<int> r;
    std::vector<long> d;
    std::vector<Integer> scale;  // f_i * scale_i has integer coefficients
    std::vector<HomPoly> scaled;
    std::vector<std::vector<HomPoly>> poly_powers;
    std::map<std::pair<int, int>, Power> powers;
    std::map<std::tuple<int, int, unsigned>, std::vector<int>> restricted;

    const Power& power(int i, int k)
    {
        auto key = std::make_pair(i, k);
        if (auto it = powers.find(key); it != powers.end()) return it->second;
        auto& list = poly_powers[i];
        while (static_cast<int>(list.size()) <= k) list.push_back(list.back() * scaled[i]);
        const HomPoly& p = list[k];
        Power pw;
        pw.n = n;
        pw.side = r[i] * k + 1;
        std::size_t cells = 1;
        for (int v = 0; v < n; ++v) cells *= static_cast<std::size_t>(pw.side);
        pw.dense.assign(cells, -1);
        for (const auto& [e, c] : p.terms()) {
            std::size_t flat = 0;
            for (int v = 0; v < n; ++v) flat = flat * static_cast<std::size_t>(pw.side) + static_cast<std::size_t>(e[v]);
            pw.dense[flat] = static_cast<int>(pw.exps.size());
            pw.exps.push_back(e);
            pw.values.push_back(c.get_num());
        }
        return powers.emplace(key, std::move(pw)).first->second;
    }

    const std::vector<int>& restricted_support(int i, int k, unsigned mask)
    {
        auto key = std::make_tuple(i, k, mask);
        if (auto it = restricted.find(key); it != restricted.end()) return it->second;
        const Power& pw = power(i, k);
        std::vector<int> keep;
        for (std::size_t t = 0; t < pw.exps.size(); ++t) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v) inside = (mask >> v & 1u) || pw.exps[t][v] == 0;
            if (inside) keep.push_back(static_cast<int>(t));
        }
        return restricted.emplace(key, std::move(keep)).first->second;
    }

    Rational trace(const std::vector<int>& k)
    {
        if (static_cast<int>(k.size()) != n) throw DimensionError("trace index has wrong length");
        std::vector<int> S;
        unsigned mask = 0;
        Rational factor = 1;
        for (int i = 0; i < n; ++i) {
            if (k[i] < 0) throw DomainError("negative trace index");
            if (k[i] > 0) {
                S.push_back(i);
                mask |= 1u << i;
            } else {
                factor *= r[i];
            }
        }
        if (S.empty()) throw DomainError("trace index must be nonzero");
        const std::size_t m = S.size();
        std::vector<long> remaining(n, 0);
        for (int s : S) remaining[s] = static_cast<long>(r[s]) * k[s];
        const std::vector<long> target = remaining;

        std::vector<const Power*> pw(m);
        std::vector<const std::vector<int>*> support(m);
        for (std::size_t t = 0; t < m; ++t) {
            pw[t] = &power(S[t], k[S[t]]);
            support[t] = &restricted_support(S[t], k[S[t]], mask);
        }

        Integer total = 0;
        std::vector<Integer> prefix(m + 1);
        prefix[0] = 1;
        std::vector<const std::vector<int>*> rows(m);
        Integer product;
        std::vector<std::vector<long>> w(m > 0 ? m - 1 : 0, std::vector<long>(m > 0 ? m - 1 : 0));

        auto finish = [&]() {
            for (std::size_t a = 1; a < m; ++a)
                for (std::size_t b = 1; b < m; ++b)
                    w[a - 1][b - 1] = (a == b ? target[S[a]] : 0) - (*rows[a])[S[b]];
            long weight = small_det(w);
            if (weight == 0) return;
            if (weight > 0) mpz_addmul_ui(total.get_mpz_t(), prefix[m].get_mpz_t(), static_cast<unsigned long>(weight));
            else mpz_submul_ui(total.get_mpz_t(), prefix[m].get_mpz_t(), static_cast<unsigned long>(-weight));
        };

        std::function<void(std::size_t)> row = [&](std::size_t t) {
            if (t + 1 == m) {
                int pos = pw[t]->lookup(remaining);
                if (pos < 0) return;
                rows[t] = &pw[t]->exps[pos];
                mpz_mul(prefix[m].get_mpz_t(), prefix[t].get_mpz_t(), pw[t]->values[pos].get_mpz_t());
                finish();
                return;
            }
            for (int pos : *support[t]) {
                const auto& e = pw[t]->exps[pos];
                bool fits = true;
                for (int s : S)
                    if (e[s] > remaining[s]) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                for (int s : S) remaining[s] -= e[s];
                rows[t] = &e;
                mpz_mul(prefix[t + 1].get_mpz_t(), prefix[t].get_mpz_t(), pw[t]->values[pos].get_mpz_t());
                row(t + 1);
                for (int s : S) remaining[s] += e[s];
            }
        };
        row(0);

        Integer denominator = 1;
        for (int s : S) {
            denominator *= k[s];
            Integer sp;
            mpz_pow_ui(sp.get_mpz_t(), scale[s].get_mpz_t(), static_cast<unsigned long>(k[s]));
            denominator *= sp;
        }
        Rational value(total, denominator);
        value.canonicalize();
        return value * factor;
    }
};

TraceEngine::TraceEngine(const PolySystem& sys) : impl_(std::make_unique<Impl>())
{
    impl_->n = sys.nvars();
    if (impl_->n > 30) throw DimensionError("trace engine supports at most 30 variables");
    impl_->r = sys.degrees();
    impl_->d = sys.partial_degrees();
    for (int i = 0; i < impl_->n; ++i) {
        if (impl_->r[i] < 1) throw DegreeError("traces need positive degrees");
        Integer l = 1;
        for (const auto& [e, c] : sys[i].terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        impl_->scale.push_back(l);
        impl_->scaled.push_back(sys[i].scaled(Rational(l)));
        impl_->poly_powers.push_back({HomPoly::constant(impl_->n, Rational(1))});
    }
}

TraceEngine::~TraceEngine() = default;
TraceEngine::TraceEngine(TraceEngine&&) noexcept = default;
TraceEngine& TraceEngine::operator=(TraceEngine&&) noexcept = default;

Rational TraceEngine::trace(const std::vector<int>& k) { return impl_->trace(k); }

TruncSeries TraceEngine::traces_to_resultant_degree()
{
    std::vector<int> bound(impl_->d.begin(), impl_->d.end());
    TruncSeries t(bound);
    for (std::size_t f = 1; f < t.size(); ++f) t.at(f) = trace(t.multi_index(f));
    return t;
}

Rational trace(const PolySystem& sys, const std::vector<int>& k) { return TraceEngine(sys).trace(k); }

Rational graded_trace(const PolySystem& sys, int m)
{
    if (m < 1) throw DomainError("graded trace needs a positive grade");
    TraceEngine engine(sys);
    const int n = sys.nvars();
    Rational total = 0;
    std::vector<int> k(n, 0);
    std::function<void(int, int)> go = [&](int i, int left) {
        if (i == n - 1) {
            k[i] = left;
            total += engine.trace(k);
            return;
        }
        for (int a = left; a >= 0; --a) {
            k[i] = a;
            go(i + 1, left - a);
        }
    };
    go(0, m);
    return total * m;
}

Rational schur_polynomial(const std::vector<Rational>& x, int m)
{
    if (m < 0) return 0;
    TruncSeries s({m});
    for (int k = 1; k <= m && k <= static_cast<int>(x.size()); ++k) s[{k}] = x[k - 1];
    return s.exp()[{m}];
}

namespace {

Rational raw_trace_resultant(const PolySystem& sys)
{
    TraceEngine engine(sys);
    TruncSeries e = (-engine.traces_to_resultant_degree()).exp();
    std::vector<long> d = sys.partial_degrees();
    std::vector<int> top(d.begin(), d.end());
    const long total = std::accumulate(d.begin(), d.end(), 0L);
    return total % 2 == 0 ? e[top] : Rational(-e[top]);
}

}  // namespace

Rational resultant_trace(const PolySystem& sys)
{
    const std::vector<int> degrees = sys.degrees();
    Rational raw = raw_trace_resultant(sys);
    return raw / reference_constant("trace", degrees, [&]() -> Rational { return raw_trace_resultant(reference_system(degrees)); });
}

}  // namespace resultants
