#include "resultants/koszul.hpp"
#include "resultants/calibration.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace resultants {

std::vector<std::vector<int>> theta_subsets(int n, int q)
{
    std::vector<std::vector<int>> out;
    if (q < 0 || q > n) return out;
    std::vector<int> current(q);
    for (int i = 0; i < q; ++i) current[i] = i;
    while (true) {
        out.push_back(current);
        int i = q - 1;
        while (i >= 0 && current[i] == n - q + i) --i;
        if (i < 0) break;
        ++current[i];
        for (int j = i + 1; j < q; ++j) current[j] = current[j - 1] + 1;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

// theta_S carries the shuffle sign of (S, complement) so the worked 3|2 differentials come out verbatim.
int theta_basis_sign(const std::vector<int>& subset)
{
    int shift = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) shift += subset[i] - static_cast<int>(i);
    return shift % 2 == 0 ? 1 : -1;
}

std::size_t space_dim(int n, int p, int q) { return binomial(p + n - 1, n - 1) * binomial(n, q); }

}  // namespace

long koszul_euler_characteristic(int n, int r, int R)
{
    long chi = 0;
    for (int k = 0; k <= n && R - k * r >= 0; ++k) {
        long dim = static_cast<long>(space_dim(n, R - k * r, k));
        chi += (k % 2 == 0) ? dim : -dim;
    }
    return chi;
}

int minimal_koszul_degree(int n, int r)
{
    for (int R = 1;; ++R)
        if (koszul_euler_characteristic(n, r, R) == 0) return R;
}

KoszulComplex build_complex(const PolySystem& sys, int R)
{
    if (!sys.equal_degrees()) throw DegreeError("Koszul complex needs equal degrees");
    if (R < 0) throw DegreeError("negative right degree");
    KoszulComplex c;
    c.n = sys.nvars();
    c.r = sys[0].degree();
    c.R = R;
    const int n = c.n, r = c.r;
    int top = 0;
    while (top + 1 <= n && R - (top + 1) * r >= 0) ++top;
    for (int k = top; k >= 0; --k) c.spaces.push_back({R - k * r, k, space_dim(n, R - k * r, k)});
    c.chi = koszul_euler_characteristic(n, r, R);

    for (std::size_t s = 0; s + 1 < c.spaces.size(); ++s) {
        const auto& src = c.spaces[s];
        const auto& dst = c.spaces[s + 1];
        MonomialBasis src_monomials(n, src.p), dst_monomials(n, dst.p);
        auto src_subsets = theta_subsets(n, src.q), dst_subsets = theta_subsets(n, dst.q);
        std::map<std::vector<int>, std::size_t> dst_subset_index;
        for (std::size_t t = 0; t < dst_subsets.size(); ++t) dst_subset_index.emplace(dst_subsets[t], t);

        ExactMat d(src.dim, dst.dim);
        for (std::size_t a = 0; a < src_monomials.size(); ++a) {
            HomPoly m = HomPoly::monomial(src_monomials[a], Rational(1));
            for (std::size_t t = 0; t < src_subsets.size(); ++t) {
                const auto& S = src_subsets[t];
                const std::size_t row = a * src_subsets.size() + t;
                for (std::size_t pos = 0; pos < S.size(); ++pos) {
                    std::vector<int> rest = S;
                    rest.erase(rest.begin() + static_cast<long>(pos));
                    int sign = (pos % 2 == 0 ? 1 : -1) * theta_basis_sign(S) * theta_basis_sign(rest);
                    const std::size_t col_subset = dst_subset_index.at(rest);
                    const HomPoly product = m * sys[S[pos]];
                    for (const auto& [e, coeff] : product.terms()) {
                        const std::size_t col = dst_monomials.index_of(e) * dst_subsets.size() + col_subset;
                        d(row, col) += sign > 0 ? coeff : Rational(-coeff);
                    }
                }
            }
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

bool nilpotency_check(const KoszulComplex& c)
{
    for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i)
        if (!(c.diffs[i] * c.diffs[i + 1]).is_zero_matrix()) return false;
    return true;
}

bool is_exact(const KoszulComplex& c)
{
    const std::size_t p = c.spaces.size();
    std::vector<std::size_t> ranks;
    for (const auto& d : c.diffs) ranks.push_back(rank(d));
    for (std::size_t i = 0; i < p; ++i) {
        std::size_t in = i > 0 ? ranks[i - 1] : 0;
        std::size_t out = i + 1 < p ? ranks[i] : 0;
        if (in + out != c.spaces[i].dim) return false;
    }
    return true;
}

namespace {

// Sign of the permutation listing chosen ascending, then its complement ascending.
int shuffle_sign(const IndexSet& chosen, std::size_t total)
{
    std::vector<bool> in(total, false);
    for (std::size_t j : chosen) in[j] = true;
    long inversions = 0;
    std::size_t complement_seen = 0;
    for (std::size_t j = 0; j < total; ++j) {
        if (in[j]) inversions += static_cast<long>(complement_seen);
        else ++complement_seen;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

struct Attempt {
    enum class Outcome { value, zero, stuck } outcome;
    Rational value;
};

Attempt run_attempt(const KoszulComplex& c, std::mt19937_64* shuffle)
{
    const std::size_t p = c.spaces.size();
    IndexSet complement(c.spaces[0].dim);
    for (std::size_t i = 0; i < complement.size(); ++i) complement[i] = i;
    Rational value = 1;
    int sign = 1;
    for (std::size_t i = 0; i + 1 < p; ++i) {
        const ExactMat& d = c.diffs[i];
        IndexSet order(d.cols());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        if (shuffle) std::shuffle(order.begin(), order.end(), *shuffle);
        IndexSet chosen = pivot_columns(d, complement, order);
        // 1-based position of this minor is i+1; exponent (-1)^{p + (i+1) + 1}.
        const bool numerator = (p + i) % 2 == 0;
        if (chosen.size() < complement.size()) return {numerator ? Attempt::Outcome::zero : Attempt::Outcome::stuck, 0};
        Rational m = minor(d, complement, chosen);
        if (numerator) value *= m;
        else value /= m;
        sign *= shuffle_sign(chosen, d.cols());
        IndexSet next;
        std::vector<bool> taken(d.cols(), false);
        for (std::size_t j : chosen) taken[j] = true;
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!taken[j]) next.push_back(j);
        complement = std::move(next);
    }
    if (!complement.empty()) return {Attempt::Outcome::stuck, 0};
    return {Attempt::Outcome::value, sign > 0 ? value : Rational(-value)};
}

}  // namespace

Rational det_of_complex(const KoszulComplex& c, const SubsetChoice& choice)
{
    if (c.chi != 0) throw EulerError("Euler characteristic " + std::to_string(c.chi) + " is not zero");
    if (c.spaces.size() < 2) throw EulerError("complex has a single space");
    std::mt19937_64 rng(choice.shuffle_seed.value_or(0x5eed));
    for (int attempt = 0; attempt <= choice.retries; ++attempt) {
        const bool shuffled = choice.shuffle_seed.has_value() || attempt > 0;
        Attempt a = run_attempt(c, shuffled ? &rng : nullptr);
        if (a.outcome == Attempt::Outcome::value) return a.value;
        if (a.outcome == Attempt::Outcome::zero) return 0;
    }
    throw DegenerateError("no subset choice gives nonzero denominator minors");
}

Rational resultant_koszul(const PolySystem& sys, int R)
{
    if (!sys.equal_degrees()) throw DegreeError("Koszul pipeline needs equal degrees");
    KoszulComplex c = build_complex(sys, R);
    Rational raw;
    try {
        raw = det_of_complex(c);
    } catch (const DegenerateError&) {
        // Past the regularity bound the complex is exact exactly when the resultant is nonzero.
        if (!is_exact(c)) return 0;
        throw;
    }
    const int n = sys.nvars(), r = sys[0].degree();
    return raw / reference_constant("koszul", {n, r, R}, [&]() -> Rational {
        return det_of_complex(build_complex(reference_system(std::vector<int>(n, r)), R));
    });
}

Rational resultant_koszul(const PolySystem& sys)
{
    if (!sys.equal_degrees()) throw DegreeError("Koszul pipeline needs equal degrees");
    return resultant_koszul(sys, minimal_koszul_degree(sys.nvars(), sys[0].degree()));
}

}  // namespace resultants
