#pragma once

#include "resultants/polyring.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace resultants {

using Table = std::vector<std::vector<long>>;

// Non-negative integer matrices with the given row and column sums.
void for_each_contingency_table(const std::vector<long>& rowsums, const std::vector<long>& colsums,
                                const std::function<void(const Table&)>& visit);
std::vector<Table> contingency_tables(const std::vector<long>& rowsums, const std::vector<long>& colsums);

// Truncated multivariate power series: coefficients at multi-indices 0 <= k <= bound.
class TruncSeries {
public:
    explicit TruncSeries(std::vector<int> bound);

    std::size_t nvars() const { return bound_.size(); }
    const std::vector<int>& bound() const { return bound_; }
    std::size_t size() const { return coeffs_.size(); }

    const Rational& operator[](const std::vector<int>& k) const { return coeffs_[index(k)]; }
    Rational& operator[](const std::vector<int>& k) { return coeffs_[index(k)]; }
    const Rational& at(std::size_t flat) const { return coeffs_[flat]; }
    Rational& at(std::size_t flat) { return coeffs_[flat]; }

    std::vector<int> multi_index(std::size_t flat) const;
    std::size_t index(const std::vector<int>& k) const;

    TruncSeries operator-() const;

    // exp of a series with zero constant term, through the Euler-operator recurrence.
    TruncSeries exp() const;

    // Same coefficient of exp computed literally as a sum over ordered vector partitions.
    Rational exp_coeff_by_partitions(const std::vector<int>& k) const;

private:
    std::vector<int> bound_;
    std::vector<std::size_t> stride_;
    std::vector<Rational> coeffs_;
};

// Division-free trace evaluation with cached integer powers of the (scaled) equations.
class TraceEngine {
public:
    explicit TraceEngine(const PolySystem& sys);
    ~TraceEngine();
    TraceEngine(TraceEngine&&) noexcept;
    TraceEngine& operator=(TraceEngine&&) noexcept;

    Rational trace(const std::vector<int>& k);

    // All T_k with 0 <= k <= d, d_i = prod_j r_j / r_i, as a series (zero constant term).
    TruncSeries traces_to_resultant_degree();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Rational trace(const PolySystem& sys, const std::vector<int>& k);

// |k|-graded trace in the normalization of the single-grade Schur formula: m * sum_{|k| = m} T_k.
Rational graded_trace(const PolySystem& sys, int m);

// Coefficient of t^m in exp(sum_k x_k t^k) for x_1..x_m.
Rational schur_polynomial(const std::vector<Rational>& x, int m);

Rational resultant_trace(const PolySystem& sys);

}  // namespace resultants
