#pragma once

#include "resultants/pipeline.hpp"
#include "resultants/polyring.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace resultants {

using Rng = std::mt19937_64;

// Integer coefficients uniform in [lo, hi] on every monomial.
HomPoly random_form(int n, int r, Rng& rng, int lo = -9, int hi = 9);
PolySystem random_system(const std::vector<int>& degrees, Rng& rng, int lo = -9, int hi = 9);
PolySystem random_system(int n, int r, Rng& rng, int lo = -9, int hi = 9);

// Random forms corrected on a pure power x_j^r (root_j != 0) to vanish at `root`.
PolySystem singular_system(int n, int r, const std::vector<Rational>& root, Rng& rng);

struct MethodOutcome {
    Method method;
    std::optional<Rational> value;
    std::string error;  // empty when value is set
    bool degenerate = false;
};

struct CrossReport {
    std::string shape;
    std::vector<MethodOutcome> outcomes;
    bool agree = false;  // every method returned, all equal
    std::string summary() const;
};

CrossReport cross_validate(const PolySystem& sys, const std::vector<Method>& methods);

struct CrossRun {
    std::string shape;
    int requested = 0;
    int checked = 0;
    int rejected = 0;  // resampled after a degenerate pivot
    int mismatches = 0;
    std::vector<CrossReport> failures;
    double rejection_rate() const { return requested ? static_cast<double>(rejected) / (checked + rejected) : 0.0; }
};

// `methods` empty means every applicable method; rejected draws do not count towards `count`.
CrossRun cross_validate_random(const std::vector<int>& degrees, int count, std::uint64_t seed, std::vector<Method> methods = {});

}  // namespace resultants
