#pragma once

#include "resultants/exactla.hpp"
#include "resultants/polyring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace resultants {

// Omega(p, q): polynomials of degree p times q-fold products of the odd variables theta.
struct KoszulSpace {
    int p = 0;
    int q = 0;
    std::size_t dim = 0;
};

struct KoszulComplex {
    int n = 0;
    int r = 0;
    int R = 0;
    std::vector<KoszulSpace> spaces;  // left to right, q decreasing
    std::vector<ExactMat> diffs;      // diffs[i] maps spaces[i] to spaces[i+1], row-vector convention
    long chi = 0;
};

// q-subsets of {0..n-1} as ascending tuples, listed in descending lexicographic order.
std::vector<std::vector<int>> theta_subsets(int n, int q);

long koszul_euler_characteristic(int n, int r, int R);
int minimal_koszul_degree(int n, int r);

KoszulComplex build_complex(const PolySystem& sys, int R);

bool nilpotency_check(const KoszulComplex& c);

bool is_exact(const KoszulComplex& c);

// How denominator-minor columns are picked: natural order, or a seeded shuffle for re-runs.
struct SubsetChoice {
    std::optional<std::uint64_t> shuffle_seed;
    int retries = 8;
};

// Alternating product of minors with the sign refinement prod_i sgn(sigma_i, complement),
// which makes the value independent of the admissible subset choice.
Rational det_of_complex(const KoszulComplex& c, const SubsetChoice& choice = {});

Rational resultant_koszul(const PolySystem& sys);
Rational resultant_koszul(const PolySystem& sys, int R);

}  // namespace resultants
