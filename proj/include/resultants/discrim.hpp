#pragma once

#include "resultants/pipeline.hpp"
#include "resultants/polyring.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace resultants {

template <class C>
BasicPolySystem<C> gradient_system(const BasicHomPoly<C>& p)
{
    if (p.degree() < 2) throw DegreeError("gradient system needs degree at least 2");
    std::vector<BasicHomPoly<C>> polys;
    for (int i = 0; i < p.nvars(); ++i) polys.push_back(p.partial(i));
    return BasicPolySystem<C>(std::move(polys));
}

// r^{((r-1)^n - (-1)^n)/r}: the gradient resultant divided by this reproduces the classical
// discriminant coefficients and is positive on the Fermat form.
Integer gradient_normalization(int n, int r);

Rational discriminant(const HomPoly& p, Method m = Method::automatic);

long discriminant_degree(int n, int r);

enum class InvariantTag { i4_23, i2_24, i3_24, i4_25, i4_33, i6_33 };

std::string to_string(InvariantTag tag);
InvariantTag parse_invariant_tag(std::string_view text);  // "I4@2|3" and similar
std::vector<InvariantTag> all_invariant_tags();
int invariant_nvars(InvariantTag tag);
int invariant_form_degree(InvariantTag tag);
int invariant_degree(InvariantTag tag);

Rational invariant(const HomPoly& p, InvariantTag tag);

// I4 for 2|3, I2^3 - 6 I3^2 for 2|4, 32 I4^3 + 3 I6^2 for 3|3, before any rescaling.
Rational discriminant_via_invariants(const HomPoly& p);

// Constant c with discriminant(p) = c * discriminant_via_invariants(p), fixed on the Fermat form.
Rational invariant_discriminant_ratio(int n, int r);

using Partition = std::vector<int>;  // weakly decreasing positive parts

// S = sum_Y C_Y p_Y, p_Y = prod_i p_{Y_i}, p_k the power sums of n variables.
struct SymmetricForm {
    int n = 0;
    int r = 0;
    std::map<Partition, Rational> C;

    Rational coefficient(const Partition& y) const;
    void set(const Partition& y, const Rational& value);
    HomPoly expand() const;
};

std::vector<Partition> partitions(int r);

// Closed product formulas for r = 2 and r = 3.
Rational symmetric_disc(const SymmetricForm& sf);

// The n x n matrix with C_2 + C_11 on the diagonal and C_11 elsewhere.
Rational symmetric_quadratic_det(int n, const Rational& c2, const Rational& c11);

Integer partition_count(int r);

// Some power-sum decomposition of a symmetric form, preferring the highest power sums;
// ShapeError when p is not symmetric.
SymmetricForm symmetric_decomposition(const HomPoly& p);

// symmetric_disc rescaled to agree with discriminant() (constant fixed on the Fermat form).
Rational discriminant_via_symmetric(const HomPoly& p);

}  // namespace resultants
