#pragma once

#include "resultants/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace resultants {

// Raw value of a method on the reference system {x_i^{r_i}}, computed once per (method, shape).
// Every method divides by this so that all of them agree on sign and scale.
Rational reference_constant(const std::string& method, const std::vector<int>& shape,
                            const std::function<Rational()>& compute);

}  // namespace resultants
