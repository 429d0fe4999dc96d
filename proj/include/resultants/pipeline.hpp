#pragma once

#include "resultants/hybrid.hpp"
#include "resultants/polyring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resultants {

enum class Method { automatic, sylvester, koszul, bezout, pfaffian, hybrid, trace };

std::string to_string(Method m);
Method parse_method(std::string_view name);

bool applicable(Method m, const PolySystem& sys, HybridVariant variant = HybridVariant::a);
std::vector<Method> applicable_methods(const PolySystem& sys);

// `automatic` picks sylvester for n = 2, hybrid for 3|r and 4|2, koszul for other equal degrees
// and trace for unequal degrees.
Method resolve(Method m, const PolySystem& sys);

Rational compute_resultant(const PolySystem& sys, Method m = Method::automatic, HybridVariant variant = HybridVariant::a);

}  // namespace resultants
