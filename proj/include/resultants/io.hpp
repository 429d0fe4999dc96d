#pragma once

#include "resultants/polyring.hpp"

#include <string>
#include <string_view>

namespace resultants {

// {"n": 2, "degree": 3, "coeffs": {"3,0": "1", "1,2": "-1/2"}}
std::string poly_to_json(const HomPoly& p);
HomPoly poly_from_json(std::string_view text);

// {"n": 2, "polys": [poly, ...]}
std::string system_to_json(const PolySystem& sys);
PolySystem system_from_json(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace resultants
