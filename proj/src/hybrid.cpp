#include "resultants/hybrid.hpp"
#include "resultants/calibration.hpp"

namespace resultants {

Rational resultant_hybrid(const PolySystem& sys, HybridVariant variant)
{
    Rational raw = det(hybrid_matrix(sys, variant));
    const std::vector<int> degrees = sys.degrees();
    const std::string method = variant == HybridVariant::a ? "hybrid-a" : "hybrid-b";
    return raw / reference_constant(method, degrees, [&]() -> Rational { return det(hybrid_matrix(reference_system(degrees), variant)); });
}

}  // namespace resultants
