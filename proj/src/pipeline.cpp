#include "resultants/pipeline.hpp"
#include "resultants/bezout.hpp"
#include "resultants/koszul.hpp"
#include "resultants/schurtrace.hpp"
#include "resultants/sylvester.hpp"

#include <array>
#include <utility>

namespace resultants {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> names{{
    {Method::automatic, "auto"},
    {Method::sylvester, "sylvester"},
    {Method::koszul, "koszul"},
    {Method::bezout, "bezout"},
    {Method::pfaffian, "pfaffian"},
    {Method::hybrid, "hybrid"},
    {Method::trace, "trace"},
}};

}  // namespace

std::string to_string(Method m)
{
    for (const auto& [method, name] : names)
        if (method == m) return std::string(name);
    return "unknown";
}

Method parse_method(std::string_view name)
{
    for (const auto& [method, label] : names)
        if (label == name) return method;
    throw ParseError("unknown method '" + std::string(name) + "'");
}

bool applicable(Method m, const PolySystem& sys, HybridVariant variant)
{
    const int n = sys.nvars();
    const bool equal = sys.equal_degrees();
    const int r = sys[0].degree();
    for (int d : sys.degrees())
        if (d < 1) return false;
    switch (m) {
    case Method::automatic:
    case Method::trace:
        return true;
    case Method::sylvester:
        return n == 2;
    case Method::koszul:
        return n >= 2 && equal;
    case Method::bezout:
        return n == 2 && equal && r <= 3;
    case Method::pfaffian:
        return n == 3 && equal && r == 2;
    case Method::hybrid:
        return equal && ((n == 3 && r >= 2) || (n == 4 && r == 2 && variant == HybridVariant::a));
    }
    return false;
}

std::vector<Method> applicable_methods(const PolySystem& sys)
{
    std::vector<Method> out;
    for (Method m : {Method::sylvester, Method::koszul, Method::bezout, Method::pfaffian, Method::hybrid, Method::trace})
        if (applicable(m, sys)) out.push_back(m);
    return out;
}

Method resolve(Method m, const PolySystem& sys)
{
    if (m != Method::automatic) return m;
    if (sys.nvars() == 2) return Method::sylvester;
    if (applicable(Method::hybrid, sys)) return Method::hybrid;
    if (applicable(Method::koszul, sys)) return Method::koszul;
    return Method::trace;
}

Rational compute_resultant(const PolySystem& sys, Method m, HybridVariant variant)
{
    m = resolve(m, sys);
    for (int d : sys.degrees())
        if (d < 1) throw DegreeError("resultants need positive degrees");
    switch (m) {
    case Method::sylvester:
        return resultant_2(sys);
    case Method::koszul:
        return resultant_koszul(sys);
    case Method::bezout:
        return resultant_bezout(sys);
    case Method::pfaffian:
        return resultant_pfaffian_32(sys);
    case Method::hybrid:
        return resultant_hybrid(sys, variant);
    case Method::trace:
    case Method::automatic:
        return resultant_trace(sys);
    }
    return resultant_trace(sys);
}

}  // namespace resultants
