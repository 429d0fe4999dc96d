#include "resultants/io.hpp"
#include "resultants/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace resultants {

namespace {

using nlohmann::json;

json poly_json(const HomPoly& p)
{
    json coeffs = json::object();
    for (const auto& [e, c] : p.terms()) {
        std::string key;
        for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
        coeffs[key] = to_string(c);
    }
    return {{"n", p.nvars()}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

Exponent parse_key(const std::string& key, int n)
{
    Exponent e;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad exponent key '" + key + "'");
        e.push_back(std::stoi(part));
    }
    if (static_cast<int>(e.size()) != n) throw ParseError("exponent key '" + key + "' has wrong length");
    return e;
}

HomPoly poly_from(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("degree") || !j.contains("coeffs"))
        throw ParseError("polynomial object needs n, degree and coeffs");
    const int n = j.at("n").get<int>();
    const int r = j.at("degree").get<int>();
    if (n < 1 || r < 0) throw ParseError("bad n or degree");
    std::vector<std::pair<Exponent, Rational>> entries;
    for (const auto& [key, value] : j.at("coeffs").items()) {
        if (!value.is_string()) throw ParseError("coefficients must be rational strings");
        entries.emplace_back(parse_key(key, n), parse_rational(value.get<std::string>()));
    }
    try {
        return make_poly(n, r, entries);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json parse(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::string poly_to_json(const HomPoly& p) { return poly_json(p).dump(); }

HomPoly poly_from_json(std::string_view text)
{
    try {
        return poly_from(parse(text));
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string system_to_json(const PolySystem& sys)
{
    json polys = json::array();
    for (const auto& p : sys.polys()) polys.push_back(poly_json(p));
    return json{{"n", sys.nvars()}, {"polys", polys}}.dump();
}

PolySystem system_from_json(std::string_view text)
{
    try {
        const json j = parse(text);
        if (!j.is_object() || !j.contains("polys") || !j.contains("n")) throw ParseError("system object needs n and polys");
        std::vector<HomPoly> polys;
        for (const auto& p : j.at("polys")) polys.push_back(poly_from(p));
        if (static_cast<int>(polys.size()) != j.at("n").get<int>()) throw ParseError("polys length differs from n");
        return PolySystem(std::move(polys));
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace resultants
