#include "resultants/bitmeter.hpp"
#include "resultants/crosscheck.hpp"
#include "resultants/discrim.hpp"
#include "resultants/errors.hpp"
#include "resultants/io.hpp"
#include "resultants/pipeline.hpp"
#include "resultants/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace resultants;

namespace {

struct Options {
    std::string method = "auto";
    std::string variant = "a";
    std::string via = "gradient";
    std::uint64_t seed = 1;
    int precision = 50;

    std::string input;
    bool dump_canonical = false;

    std::string series_kind;
    int order = 4;
    int root_degree = 2;
    std::string eps = "1/10";
    std::string a = "1", b = "1", c = "1", hbar = "1";

    std::string shape;
    int count = 20;
    std::vector<std::string> shapes;
    std::vector<std::string> methods;
    int bits = 0;
};

HybridVariant parse_variant(const std::string& v)
{
    if (v == "a") return HybridVariant::a;
    if (v == "b") return HybridVariant::b;
    throw ParseError("variant must be a or b");
}

// "3|2" for equal degrees, "3|2,2,3" for a degree list.
std::vector<int> parse_shape(const std::string& text)
{
    const auto bar = text.find('|');
    if (bar == std::string::npos) throw ParseError("shape must look like n|r");
    try {
        const int n = std::stoi(text.substr(0, bar));
        std::vector<int> degrees;
        std::istringstream in(text.substr(bar + 1));
        std::string part;
        while (std::getline(in, part, ',')) degrees.push_back(std::stoi(part));
        if (n < 1 || degrees.empty()) throw ParseError("bad shape '" + text + "'");
        if (degrees.size() == 1) degrees.assign(static_cast<std::size_t>(n), degrees.front());
        if (static_cast<int>(degrees.size()) != n) throw ParseError("degree list length differs from n");
        return degrees;
    } catch (const std::logic_error&) {
        throw ParseError("bad shape '" + text + "'");
    }
}

std::string real_string(const Real& x, int digits)
{
    std::ostringstream out;
    out << std::setprecision(digits) << x;
    return out.str();
}

int cmd_resultant(const Options& o)
{
    const PolySystem sys = system_from_json(read_file(o.input));
    if (o.dump_canonical) {
        std::cout << system_to_json(sys) << '\n';
        return 0;
    }
    const Method m = resolve(parse_method(o.method), sys);
    const HybridVariant v = parse_variant(o.variant);
    if (!applicable(m, sys, v)) throw ShapeError("method " + to_string(m) + " does not apply to shape " + shape_label(sys));
    std::cout << to_string(compute_resultant(sys, m, v)) << '\n';
    return 0;
}

int cmd_discriminant(const Options& o)
{
    const HomPoly p = poly_from_json(read_file(o.input));
    if (o.dump_canonical) {
        std::cout << poly_to_json(p) << '\n';
        return 0;
    }
    Rational value;
    if (o.via == "gradient") value = discriminant(p, parse_method(o.method));
    else if (o.via == "invariants") value = discriminant_via_invariants(p);
    else if (o.via == "symmetric") value = symmetric_disc(symmetric_decomposition(p));
    else throw ParseError("--via must be gradient, invariants or symmetric");
    std::cout << to_string(value) << '\n';
    return 0;
}

int cmd_series(const Options& o)
{
    using nlohmann::json;
    json out;
    if (o.series_kind == "area") {
        out = coefficient_strings(area_series_quartic(o.order));
    } else if (o.series_kind == "root") {
        const UniSeries x = root_series_fixed_point(o.root_degree, o.order);
        out = coefficient_strings(x);
    } else if (o.series_kind == "ward") {
        json small = json::object(), large = json::object();
        for (auto [branch, target] : {std::pair{RootBranch::small, &small}, std::pair{RootBranch::large, &large}}) {
            const MultiSeries res = ward_residual_quadratic(o.order, branch);
            (*target)["residual_terms"] = res.terms.size();
        }
        out = {{"small", small}, {"large", large}};
    } else if (o.series_kind == "j24") {
        const J24Branches j = j24_branches(parse_rational(o.eps), o.precision);
        out = {{"eps", o.eps}, {"z", real_string(j.z, o.precision)}, {"regular", real_string(j.regular, o.precision)}};
    } else if (o.series_kind == "volume") {
        const VolumeResult v = volume_4d(parse_rational(o.a), parse_rational(o.b), parse_rational(o.c), parse_rational(o.hbar), o.precision);
        out = {{"value", real_string(v.value, o.precision)}, {"closed_form", v.closed_form}};
    } else {
        throw ParseError("series kind must be area, root, ward, j24 or volume");
    }
    std::cout << out.dump() << '\n';
    return 0;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names)
{
    std::vector<Method> out;
    for (const auto& name : names) out.push_back(parse_method(name));
    return out;
}

int cmd_crosscheck(const Options& o)
{
    const auto degrees = parse_shape(o.shape);
    const CrossRun run = cross_validate_random(degrees, o.count, o.seed, parse_methods(o.methods));
    for (const auto& f : run.failures) std::cout << f.summary() << '\n';
    std::cout << run.shape << ": " << run.checked << " systems, " << run.mismatches << " mismatches, " << run.rejected
              << " rejected (rate " << run.rejection_rate() << ")\n";
    return run.mismatches == 0 ? 0 : 1;
}

int cmd_bench(const Options& o)
{
    std::cout << "shape,method,n_samples,median_ms,max_bits\n";
    const int lo = o.bits > 0 ? -(1 << o.bits) : -9;
    const int hi = o.bits > 0 ? (1 << o.bits) : 9;
    for (const auto& shape_text : o.shapes) {
        const auto degrees = parse_shape(shape_text);
        Rng rng(o.seed);
        std::vector<PolySystem> samples;
        for (int i = 0; i < o.count; ++i) samples.push_back(random_system(degrees, rng, lo, hi));
        std::vector<Method> methods = o.methods.empty() ? applicable_methods(samples.front()) : parse_methods(o.methods);
        for (Method m : methods) {
            if (!applicable(m, samples.front())) continue;
            std::vector<double> ms;
            std::size_t max_bits = 0;
            for (const auto& sys : samples) {
                BitMeter::reset();
                const auto start = std::chrono::steady_clock::now();
                Rational value;
                try {
                    value = compute_resultant(sys, m);
                } catch (const DegenerateError&) {
                    continue;
                }
                ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
                BitMeter::note(value);
                max_bits = std::max(max_bits, BitMeter::peak());
            }
            double median = 0;
            if (!ms.empty()) {
                std::sort(ms.begin(), ms.end());
                median = ms.size() % 2 ? ms[ms.size() / 2] : (ms[ms.size() / 2 - 1] + ms[ms.size() / 2]) / 2;
            }
            std::cout << shape_label(samples.front()) << ',' << to_string(m) << ',' << ms.size() << ',' << median << ',' << max_bits << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact resultants and discriminants of homogeneous polynomial systems"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--method", o.method, "auto, sylvester, koszul, bezout, pfaffian, hybrid or trace");
    app.add_option("--variant", o.variant, "hybrid variant (a or b)");
    app.add_option("--via", o.via, "discriminant route: gradient, invariants or symmetric");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--precision", o.precision, "decimal digits for floating series values");

    auto* res = app.add_subcommand("resultant", "resultant of a system file");
    res->add_option("input", o.input, "system JSON file")->required();
    res->add_flag("--dump-canonical", o.dump_canonical, "print the parsed system in canonical JSON");

    auto* disc = app.add_subcommand("discriminant", "discriminant of a single form");
    disc->add_option("input", o.input, "polynomial JSON file")->required();
    disc->add_flag("--dump-canonical", o.dump_canonical, "print the parsed form in canonical JSON");

    auto* ser = app.add_subcommand("series", "series coefficients and special values");
    ser->add_option("kind", o.series_kind, "area, root, ward, j24 or volume")->required();
    ser->add_option("--order", o.order, "truncation order (number of terms for root)");
    ser->add_option("--degree", o.root_degree, "degree r of x^r + x + c");
    ser->add_option("--eps", o.eps, "sample point for j24");
    ser->add_option("--a", o.a);
    ser->add_option("--b", o.b);
    ser->add_option("--c", o.c);
    ser->add_option("--hbar", o.hbar);

    auto* cross = app.add_subcommand("crosscheck", "compare every applicable method on random systems");
    cross->add_option("--shape", o.shape, "n|r or n|r1,...,rn")->required();
    cross->add_option("--count", o.count);
    cross->add_option("--methods", o.methods)->delimiter(',');

    auto* bench = app.add_subcommand("bench", "CSV timings per method and shape");
    bench->add_option("--shapes", o.shapes, "shapes such as 3|2")->delimiter(';');
    bench->add_option("--count", o.count);
    bench->add_option("--methods", o.methods)->delimiter(',');
    bench->add_option("--bits", o.bits, "coefficients uniform in [-2^bits, 2^bits] (default [-9, 9])");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*res) return cmd_resultant(o);
        if (*disc) return cmd_discriminant(o);
        if (*ser) return cmd_series(o);
        if (*cross) return cmd_crosscheck(o);
        if (*bench) return cmd_bench(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "shape error: " << e.what() << '\n';
        return 3;
    } catch (const DegenerateError& e) {
        std::cerr << "degenerate: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
