#include "resultants/crosscheck.hpp"
#include "resultants/errors.hpp"

#include <sstream>

namespace resultants {

HomPoly random_form(int n, int r, Rng& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    HomPoly p(n, r);
    for (const auto& e : monomials_of_degree(n, r)) p.add_term(e, Rational(dist(rng)));
    return p;
}

PolySystem random_system(const std::vector<int>& degrees, Rng& rng, int lo, int hi)
{
    std::vector<HomPoly> polys;
    const int n = static_cast<int>(degrees.size());
    for (int r : degrees) polys.push_back(random_form(n, r, rng, lo, hi));
    return PolySystem(std::move(polys));
}

PolySystem random_system(int n, int r, Rng& rng, int lo, int hi)
{
    return random_system(std::vector<int>(static_cast<std::size_t>(n), r), rng, lo, hi);
}

PolySystem singular_system(int n, int r, const std::vector<Rational>& root, Rng& rng)
{
    if (static_cast<int>(root.size()) != n) throw DimensionError("root has wrong length");
    int pivot = -1;
    for (int j = 0; j < n && pivot < 0; ++j)
        if (!is_zero(root[j])) pivot = j;
    if (pivot < 0) throw DomainError("root must be nonzero");
    Exponent power(n, 0);
    power[pivot] = r;
    const Rational at_root = pow(root[pivot], static_cast<unsigned long>(r));
    std::vector<HomPoly> polys;
    for (int i = 0; i < n; ++i) {
        HomPoly f = random_form(n, r, rng);
        f.add_term(power, -f.evaluate(root) / at_root);
        polys.push_back(std::move(f));
    }
    return PolySystem(std::move(polys));
}

std::string CrossReport::summary() const
{
    std::ostringstream out;
    out << shape << (agree ? " agree" : " MISMATCH");
    for (const auto& o : outcomes) {
        out << ' ' << to_string(o.method) << '=';
        if (o.value) out << to_string(*o.value);
        else out << "error(" << o.error << ')';
    }
    return out.str();
}

CrossReport cross_validate(const PolySystem& sys, const std::vector<Method>& methods)
{
    CrossReport report;
    report.shape = shape_label(sys);
    for (Method m : methods) {
        MethodOutcome o{m, std::nullopt, {}, false};
        try {
            o.value = compute_resultant(sys, m);
        } catch (const DegenerateError& e) {
            o.error = e.what();
            o.degenerate = true;
        } catch (const Error& e) {
            o.error = e.what();
        }
        report.outcomes.push_back(std::move(o));
    }
    report.agree = !report.outcomes.empty();
    for (const auto& o : report.outcomes)
        if (!o.value || *o.value != *report.outcomes.front().value) report.agree = false;
    return report;
}

CrossRun cross_validate_random(const std::vector<int>& degrees, int count, std::uint64_t seed, std::vector<Method> methods)
{
    Rng rng(seed);
    CrossRun run;
    run.requested = count;
    while (run.checked < count) {
        PolySystem sys = random_system(degrees, rng);
        if (run.shape.empty()) run.shape = shape_label(sys);
        std::vector<Method> use = methods.empty() ? applicable_methods(sys) : methods;
        CrossReport report = cross_validate(sys, use);
        bool degenerate = false;
        for (const auto& o : report.outcomes) degenerate = degenerate || o.degenerate;
        if (degenerate) {
            ++run.rejected;
            if (run.rejected > 10 * count + 100) throw DegenerateError("too many degenerate samples");
            continue;
        }
        ++run.checked;
        if (!report.agree) {
            ++run.mismatches;
            run.failures.push_back(std::move(report));
        }
    }
    return run;
}

}  // namespace resultants
