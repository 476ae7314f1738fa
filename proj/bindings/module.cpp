#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "hermix/eigensolve.hpp"
#include "hermix/errors.hpp"
#include "hermix/hermite.hpp"
#include "hermix/mixfit.hpp"
#include "hermix/parse.hpp"
#include "hermix/rng.hpp"
#include "hermix/sampling.hpp"

namespace py = pybind11;
using namespace hermix;

namespace {

FamilySpec single_family(const std::string& text) {
    auto list = parse_family_list(text);
    if (list.size() != 1)
        throw InvalidParameter("expected exactly one family, got " +
                               std::to_string(list.size()));
    return list.front();
}

py::object ks_or_none(double ks) {
    if (std::isnan(ks)) return py::none();
    return py::float_(ks);
}

py::dict candidate_dict(const SolutionCandidate& c) {
    py::dict d;
    d["weights"] = c.weights;
    d["parameters"] = c.parameter_values;
    d["residual"] = c.residual;
    d["simplex_feasible"] = c.simplex_feasible;
    d["ks"] = ks_or_none(c.ks);
    return d;
}

py::dict report_dict(const FitReport& r) {
    py::dict d;
    d["families"] = r.description;
    if (r.error) {
        d["error"] = *r.error;
        return d;
    }
    py::list cands;
    for (const auto& c : r.candidates) cands.append(candidate_dict(c));
    d["candidates"] = cands;
    py::dict diag;
    diag["solver_path"] = r.diagnostics.solver_path;
    diag["quotient_dimension"] = r.diagnostics.quotient_dimension;
    diag["moment_order"] = r.diagnostics.moment_order;
    diag["seed"] = r.diagnostics.seed;
    d["diagnostics"] = diag;
    return d;
}

py::dict fit_py(const std::vector<double>& sample, const std::string& families,
                unsigned moments, std::uint64_t seed) {
    std::vector<FamilySpec> components = parse_family_list(families);
    std::size_t unknowns = components.size() - 1;
    for (const auto& c : components) unknowns += c.unknowns().size();
    unsigned M = moments > 0 ? moments
                             : static_cast<unsigned>(std::max<std::size_t>(1, unknowns));
    MixtureProblem problem =
        make_problem(components, M, target_from_sample(sample, M));
    return report_dict(fit_mixture(problem, seed, &sample));
}

py::list eda_py(const std::vector<double>& sample, const std::string& pool,
                unsigned subset_size, unsigned moments, std::uint64_t seed) {
    unsigned M = moments > 0 ? moments : std::max(1u, subset_size - 1);
    py::list out;
    for (const auto& r :
         eda_scan(sample, parse_family_list(pool), subset_size, M, seed))
        out.append(report_dict(r));
    return out;
}

py::dict roots_py(const std::vector<std::string>& polys, std::uint64_t seed,
                  double tol) {
    std::vector<MultiPoly> system = parse_polynomials(polys);
    const RingPtr& ring = system.front().ring();
    GroebnerBasis G = buchberger(system, MonomialOrder{OrderKind::degrevlex});
    QuotientBasis beta = quotient_basis(G);
    auto points = solve_variety(G, beta, seed);
    auto real_points = filter_real(points, tol, G);

    auto point_list = [&](const std::vector<VarietyPoint>& pts, bool real) {
        py::list out;
        for (const auto& p : pts) {
            py::dict d;
            for (std::size_t v = 0; v < ring->vars.size(); ++v) {
                if (real)
                    d[ring->vars[v].c_str()] = p.coordinates[v].real();
                else
                    d[ring->vars[v].c_str()] = py::make_tuple(
                        p.coordinates[v].real(), p.coordinates[v].imag());
            }
            d["residual"] = p.residual;
            d["multiplicity"] = p.multiplicity;
            out.append(d);
        }
        return out;
    };

    py::dict out;
    out["solutions"] = point_list(points, false);
    out["real_solutions"] = point_list(real_points, true);
    out["quotient_dimension"] = beta.monomials.size();
    return out;
}

std::vector<double> gen_py(const std::string& families,
                           const std::vector<double>& weights, std::size_t n,
                           std::uint64_t seed) {
    Pcg32 rng(seed);
    return sample_mixture(parse_family_list(families), weights, n, rng);
}

std::vector<double> raw_moments_py(const std::string& family, unsigned M) {
    return raw_moments(single_family(family), M).as_doubles();
}

std::vector<double> gram_charlier_py(const std::string& family, unsigned M,
                                     double location, double scale) {
    FamilySpec spec = single_family(family);
    Standardization frame = Standardization::from_scale(
        Rational(location), Rational(scale));
    HermiteCoeffs h = gram_charlier_coeffs(raw_moments(spec, M), frame, M);
    std::vector<double> out;
    for (const auto& c : h.coeffs) out.push_back(to_double(c));
    return out;
}

std::vector<double> he_coeffs_py(unsigned n) {
    std::vector<double> out;
    for (const auto& c : he_monomial_coeffs(n)) out.push_back(to_double(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_hermix, m) {
    m.doc() = "Heterogeneous mixture fitting via Hermite moment matching and "
              "polynomial ideals";

    py::register_exception<Error>(m, "HermixError");

    m.def("he_eval", &he_eval, py::arg("n"), py::arg("x"),
          "Probabilists' Hermite polynomial He_n(x)");
    m.def("he_monomial_coeffs", &he_coeffs_py, py::arg("n"));
    m.def("raw_moments", &raw_moments_py, py::arg("family"), py::arg("order"));
    m.def("gram_charlier_coeffs", &gram_charlier_py, py::arg("family"),
          py::arg("order"), py::arg("location") = 0.0, py::arg("scale") = 1.0);
    m.def("family_cdf",
          [](const std::string& family, double x) {
              return family_cdf(single_family(family), x);
          },
          py::arg("family"), py::arg("x"));
    m.def("ks_statistic",
          [](const std::string& families, const std::vector<double>& weights,
             const std::vector<double>& sample) {
              return ks_statistic(parse_family_list(families), weights, sample);
          },
          py::arg("families"), py::arg("weights"), py::arg("sample"));
    m.def("fit", &fit_py, py::arg("sample"), py::arg("families"),
          py::arg("moments") = 0, py::arg("seed") = 0);
    m.def("eda", &eda_py, py::arg("sample"), py::arg("pool"),
          py::arg("subset_size"), py::arg("moments") = 0, py::arg("seed") = 0);
    m.def("roots", &roots_py, py::arg("polys"), py::arg("seed") = 0,
          py::arg("tolerance") = 1e-8);
    m.def("gen", &gen_py, py::arg("families"), py::arg("weights"), py::arg("n"),
          py::arg("seed") = 0);
}
