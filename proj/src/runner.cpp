#include "hermix/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hermix/eigensolve.hpp"
#include "hermix/errors.hpp"
#include "hermix/mixfit.hpp"
#include "hermix/parse.hpp"
#include "hermix/rng.hpp"
#include "hermix/sampling.hpp"

namespace hermix {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

// nlohmann's dump prints shortest-round-trip doubles; reports pin 12
// significant digits instead, so serialization is done by hand.
void dump_json(const ordered_json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + ordered_json(it.key()).dump() + ": ";
                dump_json(it.value(), out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_json(item, out, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

std::string dump_document(const ordered_json& j) {
    std::string out;
    dump_json(j, out, 0);
    out += "\n";
    return out;
}

int classify_exit(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnknownFamily*>(&e) ||
        dynamic_cast<const IoError*>(&e) || dynamic_cast<const MalformedLine*>(&e) ||
        dynamic_cast<const EmptySample*>(&e) ||
        dynamic_cast<const InvalidParameter*>(&e) ||
        dynamic_cast<const NonPolynomialParameter*>(&e) ||
        dynamic_cast<const InsufficientMoments*>(&e) ||
        dynamic_cast<const InfeasibleWeights*>(&e) ||
        dynamic_cast<const Underdetermined*>(&e))
        return 1;
    return 2;  // solver failure
}

RunResult error_result(const Error& e) {
    ordered_json j;
    j["error"] = std::string(e.what());
    return RunResult{dump_document(j), classify_exit(e)};
}

ordered_json candidate_json(const SolutionCandidate& c) {
    ordered_json j;
    j["weights"] = ordered_json::array();
    for (double w : c.weights) j["weights"].push_back(w);
    j["parameters"] = ordered_json::object();
    for (const auto& [k, v] : c.parameter_values) j["parameters"][k] = v;
    j["residual"] = c.residual;
    j["simplex_feasible"] = c.simplex_feasible;
    if (std::isnan(c.ks)) j["ks"] = nullptr;
    else j["ks"] = c.ks;
    return j;
}

ordered_json diagnostics_json(const FitDiagnostics& d) {
    ordered_json j;
    j["solver_path"] = d.solver_path;
    j["quotient_dimension"] = d.quotient_dimension;
    j["moment_order"] = d.moment_order;
    j["seed"] = d.seed;
    return j;
}

void write_output(const RunConfig& config, const std::string& text) {
    if (config.output_path.empty()) return;
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + config.output_path + "'");
    out << text;
}

std::vector<FamilySpec> substituted_components(
    const MixtureProblem& problem, const SolutionCandidate& cand) {
    std::vector<FamilySpec> solved = problem.components;
    for (auto& spec : solved)
        for (auto& par : spec.params)
            if (!is_fixed(par))
                par = round_to_denominator(
                    cand.parameter_values.at(unknown_name(par)), 1000000000000LL);
    return solved;
}

unsigned default_moments(unsigned requested, std::size_t unknowns) {
    if (requested > 0) return requested;
    return static_cast<unsigned>(std::max<std::size_t>(1, unknowns));
}

}  // namespace

RunResult run_fit(const RunConfig& config) {
    try {
        std::vector<Rational> sample_exact = read_sample(config.input_path);
        std::vector<double> sample;
        sample.reserve(sample_exact.size());
        for (const auto& q : sample_exact) sample.push_back(to_double(q));

        std::vector<FamilySpec> components = parse_family_list(config.families);
        std::size_t unknowns = components.size() - 1;
        for (const auto& c : components) unknowns += c.unknowns().size();
        unsigned M = default_moments(config.moments, unknowns);

        MomentVector target = target_from_sample(sample, M);

        // Reporting frame: sample mean and variance when usable.
        MomentVector m2 = target.order() >= 2 ? target : target_from_sample(sample, 2);
        Rational mean = m2.values[0];
        Rational var = m2.values[1] - mean * mean;
        std::optional<Standardization> frame;
        if (var > 0) frame = Standardization::from_variance(mean, var);

        MixtureProblem problem =
            make_problem(components, M, target, frame);
        FitReport report = fit_mixture(problem, config.seed, &sample);

        ordered_json j;
        bool feasible_best = report.has_best() && report.best().simplex_feasible;
        if (feasible_best) {
            const auto& best = report.best();
            j["weights"] = ordered_json::array();
            for (double w : best.weights) j["weights"].push_back(w);
            j["parameters"] = ordered_json::object();
            for (const auto& [k, v] : best.parameter_values) j["parameters"][k] = v;
            j["residual"] = best.residual;
            if (std::isnan(best.ks)) j["ks"] = nullptr;
            else j["ks"] = best.ks;
        } else {
            j["error"] = "no simplex-feasible candidate";
        }
        j["candidates"] = ordered_json::array();
        for (const auto& c : report.candidates) j["candidates"].push_back(candidate_json(c));
        j["diagnostics"] = diagnostics_json(report.diagnostics);

        std::string text = dump_document(j);
        write_output(config, text);

        if (feasible_best && !config.emit_cdf_path.empty()) {
            std::vector<FamilySpec> solved =
                substituted_components(problem, report.best());
            std::vector<double> sorted = sample;
            std::sort(sorted.begin(), sorted.end());
            std::ofstream cdf(config.emit_cdf_path, std::ios::binary);
            if (!cdf) throw IoError("cannot write '" + config.emit_cdf_path + "'");
            cdf << "x,empirical_cdf,fitted_cdf\n";
            const double n = static_cast<double>(sorted.size());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                double fitted = 0.0;
                for (std::size_t k = 0; k < solved.size(); ++k)
                    fitted += report.best().weights[k] * family_cdf(solved[k], sorted[i]);
                cdf << format_number(sorted[i]) << ","
                    << format_number(static_cast<double>(i + 1) / n) << ","
                    << format_number(fitted) << "\n";
            }
        }
        return RunResult{text, feasible_best ? 0 : 2};
    } catch (const Error& e) {
        return error_result(e);
    }
}

RunResult run_eda(const RunConfig& config) {
    try {
        std::vector<Rational> sample_exact = read_sample(config.input_path);
        std::vector<double> sample;
        for (const auto& q : sample_exact) sample.push_back(to_double(q));

        std::vector<FamilySpec> pool = parse_family_list(config.families);
        unsigned M = default_moments(
            config.moments,
            config.subset_size > 0 ? config.subset_size - 1 : 0);

        std::vector<FitReport> reports =
            eda_scan(sample, pool, config.subset_size, M, config.seed);

        ordered_json j;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json rj;
            rj["families"] = r.description;
            if (r.error) {
                rj["error"] = *r.error;
            } else if (r.has_best()) {
                const auto& best = r.best();
                rj["weights"] = ordered_json::array();
                for (double w : best.weights) rj["weights"].push_back(w);
                if (std::isnan(best.ks)) rj["ks"] = nullptr;
                else rj["ks"] = best.ks;
                rj["residual"] = best.residual;
                rj["simplex_feasible"] = best.simplex_feasible;
            } else {
                rj["error"] = "no candidates";
            }
            j["reports"].push_back(std::move(rj));
        }
        ordered_json diag;
        diag["subset_size"] = config.subset_size;
        diag["moment_order"] = M;
        diag["seed"] = config.seed;
        j["diagnostics"] = std::move(diag);

        std::string text = dump_document(j);
        write_output(config, text);
        return RunResult{text, 0};
    } catch (const Error& e) {
        return error_result(e);
    }
}

RunResult run_gen(const RunConfig& config) {
    try {
        std::vector<FamilySpec> components = parse_family_list(config.families);
        for (const auto& c : components)
            if (!c.all_fixed())
                throw InvalidParameter("gen requires all family parameters fixed");

        std::vector<double> weights;
        std::stringstream ss(config.weights_text);
        std::string item;
        while (std::getline(ss, item, ','))
            weights.push_back(to_double(rational_from_text(item)));
        if (config.output_path.empty())
            throw InvalidParameter("gen requires --output");
        if (config.n == 0) throw InvalidParameter("gen requires --n > 0");

        Pcg32 rng(config.seed);
        std::vector<double> sample =
            sample_mixture(components, weights, config.n, rng);

        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) throw IoError("cannot write '" + config.output_path + "'");
        char buf[64];
        for (double x : sample) {
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            out << buf << "\n";
        }
        return RunResult{"", 0};
    } catch (const Error& e) {
        return error_result(e);
    }
}

RunResult run_roots(const RunConfig& config) {
    try {
        if (config.polys.empty())
            throw InvalidParameter("roots requires at least one --poly");
        std::vector<MultiPoly> system = parse_polynomials(config.polys);
        const RingPtr& ring = system.front().ring();

        GroebnerBasis G = buchberger(system, MonomialOrder{OrderKind::degrevlex});
        QuotientBasis beta = quotient_basis(G);
        std::vector<VarietyPoint> points = solve_variety(G, beta, config.seed);
        std::vector<VarietyPoint> real_points =
            filter_real(points, config.real_tolerance, G);

        auto residual_against_inputs = [&](const VarietyPoint& p) {
            double r = 0.0;
            for (const auto& g : system) r = std::max(r, std::abs(g.eval(p.coordinates)));
            return r;
        };

        ordered_json j;
        j["solutions"] = ordered_json::array();
        for (const auto& p : points) {
            ordered_json pj;
            for (std::size_t v = 0; v < ring->vars.size(); ++v) {
                ordered_json c;
                c["re"] = p.coordinates[v].real();
                c["im"] = p.coordinates[v].imag();
                pj[ring->vars[v]] = std::move(c);
            }
            pj["residual"] = residual_against_inputs(p);
            pj["multiplicity"] = p.multiplicity;
            j["solutions"].push_back(std::move(pj));
        }
        j["real_solutions"] = ordered_json::array();
        for (const auto& p : real_points) {
            ordered_json pj;
            for (std::size_t v = 0; v < ring->vars.size(); ++v)
                pj[ring->vars[v]] = p.coordinates[v].real();
            pj["residual"] = residual_against_inputs(p);
            pj["multiplicity"] = p.multiplicity;
            j["real_solutions"].push_back(std::move(pj));
        }
        j["quotient_dimension"] = beta.monomials.size();

        std::string text = dump_document(j);
        write_output(config, text);
        return RunResult{text, 0};
    } catch (const Error& e) {
        return error_result(e);
    }
}

}  // namespace hermix
