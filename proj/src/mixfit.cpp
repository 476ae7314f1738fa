#include "hermix/mixfit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hermix/eigensolve.hpp"
#include "hermix/errors.hpp"

namespace hermix {

namespace {

constexpr double kFeasTol = 1e-8;
constexpr long long kMomentDenominator = 1000000000000LL;  // 1e12

std::vector<std::string> weight_unknowns(const MixtureProblem& p) {
    // lambda_K is eliminated by the simplex substitution.
    std::vector<std::string> out;
    for (std::size_t j = 0; j + 1 < p.weight_names.size(); ++j)
        out.push_back(p.weight_names[j]);
    return out;
}

std::vector<std::string> parameter_unknowns(const MixtureProblem& p) {
    std::vector<std::string> out;
    for (const auto& c : p.components)
        for (const auto& u : c.unknowns()) out.push_back(u);
    return out;
}

bool params_in_domain(const FamilySpec& spec) {
    auto pos = [&](std::size_t i) { return fixed_value(spec.params[i]) > 0; };
    switch (spec.family) {
        case Family::Gaussian: return pos(1);
        case Family::Gamma: return pos(0) && pos(1);
        case Family::Exponential: return pos(0);
        case Family::Uniform:
            return fixed_value(spec.params[0]) < fixed_value(spec.params[1]);
        case Family::StudentT: return pos(0);
        case Family::Poisson: return pos(0);
    }
    return false;
}

bool feasible(const std::vector<double>& weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (w < -kFeasTol) return false;
        sum += w;
    }
    return std::fabs(sum - 1.0) <= kFeasTol;
}

// Exact Gaussian elimination; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0) continue;
            Rational f = A[row][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k) A[row][k] -= f * A[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace

std::vector<std::string> MixtureProblem::unknown_names() const {
    std::vector<std::string> out = weight_unknowns(*this);
    for (const auto& u : parameter_unknowns(*this)) out.push_back(u);
    return out;
}

MixtureProblem make_problem(std::vector<FamilySpec> components, unsigned match_order,
                            MomentVector target,
                            std::optional<Standardization> std_frame) {
    if (components.empty()) throw InvalidParameter("mixture needs at least one component");
    if (match_order < 1) throw InvalidParameter("match order must be >= 1");
    if (target.order() < match_order)
        throw InsufficientMoments("target provides " + std::to_string(target.order()) +
                                  " moments, need " + std::to_string(match_order));

    MixtureProblem p;
    p.components = std::move(components);
    p.match_order = match_order;
    p.target = std::move(target);
    if (std_frame) p.std_frame = *std_frame;

    std::set<std::string> seen;
    for (const auto& c : p.components) {
        // Finite-moment check (StudentT nu > M) runs here, eagerly.
        if (c.family == Family::StudentT) {
            if (fixed_value(c.params[0]) <= match_order)
                throw MomentNotFinite("studentt component lacks finite moments up to " +
                                      std::to_string(match_order));
        }
        for (const auto& u : c.unknowns())
            if (!seen.insert(u).second)
                throw InvalidParameter("duplicate unknown name '" + u + "'");
    }
    for (std::size_t j = 1; j <= p.components.size(); ++j) {
        std::string name = "lambda" + std::to_string(j);
        if (seen.count(name))
            throw InvalidParameter("unknown name '" + name + "' collides with a weight");
        p.weight_names.push_back(name);
    }

    if (p.unknown_names().size() > match_order)
        throw Underdetermined("system has " + std::to_string(p.unknown_names().size()) +
                              " unknowns but only " + std::to_string(match_order) +
                              " matching equations");
    return p;
}

MomentSystem build_system(const MixtureProblem& problem) {
    const std::size_t K = problem.components.size();
    const unsigned M = problem.match_order;

    RingPtr ring = make_ring(problem.unknown_names());
    const std::size_t nweights = K - 1;

    // Symbolic component moments over the shared ring.
    std::vector<std::vector<MultiPoly>> comp_moments;
    for (const auto& c : problem.components)
        comp_moments.push_back(symbolic_raw_moments(c, M, ring));

    // lambda_K = 1 - sum_{j<K} lambda_j
    MultiPoly last_weight = MultiPoly::constant(ring, 1);
    for (std::size_t j = 0; j < nweights; ++j)
        last_weight = last_weight - MultiPoly::variable(ring, j);

    MomentSystem sys;
    sys.ring = ring;
    for (unsigned n = 0; n < M; ++n) {
        MultiPoly e = MultiPoly::zero(ring);
        for (std::size_t j = 0; j < K; ++j) {
            MultiPoly w = j + 1 < K ? MultiPoly::variable(ring, j) : last_weight;
            e = e + w * comp_moments[j][n];
        }
        e = e - MultiPoly::constant(ring, problem.target.values[n]);
        sys.equations.push_back(std::move(e));
    }
    return sys;
}

namespace {

SolutionCandidate candidate_from_values(const MixtureProblem& problem,
                                        const MomentSystem& sys,
                                        const std::vector<double>& values) {
    const std::size_t K = problem.components.size();
    const std::size_t nweights = K - 1;

    SolutionCandidate cand;
    cand.weights.assign(values.begin(), values.begin() + static_cast<long>(nweights));
    double sum = 0.0;
    for (double w : cand.weights) sum += w;
    cand.weights.push_back(1.0 - sum);
    for (std::size_t i = nweights; i < sys.ring->vars.size(); ++i)
        cand.parameter_values[sys.ring->vars[i]] = values[i];

    double res = 0.0;
    for (const auto& e : sys.equations)
        res = std::max(res, std::fabs(e.eval(values)));
    cand.residual = res;
    cand.simplex_feasible = feasible(cand.weights);
    return cand;
}

}  // namespace

std::vector<SolutionCandidate> solve_linear(const MixtureProblem& problem) {
    if (!parameter_unknowns(problem).empty())
        throw InvalidParameter(
            "solve_linear requires all family parameters fixed; use the "
            "polynomial path");

    const std::size_t K = problem.components.size();
    const unsigned M = problem.match_order;
    const std::size_t U = K - 1;
    MomentSystem sys = build_system(problem);

    if (U == 0) {
        SolutionCandidate cand = candidate_from_values(problem, sys, {});
        return {cand};
    }

    // e_n is affine in the weights: A x = b with
    // A[n][j] = m_n^{(j)} - m_n^{(K)}, b[n] = target_n - m_n^{(K)}.
    std::vector<std::vector<Rational>> A(M, std::vector<Rational>(U));
    std::vector<Rational> b(M);
    std::vector<Rational> origin(U, Rational(0));
    std::vector<Rational> probe = origin;
    for (unsigned n = 0; n < M; ++n) {
        Rational at_origin = sys.equations[n].eval(origin);
        b[n] = -at_origin;
        for (std::size_t j = 0; j < U; ++j) {
            probe[j] = 1;
            A[n][j] = sys.equations[n].eval(probe) - at_origin;
            probe[j] = 0;
        }
    }

    std::optional<std::vector<Rational>> solution;
    if (M == U) {
        solution = solve_square(A, b);
    } else {
        // Normal equations, exact.
        std::vector<std::vector<Rational>> AtA(U, std::vector<Rational>(U, Rational(0)));
        std::vector<Rational> Atb(U, Rational(0));
        for (std::size_t i = 0; i < U; ++i) {
            for (std::size_t j = 0; j < U; ++j)
                for (unsigned n = 0; n < M; ++n) AtA[i][j] += A[n][i] * A[n][j];
            for (unsigned n = 0; n < M; ++n) Atb[i] += A[n][i] * b[n];
        }
        solution = solve_square(AtA, Atb);
    }
    if (!solution) {
        std::string who;
        for (const auto& c : problem.components) {
            if (!who.empty()) who += ", ";
            who += c.describe();
        }
        throw RankDeficient("component moment vectors are collinear: " + who);
    }

    std::vector<double> values;
    for (const auto& q : *solution) values.push_back(to_double(q));
    return {candidate_from_values(problem, sys, values)};
}

std::vector<SolutionCandidate> solve_polynomial(const MixtureProblem& problem,
                                                std::uint64_t seed) {
    MomentSystem sys = build_system(problem);
    const std::size_t U = sys.ring->vars.size();

    if (U == 0) return {candidate_from_values(problem, sys, {})};
    if (sys.equations.size() > U)
        throw InvalidParameter(
            "polynomial system is overdetermined (" +
            std::to_string(sys.equations.size()) + " equations, " +
            std::to_string(U) + " unknowns); lower --moments to match the "
            "unknown count");

    GroebnerBasis G = buchberger(sys.equations, MonomialOrder{OrderKind::degrevlex});
    QuotientBasis beta = quotient_basis(G);
    std::vector<VarietyPoint> points = solve_variety(G, beta, seed);
    std::vector<VarietyPoint> real_points = filter_real(points, 1e-8, G);

    std::vector<SolutionCandidate> out;
    for (const auto& pt : real_points) {
        std::vector<double> values;
        for (const auto& c : pt.coordinates) values.push_back(c.real());
        out.push_back(candidate_from_values(problem, sys, values));
    }
    return out;
}

double ks_statistic(const std::vector<FamilySpec>& components,
                    const std::vector<double>& weights,
                    std::vector<double> sample) {
    if (components.size() != weights.size())
        throw InvalidParameter("component and weight counts must match");
    if (!feasible(weights))
        throw InfeasibleWeights("weights are not simplex-feasible");
    if (sample.empty()) throw EmptySample("KS statistic needs a nonempty sample");

    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = 0.0;
        for (std::size_t j = 0; j < components.size(); ++j)
            f += weights[j] * family_cdf(components[j], sample[i]);
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::fabs(f - lo), std::fabs(f - hi)));
    }
    return d;
}

namespace {

bool candidate_before(const SolutionCandidate& a, const SolutionCandidate& b) {
    if (a.simplex_feasible != b.simplex_feasible) return a.simplex_feasible;
    bool a_ks = !std::isnan(a.ks), b_ks = !std::isnan(b.ks);
    if (a_ks != b_ks) return a_ks;
    if (a_ks && b_ks && a.ks != b.ks) return a.ks < b.ks;
    return a.residual < b.residual;
}

}  // namespace

FitReport fit_mixture(const MixtureProblem& problem, std::uint64_t seed,
                      const std::vector<double>* sample) {
    FitReport report;
    {
        std::string desc;
        for (const auto& c : problem.components) {
            if (!desc.empty()) desc += ";";
            desc += c.describe();
        }
        report.description = desc;
    }
    report.diagnostics.moment_order = problem.match_order;
    report.diagnostics.seed = seed;

    const bool has_params = !parameter_unknowns(problem).empty();
    std::vector<SolutionCandidate> candidates;
    if (has_params) {
        report.diagnostics.solver_path = "polynomial";
        MomentSystem sys = build_system(problem);
        GroebnerBasis G = buchberger(sys.equations, MonomialOrder{OrderKind::degrevlex});
        QuotientBasis beta = quotient_basis(G);
        report.diagnostics.quotient_dimension = beta.monomials.size();
        std::vector<VarietyPoint> points = solve_variety(G, beta, seed);
        double max_res = 0.0;
        for (const auto& p : points) max_res = std::max(max_res, p.residual);
        report.diagnostics.max_point_residual = max_res;
        for (const auto& pt : filter_real(points, 1e-8, G)) {
            std::vector<double> values;
            for (const auto& c : pt.coordinates) values.push_back(c.real());
            candidates.push_back(candidate_from_values(problem, sys, values));
        }
    } else {
        report.diagnostics.solver_path = "linear";
        candidates = solve_linear(problem);
    }

    if (sample) {
        for (auto& cand : candidates) {
            if (!cand.simplex_feasible) continue;
            // Substitute solved parameters back into the component specs.
            std::vector<FamilySpec> solved = problem.components;
            for (auto& spec : solved)
                for (auto& par : spec.params)
                    if (!is_fixed(par)) {
                        double v = cand.parameter_values.at(unknown_name(par));
                        par = round_to_denominator(v, kMomentDenominator);
                    }
            bool in_domain = true;
            for (const auto& spec : solved)
                if (!params_in_domain(spec)) in_domain = false;
            if (!in_domain) continue;  // e.g. a solved variance came out negative
            cand.ks = ks_statistic(solved, cand.weights, *sample);
        }
    }

    std::stable_sort(candidates.begin(), candidates.end(), candidate_before);
    report.candidates = std::move(candidates);
    return report;
}

MomentVector target_from_sample(const std::vector<double>& sample, unsigned M) {
    if (sample.empty()) throw EmptySample("empty sample");
    MomentVector m = empirical_raw_moments(sample, M);
    for (auto& v : m.values) v = round_to_denominator(to_double(v), kMomentDenominator);
    return m;
}

std::vector<FitReport> eda_scan(const std::vector<double>& sample,
                                const std::vector<FamilySpec>& pool, unsigned k,
                                unsigned match_order, std::uint64_t seed) {
    if (pool.empty() || pool.size() > 12)
        throw InvalidParameter("pool size must be in [1, 12]");
    if (k < 1 || k > pool.size())
        throw InvalidParameter("subset size must be in [1, pool size]");
    for (const auto& spec : pool)
        if (!spec.all_fixed())
            throw InvalidParameter("eda pool entries must have fixed parameters");
    if (sample.empty()) throw EmptySample("eda needs a nonempty sample");

    MomentVector target = target_from_sample(sample, match_order);

    std::vector<FitReport> reports;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<FamilySpec> subset;
        for (std::size_t i : idx) subset.push_back(pool[i]);
        FitReport rep;
        try {
            MixtureProblem problem =
                make_problem(subset, match_order, target);
            rep = fit_mixture(problem, seed, &sample);
        } catch (const Error& e) {
            for (const auto& c : subset) {
                if (!rep.description.empty()) rep.description += ";";
                rep.description += c.describe();
            }
            rep.error = e.what();
        }
        reports.push_back(std::move(rep));

        // next combination
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < pool.size()) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) { i = SIZE_MAX; break; }
        }
        if (i == SIZE_MAX) break;
    }

    auto best_ks = [](const FitReport& r) {
        if (r.error || !r.has_best() || !r.best().simplex_feasible ||
            std::isnan(r.best().ks))
            return std::numeric_limits<double>::infinity();
        return r.best().ks;
    };
    std::stable_sort(reports.begin(), reports.end(),
                     [&](const FitReport& a, const FitReport& b) {
                         return best_ks(a) < best_ks(b);
                     });
    return reports;
}

}  // namespace hermix
