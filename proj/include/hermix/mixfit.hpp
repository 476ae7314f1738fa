#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermix/moments.hpp"
#include "hermix/poly.hpp"

namespace hermix {

struct MixtureProblem {
    std::vector<FamilySpec> components;   // K >= 1
    unsigned match_order = 0;             // M
    MomentVector target;                  // m_1..m_M, exact
    Standardization std_frame{Rational(0), Rational(1)};  // reporting frame
    std::vector<std::string> weight_names;  // lambda1..lambdaK

    std::size_t component_count() const { return components.size(); }
    // Unknowns after the simplex substitution: K-1 weights plus the
    // symbolic family parameters, in ring order.
    std::vector<std::string> unknown_names() const;
};

// Validates invariants (unique unknown names, finite moments, not
// underdetermined) and fills in the generated weight names.
MixtureProblem make_problem(std::vector<FamilySpec> components, unsigned match_order,
                            MomentVector target,
                            std::optional<Standardization> std_frame = std::nullopt);

struct MomentSystem {
    RingPtr ring;                    // variables: lambda1..lambda_{K-1}, params
    std::vector<MultiPoly> equations;  // e_1..e_M
};

// Moment-matching equations with lambda_K eliminated by
// lambda_K = 1 - sum_{j<K} lambda_j.
MomentSystem build_system(const MixtureProblem& problem);

struct SolutionCandidate {
    std::vector<double> weights;  // length K, sums to 1 by construction
    std::map<std::string, double> parameter_values;
    double residual = 0.0;          // max matching-equation violation
    bool simplex_feasible = false;
    double ks = std::numeric_limits<double>::quiet_NaN();  // NaN when no sample
};

struct FitDiagnostics {
    std::string solver_path;          // "linear" | "polynomial"
    std::size_t quotient_dimension = 0;
    unsigned moment_order = 0;
    std::uint64_t seed = 0;
    double max_point_residual = 0.0;  // variety residual, polynomial path
};

struct FitReport {
    std::string description;
    std::vector<SolutionCandidate> candidates;  // sorted, best first
    FitDiagnostics diagnostics;
    std::optional<std::string> error;  // set when fitting failed (eda subsets)

    bool has_best() const { return !candidates.empty(); }
    const SolutionCandidate& best() const { return candidates.front(); }
};

// Fast path: no symbolic family parameters. Exact rational solve when the
// system is square, rational least squares otherwise.
std::vector<SolutionCandidate> solve_linear(const MixtureProblem& problem);

// Ideal/eigenvalue path: Buchberger -> quotient basis -> Stetter
// eigenvector readout -> real filtering.
std::vector<SolutionCandidate> solve_polynomial(const MixtureProblem& problem,
                                                std::uint64_t seed);

// sup-norm distance between the sample ECDF and the mixture CDF.
double ks_statistic(const std::vector<FamilySpec>& components,
                    const std::vector<double>& weights,
                    std::vector<double> sample);

// Full fit: chooses the solver path, attaches KS when a sample is given,
// sorts candidates by (feasible desc, ks asc, residual asc).
FitReport fit_mixture(const MixtureProblem& problem, std::uint64_t seed,
                      const std::vector<double>* sample = nullptr);

// Fits every size-k subset of the pool against the sample's empirical
// moments; reports sorted by best KS. Failed subsets carry their error.
std::vector<FitReport> eda_scan(const std::vector<double>& sample,
                                const std::vector<FamilySpec>& pool, unsigned k,
                                unsigned match_order, std::uint64_t seed);

// Empirical target moments rounded to denominator 1e12 before ideal work.
MomentVector target_from_sample(const std::vector<double>& sample, unsigned M);

}  // namespace hermix
