#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "hermix/poly.hpp"

namespace hermix {

// Multiplication-by-f operator on the quotient ring, expressed in the
// standard-monomial basis: column j holds the coordinates of NF(f * beta_j).
struct MultiplicationMatrix {
    MultiPoly f;
    QuotientBasis basis;
    Eigen::MatrixXd entries;
};

struct VarietyPoint {
    std::vector<std::complex<double>> coordinates;  // one per ring variable
    double residual = 0.0;   // max over generators of |g(point)|
    bool is_real = false;
    unsigned multiplicity = 1;
};

struct EigenPair {
    std::complex<double> value;
    Eigen::VectorXcd vector;
};

// d x d multiplication-by-x matrix of a monic univariate polynomial on the
// basis {1, x, ..., x^{d-1}}; its characteristic polynomial is p.
Eigen::MatrixXd companion_matrix(const MultiPoly& p);

MultiplicationMatrix multiplication_matrix(const MultiPoly& f,
                                           const GroebnerBasis& G,
                                           const QuotientBasis& beta);

// Dense nonsymmetric eigendecomposition with a backward-error check of
// 1e-8 relative to ||A||.
std::vector<EigenPair> eig(const Eigen::MatrixXd& matrix);

// Candidate points of the complex variety via a random separating linear
// form and left-eigenvector readout (Stetter's method). Deterministic in
// `seed`; retries with a fresh form up to 5 times on separation failure.
std::vector<VarietyPoint> solve_variety(const GroebnerBasis& G,
                                        const QuotientBasis& beta,
                                        std::uint64_t seed);

// Keeps points with all |Im| <= tol; kept points are projected onto the
// reals and residuals recomputed against the basis elements.
std::vector<VarietyPoint> filter_real(const std::vector<VarietyPoint>& points,
                                      double tol, const GroebnerBasis& G);

}  // namespace hermix
