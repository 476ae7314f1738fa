#include "hermix/eigensolve.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "hermix/errors.hpp"
#include "hermix/rng.hpp"

namespace hermix {

Eigen::MatrixXd companion_matrix(const MultiPoly& p) {
    const auto& vars = p.ring()->vars;
    if (vars.size() != 1) throw NotUnivariate("companion_matrix: polynomial must be univariate");
    unsigned d = p.total_degree();
    if (d < 1) throw InvalidParameter("companion_matrix: degree must be >= 1");

    std::vector<Rational> coeffs(d + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) coeffs[m.exp[0]] = c;
    if (coeffs[d] != 1) throw NotMonic("companion_matrix: polynomial must be monic");

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(d, d);
    for (unsigned i = 0; i + 1 < d; ++i) M(i + 1, i) = 1.0;
    for (unsigned i = 0; i < d; ++i) M(i, d - 1) = -to_double(coeffs[i]);
    return M;
}

MultiplicationMatrix multiplication_matrix(const MultiPoly& f,
                                           const GroebnerBasis& G,
                                           const QuotientBasis& beta) {
    if (!same_ring(f.ring(), G.ring))
        throw RingMismatch("multiplication_matrix: ring mismatch");
    const std::size_t D = beta.monomials.size();
    if (D == 0) throw BasisMismatch("multiplication_matrix: empty quotient basis");

    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < D; ++i) index.emplace(beta.monomials[i], i);

    Eigen::MatrixXd M(D, D);
    for (std::size_t j = 0; j < D; ++j) {
        MultiPoly fj = f * MultiPoly::term(G.ring, beta.monomials[j], Rational(1));
        MultiPoly nf = normal_form(fj, G);
        Eigen::VectorXd col = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(D));
        for (const auto& [m, c] : nf.terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw BasisMismatch(
                    "multiplication_matrix: normal form leaves the basis "
                    "(basis does not match the Groebner basis)");
            col(static_cast<Eigen::Index>(it->second)) = to_double(c);
        }
        M.col(static_cast<Eigen::Index>(j)) = col;
    }
    return MultiplicationMatrix{f, beta, std::move(M)};
}

std::vector<EigenPair> eig(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols())
        throw InvalidParameter("eig: matrix must be square");
    if (!matrix.allFinite())
        throw InvalidParameter("eig: matrix entries must be finite");

    Eigen::EigenSolver<Eigen::MatrixXd> solver(matrix, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("eig: QR iteration did not converge");

    double norm = matrix.norm();
    if (norm == 0.0) norm = 1.0;
    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<std::size_t>(matrix.rows()));
    for (Eigen::Index k = 0; k < matrix.rows(); ++k) {
        EigenPair p;
        p.value = solver.eigenvalues()(k);
        p.vector = solver.eigenvectors().col(k);
        double backward =
            (matrix.cast<std::complex<double>>() * p.vector - p.value * p.vector)
                .norm() /
            norm;
        if (backward > 1e-8)
            throw NoConvergence("eig: eigenpair backward error " +
                                std::to_string(backward) + " exceeds 1e-8");
        pairs.push_back(std::move(p));
    }
    return pairs;
}

namespace {

double point_distance(const VarietyPoint& a, const VarietyPoint& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.coordinates.size(); ++i)
        d = std::max(d, std::abs(a.coordinates[i] - b.coordinates[i]));
    return d;
}

double basis_residual(const std::vector<std::complex<double>>& coords,
                      const GroebnerBasis& G) {
    double r = 0.0;
    for (const auto& g : G.elements) r = std::max(r, std::abs(g.eval(coords)));
    return r;
}

// Default realness tolerance: 1e-8 relative to coordinate magnitude,
// absolute below magnitude 1.
bool coordinates_real(const std::vector<std::complex<double>>& coords,
                      double tol = 1e-8) {
    for (const auto& c : coords) {
        double scale = std::max(1.0, std::abs(c.real()));
        if (std::abs(c.imag()) > tol * scale) return false;
    }
    return true;
}

}  // namespace

std::vector<VarietyPoint> solve_variety(const GroebnerBasis& G,
                                        const QuotientBasis& beta,
                                        std::uint64_t seed) {
    const std::size_t nvars = G.ring->vars.size();
    const std::size_t D = beta.monomials.size();
    if (D == 0) return {};  // unit ideal, empty variety

    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < D; ++i) index.emplace(beta.monomials[i], i);
    auto it_one = index.find(Monomial::one(nvars));
    if (it_one == index.end())
        throw BasisMismatch("solve_variety: quotient basis does not contain 1");
    const std::size_t one_idx = it_one->second;

    // Per-variable multiplication matrices, used for coordinates not
    // represented in the basis (Rayleigh pairing on the shared eigenvector).
    std::vector<std::size_t> var_index(nvars, SIZE_MAX);
    for (std::size_t v = 0; v < nvars; ++v) {
        Monomial xv = Monomial::one(nvars);
        xv.exp[v] = 1;
        auto it = index.find(xv);
        if (it != index.end()) var_index[v] = it->second;
    }
    std::vector<Eigen::MatrixXd> var_matrices(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
        if (var_index[v] == SIZE_MAX)
            var_matrices[v] =
                multiplication_matrix(MultiPoly::variable(G.ring, v), G, beta)
                    .entries;
    }

    Pcg32 rng(seed, /*stream=*/0x68657278ULL);
    const int kMaxAttempts = 5;
    std::string last_failure;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // Random separating linear form with small rational coefficients.
        MultiPoly form = MultiPoly::zero(G.ring);
        for (std::size_t v = 0; v < nvars; ++v) {
            Rational r(static_cast<int>(rng.next_below(37)) + 1,
                       static_cast<int>(rng.next_below(7)) + 1);
            form = form + MultiPoly::variable(G.ring, v).scaled(r);
        }

        Eigen::MatrixXd Mf = multiplication_matrix(form, G, beta).entries;
        // Right eigenvectors of Mf^T are the basis-evaluation vectors.
        std::vector<EigenPair> pairs = eig(Mf.transpose());

        std::vector<VarietyPoint> raw;
        bool degenerate = false;
        for (const auto& ep : pairs) {
            std::complex<double> anchor = ep.vector(static_cast<Eigen::Index>(one_idx));
            if (std::abs(anchor) < 1e-10) {
                degenerate = true;
                break;
            }
            Eigen::VectorXcd v = ep.vector / anchor;
            VarietyPoint pt;
            pt.coordinates.resize(nvars);
            for (std::size_t vi = 0; vi < nvars; ++vi) {
                if (var_index[vi] != SIZE_MAX) {
                    pt.coordinates[vi] = v(static_cast<Eigen::Index>(var_index[vi]));
                } else {
                    const Eigen::MatrixXcd Mt =
                        var_matrices[vi].transpose().cast<std::complex<double>>();
                    pt.coordinates[vi] =
                        ep.vector.dot(Mt * ep.vector) / ep.vector.squaredNorm();
                }
            }
            pt.residual = basis_residual(pt.coordinates, G);
            pt.is_real = coordinates_real(pt.coordinates);
            raw.push_back(std::move(pt));
        }
        if (degenerate) {
            last_failure = "eigenvector degenerate in the constant component";
            continue;
        }

        // Detect a non-separating form: equal eigenvalues whose eigenvectors
        // describe distinct points.
        bool separated = true;
        for (std::size_t a = 0; a < pairs.size() && separated; ++a) {
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                double ev_gap = std::abs(pairs[a].value - pairs[b].value);
                if (ev_gap < 1e-8 * (1.0 + std::abs(pairs[a].value)) &&
                    point_distance(raw[a], raw[b]) > 1e-5) {
                    separated = false;
                    break;
                }
            }
        }
        if (!separated) {
            last_failure = "linear form failed to separate variety points";
            continue;
        }

        // Merge eigenvalue clusters describing the same point (multiplicity).
        std::vector<VarietyPoint> merged;
        for (auto& pt : raw) {
            bool found = false;
            for (auto& m : merged) {
                if (point_distance(pt, m) < 1e-6) {
                    ++m.multiplicity;
                    found = true;
                    break;
                }
            }
            if (!found) merged.push_back(std::move(pt));
        }

        // Deterministic report order: sort by real part, then imaginary.
        std::sort(merged.begin(), merged.end(),
                  [](const VarietyPoint& a, const VarietyPoint& b) {
                      for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
                          double ra = a.coordinates[i].real(), rb = b.coordinates[i].real();
                          if (std::abs(ra - rb) > 1e-12) return ra < rb;
                          double ia = a.coordinates[i].imag(), ib = b.coordinates[i].imag();
                          if (std::abs(ia - ib) > 1e-12) return ia < ib;
                      }
                      return false;
                  });
        return merged;
    }
    throw SeparationFailure("solve_variety: " + last_failure + " after " +
                            std::to_string(kMaxAttempts) + " attempts");
}

std::vector<VarietyPoint> filter_real(const std::vector<VarietyPoint>& points,
                                      double tol, const GroebnerBasis& G) {
    if (tol <= 0) throw InvalidParameter("filter_real: tol must be positive");
    std::vector<VarietyPoint> kept;
    for (const auto& p : points) {
        if (!coordinates_real(p.coordinates, tol)) continue;
        VarietyPoint q = p;
        for (auto& c : q.coordinates) c = std::complex<double>(c.real(), 0.0);
        q.residual = basis_residual(q.coordinates, G);
        q.is_real = true;
        kept.push_back(std::move(q));
    }
    return kept;
}

}  // namespace hermix
