#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hermix/eigensolve.hpp"
#include "hermix/errors.hpp"
#include "hermix/hermite.hpp"
#include "hermix/parse.hpp"
#include "hermix/rng.hpp"

using namespace hermix;

namespace {

const MonomialOrder kDegrevlex{OrderKind::degrevlex};

MultiPoly P(const std::string& text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}

std::vector<double> sorted_real_eigenvalues(const Eigen::MatrixXd& m) {
    std::vector<double> out;
    for (const auto& p : eig(m)) out.push_back(p.value.real());
    std::sort(out.begin(), out.end());
    return out;
}

MultiPoly hermite_poly(unsigned n, const RingPtr& ring) {
    auto coeffs = he_monomial_coeffs(n);
    MultiPoly p = MultiPoly::zero(ring);
    for (unsigned k = 0; k < coeffs.size(); ++k)
        p.add_term(Monomial{{k}}, coeffs[k]);
    return p;
}

}  // namespace

TEST_CASE("companion matrix basics") {
    RingPtr r = make_ring({"x"});
    Eigen::MatrixXd m1 = companion_matrix(P("x - 3", r));
    REQUIRE(m1.rows() == 1);
    CHECK(m1(0, 0) == doctest::Approx(3.0));

    Eigen::MatrixXd m2 = companion_matrix(P("x^2 - 3*x + 2", r));
    auto ev = sorted_real_eigenvalues(m2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-10));

    Eigen::MatrixXd m3 = companion_matrix(P("x^2 - 2", r));
    CHECK(m3(0, 0) == 0.0);
    CHECK(m3(0, 1) == 2.0);
    CHECK(m3(1, 0) == 1.0);
    CHECK(m3(1, 1) == 0.0);

    CHECK_THROWS_AS(companion_matrix(P("2*x^2 - 1", r)), NotMonic);
    RingPtr r2 = make_ring({"x", "y"});
    CHECK_THROWS_AS(companion_matrix(P("x*y", r2)), NotUnivariate);
}

TEST_CASE("companion-matrix oracle: random monic cubics with integer roots") {
    RingPtr r = make_ring({"x"});
    Pcg32 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int a = static_cast<int>(rng.next_below(11)) - 5;
        int b = static_cast<int>(rng.next_below(11)) - 5;
        int c = static_cast<int>(rng.next_below(11)) - 5;
        std::vector<int> roots{a, b, c};
        std::sort(roots.begin(), roots.end());
        MultiPoly p = P("x", r) - MultiPoly::constant(r, a);
        p = p * (P("x", r) - MultiPoly::constant(r, b));
        p = p * (P("x", r) - MultiPoly::constant(r, c));
        auto ev = sorted_real_eigenvalues(companion_matrix(p));
        REQUIRE(ev.size() == 3);
        for (int i = 0; i < 3; ++i)
            CHECK(std::fabs(ev[i] - roots[i]) < 1e-8);
    }
}

TEST_CASE("eig basics") {
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
    for (const auto& p : eig(id)) CHECK(p.value.real() == doctest::Approx(1.0));

    Eigen::MatrixXd swap(2, 2);
    swap << 0, 1, 1, 0;
    auto ev = sorted_real_eigenvalues(swap);
    CHECK(ev[0] == doctest::Approx(-1.0));
    CHECK(ev[1] == doctest::Approx(1.0));

    Eigen::MatrixXd m(2, 2);
    m << 0, 2, 1, 0;
    ev = sorted_real_eigenvalues(m);
    CHECK(ev[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
    CHECK(ev[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("multiplication matrices on small quotients") {
    RingPtr r = make_ring({"x"});
    GroebnerBasis G = buchberger({P("x^2 - 2", r)}, kDegrevlex);
    QuotientBasis beta = quotient_basis(G);
    auto M = multiplication_matrix(P("x", r), G, beta);
    CHECK(M.entries(0, 0) == 0.0);
    CHECK(M.entries(0, 1) == 2.0);
    CHECK(M.entries(1, 0) == 1.0);
    CHECK(M.entries(1, 1) == 0.0);

    auto I = multiplication_matrix(MultiPoly::constant(r, 1), G, beta);
    CHECK(I.entries.isApprox(Eigen::MatrixXd::Identity(2, 2)));

    RingPtr r2 = make_ring({"x", "y"});
    GroebnerBasis G2 = buchberger({P("x - y", r2), P("x^2 + y^2 - 1", r2)}, kDegrevlex);
    QuotientBasis b2 = quotient_basis(G2);
    auto My = multiplication_matrix(P("y", r2), G2, b2);
    // y * y = 1/2 in the quotient
    CHECK(My.entries(0, 0) == 0.0);
    CHECK(My.entries(0, 1) == doctest::Approx(0.5));
    CHECK(My.entries(1, 0) == 1.0);
    CHECK(My.entries(1, 1) == 0.0);
}

TEST_CASE("solve_variety on hand-solved systems") {
    RingPtr r = make_ring({"x"});
    GroebnerBasis G = buchberger({P("x^2 - 2", r)}, kDegrevlex);
    auto pts = solve_variety(G, quotient_basis(G), 0);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].coordinates[0].real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-8));
    CHECK(pts[1].coordinates[0].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    for (const auto& p : pts) CHECK(p.residual < 1e-8);

    GroebnerBasis G1 = buchberger({P("x - 5", r)}, kDegrevlex);
    auto pts1 = solve_variety(G1, quotient_basis(G1), 0);
    REQUIRE(pts1.size() == 1);
    CHECK(pts1[0].coordinates[0].real() == doctest::Approx(5.0).epsilon(1e-10));

    RingPtr r2 = make_ring({"x", "y"});
    GroebnerBasis G2 = buchberger({P("x - y", r2), P("x^2 + y^2 - 1", r2)}, kDegrevlex);
    auto pts2 = solve_variety(G2, quotient_basis(G2), 0);
    REQUIRE(pts2.size() == 2);
    double h = std::sqrt(0.5);
    CHECK(pts2[0].coordinates[0].real() == doctest::Approx(-h).epsilon(1e-8));
    CHECK(pts2[0].coordinates[1].real() == doctest::Approx(-h).epsilon(1e-8));
    CHECK(pts2[1].coordinates[0].real() == doctest::Approx(h).epsilon(1e-8));
    CHECK(pts2[1].coordinates[1].real() == doctest::Approx(h).epsilon(1e-8));
}

TEST_CASE("commutation of coordinate multiplication matrices") {
    RingPtr r = make_ring({"x", "y"});
    std::vector<std::vector<MultiPoly>> systems = {
        {P("x - y", r), P("x^2 + y^2 - 1", r)},
        {P("x^2 - 2", r), P("y^2 - x", r)},
        {P("x^2 + y - 3", r), P("y^2 - 2*x", r)},
    };
    for (const auto& gens : systems) {
        GroebnerBasis G = buchberger(gens, kDegrevlex);
        QuotientBasis beta = quotient_basis(G);
        auto Mx = multiplication_matrix(P("x", r), G, beta).entries;
        auto My = multiplication_matrix(P("y", r), G, beta).entries;
        CHECK((Mx * My - My * Mx).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("eigenvalue route agrees with direct evaluation") {
    RingPtr r = make_ring({"x", "y"});
    std::vector<MultiPoly> gens = {P("x^2 - 2", r), P("y^2 - x", r)};
    GroebnerBasis G = buchberger(gens, kDegrevlex);
    QuotientBasis beta = quotient_basis(G);
    auto pts = solve_variety(G, beta, 3);
    std::size_t total = 0;
    for (const auto& p : pts) total += p.multiplicity;
    CHECK(total == beta.monomials.size());
    MultiPoly f = P("x + 2*y", r);
    auto Mf = multiplication_matrix(f, G, beta).entries;
    auto pairs = eig(Mf);
    for (const auto& p : pts) {
        std::complex<double> direct = f.eval(p.coordinates);
        double best = 1e9;
        for (const auto& ep : pairs) best = std::min(best, std::abs(ep.value - direct));
        CHECK(best < 1e-6);
    }
}

TEST_CASE("filter_real") {
    RingPtr r = make_ring({"x"});
    GroebnerBasis G = buchberger({P("x^2 + 1", r)}, kDegrevlex);
    auto pts = solve_variety(G, quotient_basis(G), 0);
    REQUIRE(pts.size() == 2);
    CHECK(filter_real(pts, 1e-8, G).empty());

    GroebnerBasis G2 = buchberger({P("x^2 - 2", r)}, kDegrevlex);
    auto pts2 = solve_variety(G2, quotient_basis(G2), 0);
    CHECK(filter_real(pts2, 1e-8, G2).size() == 2);

    VarietyPoint nearly;
    nearly.coordinates = {std::complex<double>(std::sqrt(2.0), 1e-12)};
    auto kept = filter_real({nearly}, 1e-8, G2);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].coordinates[0].imag() == 0.0);
    CHECK(kept[0].is_real);

    CHECK_THROWS_AS(filter_real(pts2, -1.0, G2), InvalidParameter);
}

TEST_CASE("hermite roots via companion matrix: real, simple, interlacing") {
    RingPtr r = make_ring({"x"});
    std::vector<double> prev_roots;
    for (unsigned n = 2; n <= 10; ++n) {
        auto ev = eig(companion_matrix(hermite_poly(n, r)));
        std::vector<double> roots;
        for (const auto& p : ev) {
            CHECK(std::fabs(p.value.imag()) < 1e-7);
            roots.push_back(p.value.real());
        }
        std::sort(roots.begin(), roots.end());
        REQUIRE(roots.size() == n);
        for (std::size_t i = 0; i + 1 < roots.size(); ++i)
            CHECK(roots[i + 1] - roots[i] > 1e-6);  // distinct
        for (double root : roots) CHECK(std::fabs(he_eval(n, root)) < 1e-6);
        if (!prev_roots.empty()) {
            // roots of He_{n-1} interlace those of He_n
            for (std::size_t i = 0; i < prev_roots.size(); ++i) {
                CHECK(prev_roots[i] > roots[i]);
                CHECK(prev_roots[i] < roots[i + 1]);
            }
        }
        prev_roots = roots;
    }
}
