#include <doctest.h>

#include <cmath>

#include "hermix/errors.hpp"
#include "hermix/hermite.hpp"
#include "hermix/rng.hpp"

using namespace hermix;

TEST_CASE("he_eval base cases and low orders") {
    CHECK(he_eval(0, 7.3) == 1.0);
    CHECK(he_eval(2, 1.0) == 0.0);   // He_2 = x^2 - 1
    CHECK(he_eval(2, -1.0) == 0.0);
    CHECK(he_eval(3, 2.0) == 2.0);   // He_3 = x^3 - 3x
    CHECK(he_eval(1, 0.25) == 0.25);
}

TEST_CASE("he_eval recurrence holds at sampled points") {
    Pcg32 rng(7);
    for (unsigned n = 1; n <= 12; ++n) {
        for (int k = 0; k < 20; ++k) {
            double x = -5.0 + 10.0 * rng.next_double();
            double lhs = he_eval(n + 1, x);
            double rhs = x * he_eval(n, x) - static_cast<double>(n) * he_eval(n - 1, x);
            CHECK(std::fabs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("recurrence exact in coefficient form") {
    for (unsigned n = 1; n <= 12; ++n) {
        auto lo = he_monomial_coeffs(n - 1);
        auto mid = he_monomial_coeffs(n);
        auto hi = he_monomial_coeffs(n + 1);
        // x He_n - n He_{n-1}
        std::vector<Rational> expect(n + 2, Rational(0));
        for (unsigned i = 0; i <= n; ++i) expect[i + 1] += mid[i];
        for (unsigned i = 0; i < lo.size(); ++i) expect[i] -= Rational(n) * lo[i];
        CHECK(hi == expect);
    }
}

TEST_CASE("he_monomial_coeffs known expansions") {
    CHECK(he_monomial_coeffs(0) == std::vector<Rational>{1});
    CHECK(he_monomial_coeffs(3) == std::vector<Rational>{0, -3, 0, 1});
    CHECK(he_monomial_coeffs(4) == std::vector<Rational>{3, 0, -6, 0, 1});
}

TEST_CASE("parity He_n(-x) = (-1)^n He_n(x)") {
    Pcg32 rng(11);
    for (unsigned n = 0; n <= 12; ++n) {
        for (int k = 0; k < 10; ++k) {
            double x = -4.0 + 8.0 * rng.next_double();
            double sign = n % 2 == 0 ? 1.0 : -1.0;
            CHECK(he_eval(n, -x) == doctest::Approx(sign * he_eval(n, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("monomial_to_hermite known cases") {
    HermiteCoeffs c = monomial_to_hermite({Rational(0), Rational(1)});  // x
    CHECK(c.coeffs == std::vector<Rational>{0, 1});
    c = monomial_to_hermite({Rational(0), Rational(0), Rational(1)});   // x^2
    CHECK(c.coeffs == std::vector<Rational>{1, 0, 1});
    c = monomial_to_hermite({Rational(1)});
    CHECK(c.coeffs == std::vector<Rational>{1});
}

TEST_CASE("basis-change round trip on random rational polynomials") {
    Pcg32 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned deg = rng.next_below(11);
        std::vector<Rational> poly(deg + 1);
        for (auto& c : poly)
            c = Rational(static_cast<int>(rng.next_below(41)) - 20,
                         static_cast<int>(rng.next_below(9)) + 1);
        if (poly[deg] == 0) poly[deg] = 1;
        auto back = hermite_to_monomial(monomial_to_hermite(poly));
        CHECK(back == poly);
    }
}

TEST_CASE("orthogonality against the standard normal weight") {
    // 64-node Gauss-Legendre-style composite quadrature is overkill here;
    // a fine trapezoid on [-12, 12] reaches 1e-6 comfortably for m, n <= 8.
    const int N = 24000;
    const double lo = -12.0, hi = 12.0, h = (hi - lo) / N;
    for (unsigned m = 0; m <= 8; ++m) {
        for (unsigned n = 0; n <= 8; ++n) {
            double acc = 0.0;
            for (int i = 0; i <= N; ++i) {
                double x = lo + h * i;
                double w = (i == 0 || i == N) ? 0.5 : 1.0;
                acc += w * he_eval(m, x) * he_eval(n, x) *
                       std::exp(-0.5 * x * x);
            }
            acc *= h / std::sqrt(2.0 * M_PI);
            double expect = 0.0;
            if (m == n) {
                expect = 1.0;
                for (unsigned k = 2; k <= n; ++k) expect *= k;
            }
            CHECK(std::fabs(acc - expect) < 1e-6);
        }
    }
}

TEST_CASE("order cap enforced") {
    CHECK_THROWS_AS(he_eval(33, 0.0), InvalidParameter);
    CHECK_THROWS_AS(he_monomial_coeffs(40), InvalidParameter);
    CHECK_NOTHROW(he_monomial_coeffs(32));
}
