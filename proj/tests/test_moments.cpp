#include <doctest.h>

#include <cmath>

#include "hermix/errors.hpp"
#include "hermix/moments.hpp"
#include "hermix/specfun.hpp"

using namespace hermix;

namespace {

const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> specs = {
        FamilySpec::gaussian(Rational(1, 2), Rational(2)),
        FamilySpec::gamma(Rational(3), Rational(1, 2)),
        FamilySpec::exponential(Rational(2)),
        FamilySpec::uniform(Rational(-1), Rational(3)),
        FamilySpec::student_t(Rational(9)),
        FamilySpec::poisson(Rational(3, 2)),
    };
    return specs;
}

}  // namespace

TEST_CASE("raw moments: standard normal double factorials") {
    auto m = raw_moments(FamilySpec::gaussian(Rational(0), Rational(1)), 6);
    CHECK(m.values == std::vector<Rational>{0, 1, 0, 3, 0, 15});
}

TEST_CASE("raw moments: exponential factorials") {
    auto m = raw_moments(FamilySpec::exponential(Rational(1)), 4);
    CHECK(m.values == std::vector<Rational>{1, 2, 6, 24});
}

TEST_CASE("raw moments: uniform(0,1)") {
    auto m = raw_moments(FamilySpec::uniform(Rational(0), Rational(1)), 3);
    CHECK(m.values == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 4)});
}

TEST_CASE("raw moments: gamma, student t, poisson closed forms") {
    auto g = raw_moments(FamilySpec::gamma(Rational(2), Rational(3)), 3);
    // m_n = 3^n * 2*3*...*(n+1)
    CHECK(g.values == std::vector<Rational>{6, 54, 648});

    auto t = raw_moments(FamilySpec::student_t(Rational(5)), 4);
    CHECK(t.values == std::vector<Rational>{0, Rational(5, 3), 0, 25});

    auto p = raw_moments(FamilySpec::poisson(Rational(2)), 3);
    // E X = 2, E X^2 = 6, E X^3 = 2 + 3*4 + 8 = 22
    CHECK(p.values == std::vector<Rational>{2, 6, 22});
}

TEST_CASE("student t moment finiteness guard") {
    CHECK_THROWS_AS(raw_moments(FamilySpec::student_t(Rational(4)), 4), MomentNotFinite);
    CHECK_THROWS_AS(FamilySpec::student_t(Param(std::string("n"))),
                    NonPolynomialParameter);
}

TEST_CASE("symbolic moments match numeric on substitution") {
    struct Case {
        FamilySpec sym;
        FamilySpec fixed;
        std::vector<Rational> values;  // substitution, ring order
    };
    std::vector<Case> cases = {
        {FamilySpec::gaussian(Param(std::string("u")), Rational(1)),
         FamilySpec::gaussian(Rational(3, 2), Rational(1)), {Rational(3, 2)}},
        {FamilySpec::exponential(Param(std::string("t"))),
         FamilySpec::exponential(Rational(5, 4)), {Rational(5, 4)}},
        {FamilySpec::gamma(Param(std::string("k")), Param(std::string("s"))),
         FamilySpec::gamma(Rational(2), Rational(3)), {Rational(2), Rational(3)}},
        {FamilySpec::uniform(Param(std::string("a")), Param(std::string("b"))),
         FamilySpec::uniform(Rational(-1), Rational(2)), {Rational(-1), Rational(2)}},
        {FamilySpec::poisson(Param(std::string("r"))),
         FamilySpec::poisson(Rational(7, 2)), {Rational(7, 2)}},
    };
    for (const auto& c : cases) {
        RingPtr ring = make_ring(c.sym.unknowns());
        auto polys = symbolic_raw_moments(c.sym, 5, ring);
        auto nums = raw_moments(c.fixed, 5);
        REQUIRE(polys.size() == 5);
        for (unsigned n = 0; n < 5; ++n)
            CHECK(polys[n].eval(c.values) == nums.values[n]);
    }
}

TEST_CASE("symbolic gaussian mean-unknown example") {
    FamilySpec spec = FamilySpec::gaussian(Param(std::string("u")), Rational(1));
    RingPtr ring = make_ring({"u"});
    auto polys = symbolic_raw_moments(spec, 3, ring);
    // (u, u^2 + 1, u^3 + 3u)
    MultiPoly u = MultiPoly::variable(ring, 0);
    CHECK(polys[0] == u);
    CHECK(polys[1] == u * u + MultiPoly::constant(ring, 1));
    CHECK(polys[2] == u * u * u + u.scaled(Rational(3)));
}

TEST_CASE("empirical moments") {
    auto m = empirical_raw_moments(std::vector<Rational>{1, 2, 3}, 2);
    CHECK(m.values == std::vector<Rational>{2, Rational(14, 3)});
    m = empirical_raw_moments(std::vector<Rational>{5}, 3);
    CHECK(m.values == std::vector<Rational>{5, 25, 125});
    m = empirical_raw_moments(std::vector<Rational>{-1, 1}, 4);
    CHECK(m.values == std::vector<Rational>{0, 1, 0, 1});
    CHECK_THROWS_AS(empirical_raw_moments(std::vector<Rational>{}, 2), EmptySample);
}

TEST_CASE("gram-charlier: standard normal vanishes beyond order 0") {
    auto m = raw_moments(FamilySpec::gaussian(Rational(0), Rational(1)), 4);
    auto c = gram_charlier_coeffs(m, Standardization::from_scale(Rational(0), Rational(1)), 4);
    CHECK(c.coeffs == std::vector<Rational>{1, 0, 0, 0, 0});
}

TEST_CASE("gram-charlier: exponential skew and kurtosis") {
    auto m = raw_moments(FamilySpec::exponential(Rational(1)), 4);
    auto c = gram_charlier_coeffs(m, Standardization::from_scale(Rational(1), Rational(1)), 4);
    CHECK(c.coeffs[0] == 1);
    CHECK(c.coeffs[3] == Rational(1, 3));
    CHECK(c.coeffs[4] == Rational(1, 4));
}

TEST_CASE("gram-charlier under own standardization kills c1 and c2 for every family") {
    for (const auto& spec : catalog()) {
        auto m = raw_moments(spec, 4);
        auto frame = Standardization::from_variance(spec.mean(), spec.variance());
        auto c = gram_charlier_coeffs(m, frame, 2);
        CHECK(c.coeffs[0] == 1);
        CHECK(c.coeffs[1] == 0);
        CHECK(c.coeffs[2] == 0);
    }
}

TEST_CASE("gram-charlier insufficient moments") {
    auto m = raw_moments(FamilySpec::exponential(Rational(1)), 2);
    CHECK_THROWS_AS(
        gram_charlier_coeffs(m, Standardization::from_scale(Rational(0), Rational(1)), 4),
        InsufficientMoments);
}

TEST_CASE("family cdf spot values") {
    CHECK(family_cdf(FamilySpec::gaussian(Rational(0), Rational(1)), 0.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(family_cdf(FamilySpec::uniform(Rational(0), Rational(2)), 0.5) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(family_cdf(FamilySpec::exponential(Rational(1)), 1.0) ==
          doctest::Approx(0.6321205588285577).epsilon(1e-10));
    // Gamma(1, theta) degenerates to Exponential(theta).
    CHECK(family_cdf(FamilySpec::gamma(Rational(1), Rational(2)), 1.7) ==
          doctest::Approx(family_cdf(FamilySpec::exponential(Rational(2)), 1.7))
              .epsilon(1e-10));
    // StudentT(1) is Cauchy: F(1) = 3/4.
    CHECK(family_cdf(FamilySpec::student_t(Rational(1)), 1.0) ==
          doctest::Approx(0.75).epsilon(1e-10));
    CHECK(family_cdf(FamilySpec::poisson(Rational(2)), 0.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("special function reference values") {
    // High-precision references (mpmath, 30 digits).
    CHECK(regularized_gamma_p(2.0, 1.0) ==
          doctest::Approx(0.264241117657115356808952459677).epsilon(1e-10));
    CHECK(regularized_gamma_p(0.5, 2.0) ==
          doctest::Approx(0.954499736103641585599434725667).epsilon(1e-10));
    CHECK(regularized_gamma_p(5.0, 10.0) ==
          doctest::Approx(0.970747311923038927327233866807).epsilon(1e-10));
    CHECK(regularized_beta(2.0, 3.0, 0.4) ==
          doctest::Approx(0.5248).epsilon(1e-10));
    CHECK(regularized_beta(0.5, 0.5, 0.3) ==
          doctest::Approx(0.369010119565545382755430558779).epsilon(1e-10));
}

TEST_CASE("family cdf monotone with correct limits") {
    for (const auto& spec : catalog()) {
        double prev = -1.0;
        for (int i = 0; i <= 400; ++i) {
            double x = -20.0 + 0.1 * i;
            double f = family_cdf(spec, x);
            CHECK(f >= prev - 1e-12);
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
            prev = f;
        }
        CHECK(family_cdf(spec, -1e9) < 1e-9);
        CHECK(family_cdf(spec, 1e9) > 1.0 - 1e-9);
    }
}

TEST_CASE("quadrature cross-check of gaussian and uniform moments") {
    auto gm = raw_moments(FamilySpec::gaussian(Rational(1, 2), Rational(2)), 6);
    const int N = 40000;
    for (unsigned n = 1; n <= 6; ++n) {
        double acc = 0.0;
        double lo = -25.0, hi = 25.0, h = (hi - lo) / N;
        for (int i = 0; i <= N; ++i) {
            double x = lo + h * i;
            double w = (i == 0 || i == N) ? 0.5 : 1.0;
            double z = (x - 0.5);
            acc += w * std::pow(x, n) * std::exp(-z * z / 4.0);
        }
        acc *= h / std::sqrt(4.0 * M_PI);
        CHECK(std::fabs(acc - to_double(gm.values[n - 1])) < 1e-8);
    }
    // Simpson on the polynomial integrand; trapezoid is too coarse at 1e-8.
    auto um = raw_moments(FamilySpec::uniform(Rational(-1), Rational(3)), 6);
    for (unsigned n = 1; n <= 6; ++n) {
        double acc = 0.0;
        double lo = -1.0, hi = 3.0, h = (hi - lo) / N;
        for (int i = 0; i <= N; ++i) {
            double x = lo + h * i;
            double w = (i == 0 || i == N) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            acc += w * std::pow(x, n) * 0.25;
        }
        acc *= h / 3.0;
        CHECK(std::fabs(acc - to_double(um.values[n - 1])) < 1e-8);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FamilySpec::gaussian(Rational(0), Rational(-1)), InvalidParameter);
    CHECK_THROWS_AS(FamilySpec::uniform(Rational(2), Rational(1)), InvalidParameter);
    CHECK_THROWS_AS(FamilySpec::poisson(Rational(0)), InvalidParameter);
}
