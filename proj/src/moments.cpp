#include "hermix/moments.hpp"

#include <cmath>

#include "hermix/errors.hpp"
#include "hermix/specfun.hpp"

namespace hermix {

namespace {

void require_positive(const Param& p, const std::string& what) {
    if (is_fixed(p) && fixed_value(p) <= 0)
        throw InvalidParameter(what + " must be strictly positive");
}

std::string param_text(const Param& p) {
    if (is_fixed(p)) return rational_to_string(fixed_value(p));
    return "?" + unknown_name(p);
}

}  // namespace

FamilySpec FamilySpec::gaussian(Param mu, Param sigma2) {
    require_positive(sigma2, "gaussian sigma2");
    return FamilySpec{Family::Gaussian, {std::move(mu), std::move(sigma2)}};
}

FamilySpec FamilySpec::gamma(Param shape, Param scale) {
    require_positive(shape, "gamma shape");
    require_positive(scale, "gamma scale");
    return FamilySpec{Family::Gamma, {std::move(shape), std::move(scale)}};
}

FamilySpec FamilySpec::exponential(Param theta) {
    require_positive(theta, "exponential theta");
    return FamilySpec{Family::Exponential, {std::move(theta)}};
}

FamilySpec FamilySpec::uniform(Param a, Param b) {
    if (is_fixed(a) && is_fixed(b) && !(fixed_value(a) < fixed_value(b)))
        throw InvalidParameter("uniform requires a < b");
    return FamilySpec{Family::Uniform, {std::move(a), std::move(b)}};
}

FamilySpec FamilySpec::student_t(Param nu) {
    if (!is_fixed(nu))
        throw NonPolynomialParameter(
            "studentt nu cannot be an unknown: its moments are not polynomial "
            "in nu");
    require_positive(nu, "studentt nu");
    return FamilySpec{Family::StudentT, {std::move(nu)}};
}

FamilySpec FamilySpec::poisson(Param rate) {
    require_positive(rate, "poisson rate");
    return FamilySpec{Family::Poisson, {std::move(rate)}};
}

bool FamilySpec::all_fixed() const {
    for (const auto& p : params)
        if (!is_fixed(p)) return false;
    return true;
}

std::vector<std::string> FamilySpec::unknowns() const {
    std::vector<std::string> out;
    for (const auto& p : params)
        if (!is_fixed(p)) out.push_back(unknown_name(p));
    return out;
}

std::string FamilySpec::family_name() const {
    switch (family) {
        case Family::Gaussian: return "gaussian";
        case Family::Gamma: return "gamma";
        case Family::Exponential: return "exponential";
        case Family::Uniform: return "uniform";
        case Family::StudentT: return "studentt";
        case Family::Poisson: return "poisson";
    }
    return "?";
}

std::string FamilySpec::describe() const {
    static const char* kKeys[6][2] = {{"mu", "sigma2"}, {"shape", "scale"},
                                      {"theta", nullptr}, {"a", "b"},
                                      {"nu", nullptr},   {"rate", nullptr}};
    const char* const* keys = kKeys[static_cast<int>(family)];
    std::string out = family_name() + ":";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += std::string(keys[i]) + "=" + param_text(params[i]);
    }
    return out;
}

Rational FamilySpec::mean() const {
    MomentVector m = raw_moments(*this, 1);
    return m.values[0];
}

Rational FamilySpec::variance() const {
    MomentVector m = raw_moments(*this, 2);
    return m.values[1] - m.values[0] * m.values[0];
}

std::vector<double> MomentVector::as_doubles() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_double(v));
    return out;
}

Standardization Standardization::from_scale(const Rational& a, const Rational& b) {
    if (b <= 0) throw InvalidParameter("standardization scale must be positive");
    return Standardization{a, b * b};
}

Standardization Standardization::from_variance(const Rational& a,
                                               const Rational& var) {
    if (var <= 0) throw InvalidParameter("standardization variance must be positive");
    return Standardization{a, var};
}

double Standardization::scale() const { return std::sqrt(to_double(scale2)); }

// ---------------------------------------------------------------------------
// Raw moments. Each closed form is evaluated generically over a coefficient
// type T (Rational for numeric moments, MultiPoly for symbolic ones) so the
// two paths cannot drift apart.

namespace {

template <typename T, typename ParamOf>
std::vector<T> moments_impl(const FamilySpec& spec, unsigned M, const T& one,
                            ParamOf param_of) {
    std::vector<T> m;  // m[0] = m_1, ...
    m.reserve(M);
    switch (spec.family) {
        case Family::Gaussian: {
            T mu = param_of(0), s2 = param_of(1);
            T prev2 = one;        // m_0
            T prev1 = mu;         // m_1
            for (unsigned n = 1; n <= M; ++n) {
                if (n == 1) {
                    m.push_back(prev1);
                    continue;
                }
                T next = mu * prev1 + s2.scaled_by(n - 1) * prev2;
                m.push_back(next);
                prev2 = prev1;
                prev1 = next;
            }
            break;
        }
        case Family::Gamma: {
            T shape = param_of(0), scale = param_of(1);
            T acc = one;
            for (unsigned n = 1; n <= M; ++n) {
                acc = acc * scale * (shape + one.scaled_by(static_cast<int>(n) - 1));
                m.push_back(acc);
            }
            break;
        }
        case Family::Exponential: {
            T theta = param_of(0);
            T acc = one;
            for (unsigned n = 1; n <= M; ++n) {
                acc = (acc * theta).scaled_by(n);
                m.push_back(acc);
            }
            break;
        }
        case Family::Uniform: {
            T a = param_of(0), b = param_of(1);
            for (unsigned n = 1; n <= M; ++n) {
                T sum = one - one;  // zero
                for (unsigned j = 0; j <= n; ++j) sum = sum + a.powed(j) * b.powed(n - j);
                m.push_back(sum.divided(n + 1));
            }
            break;
        }
        case Family::StudentT: {
            // Fixed nu only; moments are rational constants.
            T nu = param_of(0);
            T even = one;
            unsigned k = 0;
            for (unsigned n = 1; n <= M; ++n) {
                if (n % 2 == 1) {
                    m.push_back(one - one);
                } else {
                    ++k;
                    even = even * nu.scaled_by(2 * k - 1).divided_t(
                                      nu - one.scaled_by(2 * static_cast<int>(k)));
                    m.push_back(even);
                }
            }
            break;
        }
        case Family::Poisson: {
            T rate = param_of(0);
            std::vector<T> all;  // m_0..m_M
            all.push_back(one);
            for (unsigned n = 0; n < M; ++n) {
                T sum = one - one;
                for (unsigned j = 0; j <= n; ++j)
                    sum = sum + all[j].scaled_rat(rational_binomial(n, j));
                all.push_back(rate * sum);
            }
            for (unsigned n = 1; n <= M; ++n) m.push_back(all[n]);
            break;
        }
    }
    return m;
}

// Adapters giving Rational and MultiPoly a common small surface for the
// generic closed forms above.
struct RatVal {
    Rational v;
    RatVal operator+(const RatVal& o) const { return {v + o.v}; }
    RatVal operator-(const RatVal& o) const { return {v - o.v}; }
    RatVal operator*(const RatVal& o) const { return {v * o.v}; }
    RatVal scaled_by(int k) const { return {v * k}; }
    RatVal scaled_by(unsigned k) const { return {v * k}; }
    RatVal scaled_rat(const Rational& c) const { return {v * c}; }
    RatVal divided(unsigned k) const { return {v / k}; }
    RatVal divided_t(const RatVal& o) const { return {v / o.v}; }
    RatVal powed(unsigned e) const {
        Rational r = 1;
        for (unsigned i = 0; i < e; ++i) r *= v;
        return {r};
    }
};

struct PolyVal {
    MultiPoly p;
    PolyVal operator+(const PolyVal& o) const { return {p + o.p}; }
    PolyVal operator-(const PolyVal& o) const { return {p - o.p}; }
    PolyVal operator*(const PolyVal& o) const { return {p * o.p}; }
    PolyVal scaled_by(int k) const { return {p.scaled(Rational(k))}; }
    PolyVal scaled_by(unsigned k) const { return {p.scaled(Rational(k))}; }
    PolyVal scaled_rat(const Rational& c) const { return {p.scaled(c)}; }
    PolyVal divided(unsigned k) const { return {p.scaled(Rational(1, k))}; }
    PolyVal divided_t(const PolyVal& o) const {
        if (!o.p.is_constant())
            throw NonPolynomialParameter("division by a non-constant parameter");
        Rational c = o.p.is_zero() ? Rational(0) : o.p.terms().begin()->second;
        if (c == 0) throw InvalidParameter("division by zero parameter");
        return {p.scaled(Rational(1) / c)};
    }
    PolyVal powed(unsigned e) const { return {p.pow(e)}; }
};

void validate_fixed(const FamilySpec& spec, unsigned M) {
    if (spec.family == Family::StudentT) {
        const Rational& nu = fixed_value(spec.params[0]);
        if (nu <= M)
            throw MomentNotFinite("studentt moment of order " + std::to_string(M) +
                                  " requires nu > " + std::to_string(M));
    }
}

}  // namespace

MomentVector raw_moments(const FamilySpec& spec, unsigned M) {
    if (!spec.all_fixed())
        throw InvalidParameter("raw_moments requires all parameters fixed");
    if (M < 1) throw InvalidParameter("moment order must be >= 1");
    validate_fixed(spec, M);
    auto param_of = [&](std::size_t i) { return RatVal{fixed_value(spec.params[i])}; };
    auto vals = moments_impl<RatVal>(spec, M, RatVal{Rational(1)}, param_of);
    MomentVector out;
    for (auto& v : vals) out.values.push_back(std::move(v.v));
    return out;
}

std::vector<MultiPoly> symbolic_raw_moments(const FamilySpec& spec, unsigned M,
                                            const RingPtr& ring) {
    if (M < 1) throw InvalidParameter("moment order must be >= 1");
    if (spec.family == Family::StudentT) {
        if (!spec.all_fixed())
            throw NonPolynomialParameter("studentt nu must be fixed");
        validate_fixed(spec, M);
    }
    auto var_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < ring->vars.size(); ++i)
            if (ring->vars[i] == name) return i;
        throw RingMismatch("unknown '" + name + "' is not a ring variable");
    };
    auto param_of = [&](std::size_t i) {
        const Param& p = spec.params[i];
        if (is_fixed(p)) return PolyVal{MultiPoly::constant(ring, fixed_value(p))};
        return PolyVal{MultiPoly::variable(ring, var_index(unknown_name(p)))};
    };
    auto vals = moments_impl<PolyVal>(
        spec, M, PolyVal{MultiPoly::constant(ring, Rational(1))}, param_of);
    std::vector<MultiPoly> out;
    for (auto& v : vals) out.push_back(std::move(v.p));
    return out;
}

MomentVector empirical_raw_moments(const std::vector<Rational>& sample, unsigned M) {
    if (sample.empty()) throw EmptySample("empirical moments need a nonempty sample");
    if (M < 1) throw InvalidParameter("moment order must be >= 1");
    MomentVector out;
    out.values.assign(M, Rational(0));
    for (const auto& x : sample) {
        Rational p = 1;
        for (unsigned k = 0; k < M; ++k) {
            p *= x;
            out.values[k] += p;
        }
    }
    Rational n(sample.size());
    for (auto& v : out.values) v /= n;
    return out;
}

MomentVector empirical_raw_moments(const std::vector<double>& sample, unsigned M) {
    std::vector<Rational> rat;
    rat.reserve(sample.size());
    for (double x : sample) rat.emplace_back(x);
    return empirical_raw_moments(rat, M);
}

HermiteCoeffs gram_charlier_coeffs(const MomentVector& moments,
                                   const Standardization& std_frame, unsigned M) {
    if (moments.order() < M)
        throw InsufficientMoments("need " + std::to_string(M) + " raw moments, have " +
                                  std::to_string(moments.order()));
    if (M > kMaxHermiteOrder)
        throw InvalidParameter("Gram-Charlier order exceeds the Hermite cap");

    const Rational& a = std_frame.location;
    const Rational& b2 = std_frame.scale2;

    // Shifted moments mu'_k = E[(X - a)^k], exact.
    std::vector<Rational> shifted(M + 1);
    shifted[0] = 1;
    for (unsigned k = 1; k <= M; ++k) {
        Rational acc = 0;
        Rational apow = 1;  // (-a)^(k - j), built from j = k downward
        for (unsigned j = k + 1; j-- > 0;) {
            Rational mj = j == 0 ? Rational(1) : moments.values[j - 1];
            acc += rational_binomial(k, j) * mj * apow;
            apow *= -a;
        }
        shifted[k] = acc;
    }

    HermiteCoeffs out;
    out.degree = M;
    out.coeffs.assign(M + 1, Rational(0));
    out.coeffs[0] = 1;
    for (unsigned n = 1; n <= M; ++n) {
        // He_n only carries monomials of the parity of n, so b appears in
        // even powers except for a single leftover 1/b on odd n.
        auto he = he_monomial_coeffs(n);
        Rational q = 0;      // sum h_k mu'_k / b2^{floor(k/2)}
        Rational b2pow = 1;  // b2^{floor(k/2)}
        for (unsigned k = n % 2; k <= n; k += 2) {
            if (k >= 2) b2pow *= b2;
            if (he[k] != 0) q += he[k] * shifted[k] / b2pow;
        }
        q /= rational_factorial(n);
        if (n % 2 == 1 && q != 0) {
            auto b = rational_sqrt(b2);
            if (!b)
                throw IrrationalScale(
                    "odd Gram-Charlier coefficient is irrational: the "
                    "standardization scale is not a rational number");
            q /= *b;
        }
        out.coeffs[n] = q;
    }
    return out;
}

double family_cdf(const FamilySpec& spec, double x) {
    if (!spec.all_fixed())
        throw InvalidParameter("family_cdf requires all parameters fixed");
    switch (spec.family) {
        case Family::Gaussian: {
            double mu = to_double(fixed_value(spec.params[0]));
            double s2 = to_double(fixed_value(spec.params[1]));
            return 0.5 * std::erfc(-(x - mu) / std::sqrt(2.0 * s2));
        }
        case Family::Gamma: {
            double shape = to_double(fixed_value(spec.params[0]));
            double scale = to_double(fixed_value(spec.params[1]));
            if (x <= 0.0) return 0.0;
            return regularized_gamma_p(shape, x / scale);
        }
        case Family::Exponential: {
            double theta = to_double(fixed_value(spec.params[0]));
            if (x <= 0.0) return 0.0;
            return -std::expm1(-x / theta);
        }
        case Family::Uniform: {
            double a = to_double(fixed_value(spec.params[0]));
            double b = to_double(fixed_value(spec.params[1]));
            if (x <= a) return 0.0;
            if (x >= b) return 1.0;
            return (x - a) / (b - a);
        }
        case Family::StudentT: {
            double nu = to_double(fixed_value(spec.params[0]));
            if (x == 0.0) return 0.5;
            double ib = regularized_beta(nu / 2.0, 0.5, nu / (nu + x * x));
            return x > 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
        }
        case Family::Poisson: {
            double rate = to_double(fixed_value(spec.params[0]));
            if (x < 0.0) return 0.0;
            double k = std::floor(x);
            double term = std::exp(-rate);
            double sum = term;
            for (double i = 1.0; i <= k; ++i) {
                term *= rate / i;
                sum += term;
                if (i > rate && (term < 1e-18 || 1.0 - sum < 1e-16)) break;
            }
            return std::min(sum, 1.0);
        }
    }
    throw InvalidParameter("unknown family");
}

}  // namespace hermix
