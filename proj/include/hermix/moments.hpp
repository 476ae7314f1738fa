#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hermix/hermite.hpp"
#include "hermix/poly.hpp"
#include "hermix/rational.hpp"

namespace hermix {

enum class Family { Gaussian, Gamma, Exponential, Uniform, StudentT, Poisson };

// A family parameter is either a fixed rational or a named unknown.
using Param = std::variant<Rational, std::string>;

inline bool is_fixed(const Param& p) { return std::holds_alternative<Rational>(p); }
inline const Rational& fixed_value(const Param& p) { return std::get<Rational>(p); }
inline const std::string& unknown_name(const Param& p) { return std::get<std::string>(p); }

struct FamilySpec {
    Family family;
    std::vector<Param> params;

    static FamilySpec gaussian(Param mu, Param sigma2);
    static FamilySpec gamma(Param shape, Param scale);
    static FamilySpec exponential(Param theta);
    static FamilySpec uniform(Param a, Param b);
    static FamilySpec student_t(Param nu);
    static FamilySpec poisson(Param rate);

    bool all_fixed() const;
    std::vector<std::string> unknowns() const;
    std::string family_name() const;
    std::string describe() const;  // grammar form, e.g. "gaussian:mu=0,sigma2=1"

    // Mean and variance; all parameters must be fixed.
    Rational mean() const;
    Rational variance() const;
};

struct MomentVector {
    std::vector<Rational> values;  // m_1 .. m_M

    unsigned order() const { return static_cast<unsigned>(values.size()); }
    std::vector<double> as_doubles() const;
};

// Gram-Charlier reference frame z = (x - location) / scale. The scale is
// carried as its square so own-variance standardizations stay exact.
struct Standardization {
    Rational location;
    Rational scale2;

    static Standardization from_scale(const Rational& a, const Rational& b);
    static Standardization from_variance(const Rational& a, const Rational& var);
    double scale() const;
};

// Exact raw moments m_1..m_M from the family closed forms.
MomentVector raw_moments(const FamilySpec& spec, unsigned M);

// Raw moments as polynomials over the unknown parameter names; fixed
// parameters are inlined as rational constants. The ring must contain
// every unknown of the spec.
std::vector<MultiPoly> symbolic_raw_moments(const FamilySpec& spec, unsigned M,
                                            const RingPtr& ring);

MomentVector empirical_raw_moments(const std::vector<Rational>& sample, unsigned M);
MomentVector empirical_raw_moments(const std::vector<double>& sample, unsigned M);

// c_n = E[He_n((X - a)/b)] / n! expanded into raw moments, exact.
HermiteCoeffs gram_charlier_coeffs(const MomentVector& moments,
                                   const Standardization& std_frame, unsigned M);

double family_cdf(const FamilySpec& spec, double x);

}  // namespace hermix
