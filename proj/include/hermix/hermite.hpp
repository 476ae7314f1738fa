#pragma once

#include <vector>

#include "hermix/rational.hpp"

namespace hermix {

// Orders above this make double evaluation of the coefficient form
// unreliable; enforced at every entry point.
inline constexpr unsigned kMaxHermiteOrder = 32;

// Coefficients c_0..c_degree of a series sum c_n He_n(x) in the
// probabilists' Hermite basis.
struct HermiteCoeffs {
    unsigned degree = 0;
    std::vector<Rational> coeffs;  // size degree + 1
};

// He_n(x), probabilists' convention: He_0 = 1, He_1 = x,
// He_{n+1} = x He_n - n He_{n-1}.
double he_eval(unsigned n, double x);

// Monomial coefficients a_0..a_n with He_n(x) = sum a_k x^k, exact.
std::vector<Rational> he_monomial_coeffs(unsigned n);

// Hermite-basis coordinates of a polynomial given by monomial
// coefficients p_0..p_d. Inverse of expanding via he_monomial_coeffs.
HermiteCoeffs monomial_to_hermite(const std::vector<Rational>& poly);

// Expansion of a Hermite series back to monomial coefficients, exact.
std::vector<Rational> hermite_to_monomial(const HermiteCoeffs& h);

}  // namespace hermix
