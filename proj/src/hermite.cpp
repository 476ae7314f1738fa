#include "hermix/hermite.hpp"

#include "hermix/errors.hpp"

namespace hermix {

namespace {

void check_order(unsigned n) {
    if (n > kMaxHermiteOrder)
        throw InvalidParameter("Hermite order " + std::to_string(n) +
                               " exceeds the supported maximum " +
                               std::to_string(kMaxHermiteOrder));
}

}  // namespace

double he_eval(unsigned n, double x) {
    check_order(n);
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (unsigned k = 1; k < n; ++k) {
        double next = x * cur - static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<Rational> he_monomial_coeffs(unsigned n) {
    check_order(n);
    std::vector<Rational> prev{1};        // He_0
    if (n == 0) return prev;
    std::vector<Rational> cur{0, 1};      // He_1
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Rational> next(k + 2, Rational(0));
        for (unsigned i = 0; i <= k; ++i) next[i + 1] += cur[i];      // x He_k
        for (unsigned i = 0; i < prev.size(); ++i)
            next[i] -= Rational(k) * prev[i];                         // - k He_{k-1}
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

HermiteCoeffs monomial_to_hermite(const std::vector<Rational>& poly) {
    if (poly.empty()) throw InvalidParameter("empty polynomial");
    unsigned degree = static_cast<unsigned>(poly.size() - 1);
    check_order(degree);

    // Peel off the top Hermite order repeatedly: the leading monomial
    // coefficient of He_n is 1, so c_n equals the current x^n coefficient.
    std::vector<Rational> rem = poly;
    HermiteCoeffs out;
    out.degree = degree;
    out.coeffs.assign(degree + 1, Rational(0));
    for (unsigned n = degree; ; --n) {
        Rational c = rem[n];
        out.coeffs[n] = c;
        if (c != 0) {
            auto he = he_monomial_coeffs(n);
            for (unsigned i = 0; i <= n; ++i) rem[i] -= c * he[i];
        }
        if (n == 0) break;
    }
    return out;
}

std::vector<Rational> hermite_to_monomial(const HermiteCoeffs& h) {
    check_order(h.degree);
    if (h.coeffs.size() != h.degree + 1)
        throw InvalidParameter("HermiteCoeffs length mismatch");
    std::vector<Rational> out(h.degree + 1, Rational(0));
    for (unsigned n = 0; n <= h.degree; ++n) {
        if (h.coeffs[n] == 0) continue;
        auto he = he_monomial_coeffs(n);
        for (unsigned i = 0; i <= n; ++i) out[i] += h.coeffs[n] * he[i];
    }
    return out;
}

}  // namespace hermix
