#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hermix/rational.hpp"

namespace hermix {

struct PolyRing {
    std::vector<std::string> vars;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<unsigned> exp;

    unsigned total_degree() const;
    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const;  // assumes divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial one(std::size_t nvars);

    bool operator==(const Monomial& other) const = default;
    // Storage order only; term ordering for algebra goes through MonomialOrder.
    bool operator<(const Monomial& other) const { return exp < other.exp; }
};

enum class OrderKind { lex, degrevlex };

struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(RingPtr ring);
    static MultiPoly constant(RingPtr ring, const Rational& c);
    static MultiPoly variable(RingPtr ring, std::size_t index);
    static MultiPoly term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& other) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    // Leading data under the given order; polynomial must be nonzero.
    const Monomial& leading_monomial(const MonomialOrder& order) const;
    Rational leading_coeff(const MonomialOrder& order) const;
    MultiPoly monic(const MonomialOrder& order) const;

    std::string to_string() const;

private:
    void require_same_ring(const MultiPoly& other) const;

    RingPtr ring_;
    std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<MultiPoly> elements;  // reduced, monic, sorted by leading monomial
};

struct QuotientBasis {
    std::vector<Monomial> monomials;  // standard monomials, increasing order
};

// Remainder of multivariate division of f by the basis elements; no term of
// the result is divisible by any leading term of G.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G);
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                      const MonomialOrder& order);

// Reduced Groebner basis of the ideal generated by `generators`.
GroebnerBasis buchberger(const std::vector<MultiPoly>& generators,
                         const MonomialOrder& order);

// Standard monomials of R[x]/I; throws NotZeroDimensional when infinite.
QuotientBasis quotient_basis(const GroebnerBasis& G);

}  // namespace hermix
