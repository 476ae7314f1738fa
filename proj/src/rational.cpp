#include "hermix/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "hermix/errors.hpp"

namespace hermix {

Rational rational_factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational rational_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return Rational(num, den);
}

namespace {

// cpp_int reads a leading 0 as an octal prefix; parse decimal integers
// ourselves so "05" and "-012" mean what the sample files mean.
Int decimal_int(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw InvalidParameter("malformed integer: " + text);
    Int value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidParameter("malformed integer: " + text);
        value = value * 10 + (text[i] - '0');
    }
    return neg ? Int(-value) : value;
}

}  // namespace

Rational rational_from_text(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidParameter("empty numeric literal");

    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        Int n = decimal_int(s.substr(0, slash));
        Int d = decimal_int(s.substr(slash + 1));
        if (d == 0) throw InvalidParameter("zero denominator: " + s);
        return Rational(n, d);
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    long long exponent = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            try {
                exponent = std::stoll(s.substr(i + 1));
            } catch (const std::exception&) {
                throw InvalidParameter("malformed numeric literal: " + s);
            }
            i = s.size() - 1;
            break;
        } else {
            throw InvalidParameter("malformed numeric literal: " + s);
        }
    }
    if (!seen_digit) throw InvalidParameter("malformed numeric literal: " + s);

    Int mantissa = decimal_int(digits.empty() ? "0" : digits);
    if (neg) mantissa = -mantissa;
    long long pow10 = exponent - frac_digits;
    Rational q(mantissa);
    Int ten = 10;
    if (pow10 > 0) {
        q *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(pow10)));
    } else if (pow10 < 0) {
        q /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-pow10)));
    }
    return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    Int rn = boost::multiprecision::sqrt(num);
    Int rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

Rational round_to_denominator(double x, long long denom) {
    double scaled = std::nearbyint(x * static_cast<double>(denom));
    // Large magnitudes exceed exact integer representation in double;
    // fall back to the exact binary value of x.
    if (std::abs(scaled) >= 9.0e15) {
        Rational q(x);
        return q;
    }
    return Rational(Int(static_cast<long long>(scaled)), Int(denom));
}

std::string rational_to_string(const Rational& q) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace hermix
