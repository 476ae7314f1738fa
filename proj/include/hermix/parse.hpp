#pragma once

#include <string>
#include <vector>

#include "hermix/moments.hpp"
#include "hermix/poly.hpp"

namespace hermix {

// Polynomial text grammar: identifiers, integer/rational/decimal literals,
// operators + - * ^, parentheses; no implicit multiplication.
MultiPoly parse_polynomial(const std::string& text, const RingPtr& ring);

// Parses a list of polynomial texts into a shared ring whose variables are
// ordered by first appearance across the list.
std::vector<MultiPoly> parse_polynomials(const std::vector<std::string>& texts);

// Family grammar: `family:key=value,...;family:...`; a value is a decimal
// rational or `?name` marking an unknown.
std::vector<FamilySpec> parse_family_list(const std::string& text);

// CSV/plain text, one value per line; `#` comments and an optional single
// `value` header are skipped. Decimal text is read exactly.
std::vector<Rational> read_sample(const std::string& path);

}  // namespace hermix
