#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zpr/poly.hpp"
#include "zpr/polyvec.hpp"

// Text grammar (whitespace insignificant):
//   POLY   := TERM (('+'|'-') TERM)*     optional leading sign
//   TERM   := COEFF | COEFF 'x' | COEFF 'x^' EXP | 'x' | 'x^' EXP
//   VECTOR := '[' POLY (',' POLY)* ']'
//   MATRIX := one VECTOR per line; '#' starts a comment
// Both '-' and U+2212 are accepted as minus. Output always uses canonical residues.

namespace zpr {

Poly parse_poly(const Ring& ring, std::string_view text);
PolyVec parse_vector(const Ring& ring, std::string_view text);
/// All rows must have the same length; empty input is a ParseError.
std::vector<PolyVec> parse_matrix(const Ring& ring, std::string_view text);

std::string format_poly(const Poly& f);
std::string format_vector(const PolyVec& f);
std::string format_matrix(const std::vector<PolyVec>& rows);

/// "x^2*e1" style rendering of a monomial.
std::string format_monomial(const Monomial& m);

}  // namespace zpr
