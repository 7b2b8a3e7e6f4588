#pragma once

// Worked examples shared by the unit and acceptance tests.

#include <string>
#include <vector>

#include "zpr/groebner.hpp"
#include "zpr/text.hpp"

namespace fixtures {

inline const zpr::Ring Z5(5, 1);
inline const zpr::Ring Z9(3, 2);

// Z_5, S = 1,4,3,3,2.
inline std::vector<zpr::PolyVec> field_generators() {
  return zpr::parse_matrix(Z5, "[1, -x^5-4x^4-3x^3-3x^2-2x]\n[0, x^6]\n");
}
inline std::vector<zpr::PolyVec> field_basis() {
  return zpr::parse_matrix(Z5, "[2x+2, x^4-2x^3+x]\n[x^2-3x-1, 4x^2-3x]\n");
}

// Z_9, S = 1,4,4,7,7.
inline std::vector<zpr::PolyVec> ring_generators() {
  return zpr::parse_matrix(Z9, "[1, 8x^5+5x^4+5x^3+2x^2+2x]\n[0, x^6]\n");
}
inline std::vector<zpr::PolyVec> ring_top_basis() {
  return zpr::parse_matrix(Z9,
                           "[8, x^5+4x^4+4x^3+7x^2+7x]\n"
                           "[x+5, 3x^4+3x^2+x]\n"
                           "[x^2+3x+2, x^2+4x]\n"
                           "[3x+6, 3x]\n");
}

// Z_9, S = 6,3,1,5,6.
inline std::vector<zpr::PolyVec> second_ring_basis() {
  return zpr::parse_matrix(Z9, "[x^3+4x^2+7x+4, x^2+3x]\n[6x^2+8, x^3+5x^2+6x]\n");
}

// Same module iff each side reduces to zero modulo a Groebner basis of the other.
inline bool same_module(const std::vector<zpr::PolyVec>& a, const std::vector<zpr::PolyVec>& b,
                        zpr::MonomialOrder order) {
  const auto ga = zpr::buchberger(a, order).elements();
  const auto gb = zpr::buchberger(b, order).elements();
  for (const auto& f : b) {
    if (!zpr::normal_form(f, ga, order).is_zero()) return false;
  }
  for (const auto& f : a) {
    if (!zpr::normal_form(f, gb, order).is_zero()) return false;
  }
  return true;
}

}  // namespace fixtures
