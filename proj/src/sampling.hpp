#pragma once

// Random coefficient tuples shared by the PLM and p-PLM checkers.

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "zpr/polyvec.hpp"

namespace zpr::detail {

/// Coefficients drawn from [0, bound); some entries are left zero on purpose so
/// sparse combinations get exercised. At least one entry is nonzero.
inline std::vector<Poly> random_tuple(std::mt19937_64& rng, const Ring& ring, std::size_t n, std::uint32_t max_deg,
                                      Residue bound) {
  std::uniform_int_distribution<Residue> coeff(0, bound - 1);
  std::uniform_int_distribution<std::uint32_t> degree(0, max_deg);
  std::uniform_int_distribution<int> skip(0, 2);
  std::vector<Poly> out;
  while (true) {
    out.clear();
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Residue> c;
      if (skip(rng) != 0) {
        c.resize(degree(rng) + 1);
        for (auto& v : c) v = coeff(rng);
      }
      out.emplace_back(ring, std::move(c));
      any = any || !out.back().is_zero();
    }
    if (any) return out;
  }
}

/// max over nonzero a_i of x^deg(a_i) * lm(f_i).
inline Monomial predicted_lm(std::span<const Poly> coeffs, std::span<const PolyVec> vectors, MonomialOrder order) {
  std::optional<Monomial> best;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const Monomial m = times_x(lm(vectors[i], order), static_cast<std::uint32_t>(coeffs[i].degree()));
    if (!best || compare(order, m, *best) > 0) best = m;
  }
  return *best;
}

}  // namespace zpr::detail
