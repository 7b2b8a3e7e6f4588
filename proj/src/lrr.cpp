#include "zpr/lrr.hpp"

#include <algorithm>
#include <set>

#include "zpr/errors.hpp"
#include "zpr/text.hpp"

namespace zpr {

namespace {

std::vector<Residue> reduce_all(const Ring& ring, std::span<const std::int64_t> values) {
  std::vector<Residue> out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(ring.reduce(v));
  return out;
}

// Raw check on a dense coefficient array (low degree first, top entry a unit).
bool satisfies(const Ring& ring, std::span<const Residue> f, std::span<const Residue> seq) {
  const std::size_t L = f.size() - 1;
  if (L >= seq.size()) return true;
  for (std::size_t j = 0; j + L < seq.size(); ++j) {
    Residue acc = 0;
    for (std::size_t k = 0; k <= L; ++k) acc = (acc + f[k] * seq[j + k]) % ring.modulus();
    if (acc != 0) return false;
  }
  return true;
}

// Saturating power used for size estimates.
std::size_t capped_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

SequenceInput::SequenceInput(const Ring& ring_, std::span<const std::int64_t> raw)
    : ring(ring_), values(reduce_all(ring_, raw)) {}

SequenceInput::SequenceInput(const Ring& ring_, std::vector<Residue> raw) : ring(ring_), values(std::move(raw)) {
  for (auto& v : values) v %= ring.modulus();
}

bool is_lrr(const Poly& f, const SequenceInput& S) {
  if (f.ring() != S.ring) throw MixedRings();
  if (f.is_zero() || !S.ring.is_unit(f.lc())) return false;
  const std::size_t L = static_cast<std::size_t>(f.degree());
  if (L >= S.size()) return true;
  for (std::size_t j = 0; j + L < S.size(); ++j) {
    Residue acc = 0;
    for (std::size_t k = 0; k <= L; ++k) acc = S.ring.add(acc, S.ring.mul(f.coeff(k), S.values[j + k]));
    if (acc != 0) return false;
  }
  return true;
}

std::array<PolyVec, 2> build_module(const SequenceInput& S) {
  const Ring& ring = S.ring;
  const std::size_t n = S.size();
  std::vector<Residue> series(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) series[n - k] = ring.neg(S.values[k]);
  const std::array<Poly, 2> first{Poly::constant(ring, 1), Poly(ring, std::move(series))};
  const std::array<Poly, 2> second{Poly(ring), Poly::monomial(ring, 1, static_cast<std::uint32_t>(n + 1))};
  return {PolyVec(ring, first), PolyVec(ring, second)};
}

std::vector<Residue> LrrSolution::pivot_digits() const {
  std::vector<Residue> out;
  for (Residue d = 1; d < ring.p(); ++d) out.push_back(d);
  return out;
}

std::size_t LrrSolution::free_slots() const {
  std::size_t slots = 0;
  for (const auto& g : params) {
    if (!g.d.is_zero()) slots += g.budget + 1;
  }
  return slots;
}

LrrSolution shortest_lrr(const SequenceInput& S, const GroebnerOptions& options) {
  const Ring& ring = S.ring;
  const auto gens = build_module(S);
  const GroebnerBasis G = buchberger(gens, MonomialOrder::TOP, options);
  const PBasis B = build_p_basis(G);

  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < B.size(); ++i) {
    const LeadingData d = leading_data(B[i], MonomialOrder::TOP);
    if (d.lpos() == 1 && d.ord == ring.r()) pivots.push_back(i);
  }
  if (pivots.size() != 1) {
    throw PivotNotUnique("expected one p-basis vector with leading position 1 and order " + std::to_string(ring.r()) +
                         ", found " + std::to_string(pivots.size()));
  }
  const std::size_t ell = pivots.front();
  const PolyVec& pivot = B[ell];
  const std::uint32_t L = deg(pivot, MonomialOrder::TOP);

  Poly d = pivot.component(1);
  if (d.degree() != static_cast<int>(L) || !ring.is_unit(d.lc())) {
    throw ValidationFailed("pivot vector's first component does not carry the leading term");
  }
  const Residue inv = ring.inverse(d.lc());

  LrrSolution sol{ring, S.size(), d.scaled(inv), L, (-pivot.component(2)).scaled(inv), ell, {}, B.vectors()};
  for (std::size_t i = ell + 1; i < B.size(); ++i) {
    const std::uint32_t di = deg(B[i], MonomialOrder::TOP);
    if (di > L) throw ValidationFailed("p-basis vector after the pivot has larger degree");
    sol.params.push_back({i, B[i].component(1), L - di});
  }
  return sol;
}

std::string parametrization_template(const LrrSolution& sol) {
  std::string out = "t0*(" + format_poly(sol.shortest) + ")";
  std::size_t slot = 1;
  for (const auto& g : sol.params) {
    if (g.d.is_zero()) continue;
    std::string q;
    for (std::uint32_t e = g.budget + 1; e-- > 0;) {
      if (!q.empty()) q += "+";
      q += "t" + std::to_string(slot++);
      if (e >= 1) q += "*x";
      if (e >= 2) q += "^" + std::to_string(e);
    }
    out += " + " + (g.budget == 0 ? q : "(" + q + ")") + "*(" + format_poly(g.d) + ")";
  }
  return out;
}

std::vector<Poly> enumerate_shortest(const LrrSolution& sol, bool monic_only, std::size_t cap) {
  const Ring& ring = sol.ring;
  const std::size_t width = sol.length + 1;

  // Each slot is x^e * d_i truncated to degree L; a digit choice scales it.
  std::vector<std::vector<Residue>> slots;
  for (const auto& g : sol.params) {
    if (g.d.is_zero()) continue;
    for (std::uint32_t e = 0; e <= g.budget; ++e) {
      std::vector<Residue> v(width, 0);
      for (std::size_t k = 0; k < g.d.coeffs().size(); ++k) {
        if (k + e >= width) {
          if (g.d.coeffs()[k] != 0) throw ValidationFailed("parametrization slot exceeds the recurrence length");
          continue;
        }
        v[k + e] = g.d.coeffs()[k];
      }
      slots.push_back(std::move(v));
    }
  }

  // Monic results force the pivot digit to 1: every other slot meets x^L in a multiple of p.
  const std::vector<Residue> pivots = monic_only ? std::vector<Residue>{1} : sol.pivot_digits();
  const std::size_t combos = capped_pow(ring.p(), slots.size(), cap);
  if (combos > cap || combos * pivots.size() > cap) {
    throw EnumerationTooLarge("parametrization has " + std::to_string(slots.size()) + " digit slots over " +
                              ring.name() + "; exceeds enumeration cap " + std::to_string(cap));
  }

  std::set<Poly> found;
  std::vector<Residue> digits(slots.size(), 0);
  for (Residue q0 : pivots) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      std::vector<Residue> acc(width, 0);
      for (std::size_t k = 0; k < sol.shortest.coeffs().size(); ++k) acc[k] = ring.mul(q0, sol.shortest.coeffs()[k]);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (digits[s] == 0) continue;
        for (std::size_t k = 0; k < width; ++k) acc[k] = ring.add(acc[k], ring.mul(digits[s], slots[s][k]));
      }
      Poly f(ring, std::move(acc));
      if (!monic_only || (f.degree() == static_cast<int>(sol.length) && f.lc() == 1)) found.insert(std::move(f));

      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == ring.p()) digits[s++] = 0;
      if (s == digits.size()) break;
    }
  }
  return {found.begin(), found.end()};
}

BruteForceResult brute_force_shortest(const SequenceInput& S, std::uint32_t max_deg, std::size_t cap) {
  const Ring& ring = S.ring;
  const std::size_t q = ring.modulus();
  std::size_t units = 0;
  for (Residue c = 1; c < q; ++c) units += ring.is_unit(c) ? 1 : 0;
  std::size_t spent = 0;
  for (std::uint32_t L = 0; L <= max_deg; ++L) {
    // Charged per degree: the search stops at the first degree with a solution.
    const std::size_t per_lc = capped_pow(q, L, cap);
    if (per_lc > cap / units || spent + per_lc * units > cap) {
      throw EnumerationTooLarge("brute force over " + ring.name() + " at degree " + std::to_string(L) +
                                " exceeds enumeration cap " + std::to_string(cap));
    }
    spent += per_lc * units;
    std::set<Poly> monic;
    std::vector<Residue> f(L + 1, 0);
    for (Residue top = 1; top < q; ++top) {
      if (!ring.is_unit(top)) continue;
      const Residue inv = ring.inverse(top);
      std::fill(f.begin(), f.end(), 0);
      f[L] = top;
      while (true) {
        if (satisfies(ring, f, S.values)) {
          std::vector<Residue> normalized(f.size());
          for (std::size_t k = 0; k < f.size(); ++k) normalized[k] = ring.mul(f[k], inv);
          monic.insert(Poly(ring, std::move(normalized)));
        }
        std::size_t k = 0;
        while (k < L && ++f[k] == q) f[k++] = 0;
        if (k == L) break;
      }
    }
    if (!monic.empty()) return {L, {monic.begin(), monic.end()}};
  }
  return {max_deg + 1, {}};
}

BruteForceResult brute_force_shortest(const SequenceInput& S) {
  return brute_force_shortest(S, static_cast<std::uint32_t>(S.size()));
}

}  // namespace zpr
