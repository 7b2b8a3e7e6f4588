#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zpr/polyvec.hpp"

namespace zpr {

/// A minimal Groebner basis of a submodule of Z_{p^r}[x]^q.
///
/// Elements are sorted so that lm(g_1) > ... > lm(g_m) and every leading
/// coefficient is exactly p^(r - ord(g_i)). The constructor checks these
/// invariants together with minimality and the same-position monotonicity of
/// degree and order; it throws ValidationFailed when any of them is violated.
class GroebnerBasis {
 public:
  GroebnerBasis(const Ring& ring, std::uint32_t q, MonomialOrder order, std::vector<PolyVec> elements);

  const Ring& ring() const { return ring_; }
  std::uint32_t q() const { return q_; }
  MonomialOrder order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  const std::vector<PolyVec>& elements() const { return elements_; }
  const PolyVec& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<LeadingData>& leading() const { return leading_; }

 private:
  Ring ring_;
  std::uint32_t q_;
  MonomialOrder order_;
  std::vector<PolyVec> elements_;
  std::vector<LeadingData> leading_;
};

struct GroebnerOptions {
  /// Upper bound on pair reductions. Termination is guaranteed, so hitting it means a bug.
  std::size_t iteration_cap = 1'000'000;
};

/// One reduction step of f modulo F (leading-term cancellation).
///
/// The leading term c*x^a*e_i of f is cancellable iff some f_k has the same
/// leading position, deg(f_k) <= a and ord(f_k) >= ord(f). Among those the
/// reducer with the largest leading monomial is used, ties going to the lower
/// index. Returns std::nullopt when f is minimal with respect to F.
std::optional<PolyVec> reduce_step(const PolyVec& f, std::span<const PolyVec> F, MonomialOrder order);

/// Iterates reduce_step until f is zero or minimal with respect to F.
PolyVec normal_form(const PolyVec& f, std::span<const PolyVec> F, MonomialOrder order);

/// Multiplies f by the inverse of the unit part of lc(f) so lc(f) = p^(r - ord(f)).
PolyVec normalize_leading(const PolyVec& f, MonomialOrder order);

/// S-vector of two elements sharing a leading position. Both leading terms are
/// lifted to the lcm degree and scaled to p^max(val) before subtracting.
PolyVec s_vector(const PolyVec& f, const PolyVec& g, MonomialOrder order);
/// p^ord(f) * f, which kills the leading coefficient.
PolyVec annihilator_vector(const PolyVec& f, MonomialOrder order);

GroebnerBasis buchberger(std::span<const PolyVec> generators, MonomialOrder order,
                         const GroebnerOptions& options = {});

/// A pair from the Buchberger criterion whose normal form is nonzero.
struct CriterionFailure {
  std::size_t i = 0;  // 0-based indices into G; i == j marks an annihilator pair
  std::size_t j = 0;
  PolyVec remainder;
};

std::optional<CriterionFailure> find_criterion_failure(std::span<const PolyVec> G, MonomialOrder order);

/// True iff every S-vector and annihilator vector of G reduces to zero modulo G.
bool is_groebner(std::span<const PolyVec> G, MonomialOrder order);
/// True iff G is a Groebner basis whose span equals span(module_generators).
bool is_groebner_of(std::span<const PolyVec> G, std::span<const PolyVec> module_generators, MonomialOrder order);

/// Drops elements whose leading term is a multiple of another's, normalizes
/// leading coefficients and sorts descending by leading monomial. Tail terms
/// divisible by the leading monomial of an element with leading coefficient 1
/// are reduced away; over a field this yields the reduced basis.
GroebnerBasis minimalize(std::span<const PolyVec> G, MonomialOrder order);

/// A coefficient tuple where the leading monomial was not the predicted one.
struct PlmWitness {
  std::vector<Poly> coefficients;
  PolyVec combination;
  std::optional<Monomial> actual;  // empty when the combination vanished
  Monomial predicted;
};

struct PlmReport {
  bool passed = true;
  std::size_t trials = 0;
  std::size_t nonzero_combinations = 0;
  std::optional<PlmWitness> witness;
};

/// Randomized check of the predictable leading monomial property over a field
/// (r = 1). Samples a_i in Z_p[x] of degree <= max_coeff_degree and checks
/// lm(sum a_i f_i) = max lm(a_i) lm(f_i) whenever the sum is nonzero.
/// Throws RingNotField when r > 1.
PlmReport check_plm(std::span<const PolyVec> F, MonomialOrder order, std::size_t trials, std::uint64_t seed,
                    std::uint32_t max_coeff_degree = 3);

}  // namespace zpr
