#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "zpr/poly.hpp"
#include "zpr/ring.hpp"

namespace zpr {

/// x^alpha * e_pos, with pos counted from 1.
struct Monomial {
  std::uint32_t alpha = 0;
  std::uint32_t pos = 1;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Positional monomial orders: term over position, position over term.
enum class MonomialOrder { TOP, POT };

const char* to_string(MonomialOrder order);
MonomialOrder parse_order(std::string_view name);

/// TOP: X < Y iff alpha < beta, or alpha = beta and pos(X) > pos(Y).
/// POT: X < Y iff pos(X) > pos(Y), or same position and alpha < beta.
std::strong_ordering compare(MonomialOrder order, const Monomial& x, const Monomial& y);

/// Multiplies a monomial by x^shift; preserves order in both orders.
inline Monomial times_x(const Monomial& m, std::uint32_t shift) { return {m.alpha + shift, m.pos}; }

struct Term {
  Monomial mono;
  Residue coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Z_{p^r}[x]^q stored as a sparse list of nonzero terms sorted by
/// (pos, alpha). Orders are applied on demand, never baked into storage.
class PolyVec {
 public:
  PolyVec(const Ring& ring, std::uint32_t q);
  /// Builds from one scalar polynomial per position.
  PolyVec(const Ring& ring, std::span<const Poly> components);

  static PolyVec unit_vector(const Ring& ring, std::uint32_t q, std::uint32_t pos);

  const Ring& ring() const { return ring_; }
  std::uint32_t q() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  Residue coeff(const Monomial& m) const;
  /// Component at position pos (1-based).
  Poly component(std::uint32_t pos) const;
  std::vector<Poly> components() const;

  /// c * x^shift * f.
  PolyVec mul_term(Residue c, std::uint32_t shift) const;
  PolyVec scaled(Residue c) const { return mul_term(c, 0); }

  PolyVec operator-() const;
  friend PolyVec operator+(const PolyVec& f, const PolyVec& g);
  friend PolyVec operator-(const PolyVec& f, const PolyVec& g);

  friend bool operator==(const PolyVec&, const PolyVec&) = default;

 private:
  void check_compatible(const PolyVec& other) const;

  Ring ring_;
  std::uint32_t q_;
  std::vector<Term> terms_;
};

PolyVec add(const PolyVec& f, const PolyVec& g);
PolyVec scale(const RingElem& c, const PolyVec& f);
/// a(x) * f for a scalar polynomial a.
PolyVec shift_mul(const Poly& a, const PolyVec& f);
/// sum a_i * f_i; both spans must have the same length and be nonempty.
PolyVec linear_combination(std::span<const Poly> coeffs, std::span<const PolyVec> vectors);

/// Leading data under an order. All throw ZeroVector for f = 0.
Term lt(const PolyVec& f, MonomialOrder order);
Monomial lm(const PolyVec& f, MonomialOrder order);
Residue lc(const PolyVec& f, MonomialOrder order);
std::uint32_t lpos(const PolyVec& f, MonomialOrder order);
std::uint32_t deg(const PolyVec& f, MonomialOrder order);
/// Order of the leading coefficient.
std::uint32_t ord_vec(const PolyVec& f, MonomialOrder order);

struct LeadingData {
  Monomial lm;
  Residue lc = 0;
  std::uint32_t ord = 0;

  std::uint32_t lpos() const { return lm.pos; }
  std::uint32_t deg() const { return lm.alpha; }

  friend bool operator==(const LeadingData&, const LeadingData&) = default;
};

LeadingData leading_data(const PolyVec& f, MonomialOrder order);

}  // namespace zpr
