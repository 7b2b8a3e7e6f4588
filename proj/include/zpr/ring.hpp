#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zpr {

using Residue = std::uint64_t;

/// Parameters of the chain ring Z_{p^r}.
///
/// p must be prime and at most 2^16; p^r must stay below 2^32 so that the
/// product of two residues fits in 64 bits.
class Ring {
 public:
  Ring(std::uint32_t p, std::uint32_t r);

  /// Parses "p^r" given as a single integer (9 -> Z_{3^2}). Throws InvalidRing
  /// unless the value is a prime power >= 2.
  static Ring from_modulus(std::uint64_t modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  Residue modulus() const { return modulus_; }
  bool is_field() const { return r_ == 1; }

  Residue reduce(std::int64_t v) const;
  Residue add(Residue a, Residue b) const { return (a + b) % modulus_; }
  Residue sub(Residue a, Residue b) const { return (a + modulus_ - b) % modulus_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
  Residue mul(Residue a, Residue b) const { return (a * b) % modulus_; }

  /// Largest v with p^v | a; v = r for a = 0.
  std::uint32_t valuation(Residue a) const;
  /// Size exponent of the additive subgroup generated by a: r - valuation(a).
  std::uint32_t order(Residue a) const { return r_ - valuation(a); }
  bool is_unit(Residue a) const { return a % p_ != 0; }

  /// Inverse of a unit via extended Euclid. Throws NotAUnit otherwise.
  Residue inverse(Residue a) const;
  /// a = p^valuation(a) * unit_part(a); unit_part(0) = 1.
  Residue unit_part(Residue a) const;
  Residue pow_p(std::uint32_t e) const;

  /// Digits (theta_0, ..., theta_{r-1}) with a = sum p^l theta_l.
  std::vector<Residue> p_adic_digits(Residue a) const;

  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t r_;
  Residue modulus_;
};

/// A residue paired with its ring. Arithmetic between different rings throws MixedRings.
class RingElem {
 public:
  RingElem(const Ring& ring, std::int64_t value) : ring_(ring), value_(ring.reduce(value)) {}

  const Ring& ring() const { return ring_; }
  Residue value() const { return value_; }

  std::uint32_t order() const { return ring_.order(value_); }
  bool is_unit() const { return ring_.is_unit(value_); }
  RingElem inverse() const;
  std::vector<Residue> p_adic_digits() const { return ring_.p_adic_digits(value_); }

  RingElem operator-() const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  Ring ring_;
  Residue value_;
};

std::uint32_t ord(const RingElem& a);
std::vector<Residue> p_adic_expand(const RingElem& a);
RingElem unit_inverse(const RingElem& a);

bool is_prime(std::uint64_t n);

}  // namespace zpr
