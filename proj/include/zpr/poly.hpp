#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "zpr/ring.hpp"

namespace zpr {

/// Dense univariate polynomial over Z_{p^r}; coefficients stored low degree first,
/// with no trailing zeros.
class Poly {
 public:
  explicit Poly(const Ring& ring) : ring_(ring) {}
  Poly(const Ring& ring, std::vector<Residue> coeffs);

  static Poly constant(const Ring& ring, Residue c);
  static Poly monomial(const Ring& ring, Residue c, std::uint32_t exponent);

  const Ring& ring() const { return ring_; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Residue coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  /// Leading coefficient; 0 for the zero polynomial.
  Residue lc() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Poly scaled(Residue c) const;
  Poly shifted(std::uint32_t k) const;
  bool has_digit_coeffs() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Orders by degree, then by coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void trim();

  Ring ring_;
  std::vector<Residue> coeffs_;
};

}  // namespace zpr
