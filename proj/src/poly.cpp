#include "zpr/poly.hpp"

#include <algorithm>

#include "zpr/errors.hpp"

namespace zpr {

Poly::Poly(const Ring& ring, std::vector<Residue> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= ring_.modulus();
  trim();
}

Poly Poly::constant(const Ring& ring, Residue c) { return Poly(ring, {c}); }

Poly Poly::monomial(const Ring& ring, Residue c, std::uint32_t exponent) {
  std::vector<Residue> coeffs(exponent + 1, 0);
  coeffs[exponent] = c;
  return Poly(ring, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::scaled(Residue c) const {
  Poly out(ring_);
  out.coeffs_.reserve(coeffs_.size());
  for (Residue a : coeffs_) out.coeffs_.push_back(ring_.mul(a, c));
  out.trim();
  return out;
}

Poly Poly::shifted(std::uint32_t k) const {
  if (is_zero()) return *this;
  Poly out(ring_);
  out.coeffs_.assign(k, 0);
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

bool Poly::has_digit_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](Residue c) { return c < ring_.p(); });
}

Poly Poly::operator-() const {
  Poly out(ring_);
  out.coeffs_.reserve(coeffs_.size());
  for (Residue a : coeffs_) out.coeffs_.push_back(ring_.neg(a));
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_) throw MixedRings();
  Poly out(a.ring_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
    out.coeffs_[k] = a.ring_.add(a.coeff(k), b.coeff(k));
  }
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_) throw MixedRings();
  Poly out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const Ring& ring = a.ring_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = ring.add(out.coeffs_[i + j], ring.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                                b.coeffs_.rend());
}

}  // namespace zpr
