#include "zpr/ring.hpp"

#include <limits>

#include "zpr/errors.hpp"

namespace zpr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring::Ring(std::uint32_t p, std::uint32_t r) : p_(p), r_(r), modulus_(1) {
  if (p > (1u << 16) || !is_prime(p)) {
    throw InvalidRing("p = " + std::to_string(p) + " is not a supported prime");
  }
  if (r < 1) throw InvalidRing("r must be at least 1");
  constexpr Residue limit = Residue{1} << 32;
  for (std::uint32_t i = 0; i < r; ++i) {
    modulus_ *= p;
    if (modulus_ >= limit) {
      throw InvalidRing("p^r = " + std::to_string(p) + "^" + std::to_string(r) +
                        " exceeds the native residue width");
    }
  }
}

Ring Ring::from_modulus(std::uint64_t modulus) {
  if (modulus < 2) throw InvalidRing("ring size must be a prime power >= 2");
  std::uint64_t p = 2;
  while (p * p <= modulus && modulus % p != 0) ++p;
  if (modulus % p != 0) p = modulus;  // modulus itself is prime
  std::uint32_t r = 0;
  std::uint64_t rest = modulus;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) {
    throw InvalidRing(std::to_string(modulus) + " is not a prime power");
  }
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidRing("prime too large");
  }
  return Ring(static_cast<std::uint32_t>(p), r);
}

Residue Ring::reduce(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t res = v % m;
  if (res < 0) res += m;
  return static_cast<Residue>(res);
}

std::uint32_t Ring::valuation(Residue a) const {
  a %= modulus_;
  if (a == 0) return r_;
  std::uint32_t v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Residue Ring::unit_part(Residue a) const {
  a %= modulus_;
  if (a == 0) return 1;
  while (a % p_ == 0) a /= p_;
  return a;
}

Residue Ring::pow_p(std::uint32_t e) const {
  Residue out = 1;
  for (std::uint32_t i = 0; i < e && out != 0; ++i) out = mul(out, p_);
  return out;
}

Residue Ring::inverse(Residue a) const {
  a %= modulus_;
  if (!is_unit(a)) {
    throw NotAUnit(std::to_string(a) + " is not a unit in " + name());
  }
  // Extended Euclid on (a, p^r).
  std::int64_t old_r = static_cast<std::int64_t>(a);
  std::int64_t cur_r = static_cast<std::int64_t>(modulus_);
  std::int64_t old_s = 1;
  std::int64_t cur_s = 0;
  while (cur_r != 0) {
    const std::int64_t quot = old_r / cur_r;
    std::int64_t tmp = old_r - quot * cur_r;
    old_r = cur_r;
    cur_r = tmp;
    tmp = old_s - quot * cur_s;
    old_s = cur_s;
    cur_s = tmp;
  }
  return reduce(old_s);
}

std::vector<Residue> Ring::p_adic_digits(Residue a) const {
  a %= modulus_;
  std::vector<Residue> digits(r_, 0);
  for (std::uint32_t l = 0; l < r_; ++l) {
    digits[l] = a % p_;
    a /= p_;
  }
  return digits;
}

std::string Ring::name() const { return "Z_" + std::to_string(modulus_); }

RingElem RingElem::inverse() const { return RingElem(ring_, static_cast<std::int64_t>(ring_.inverse(value_))); }

RingElem RingElem::operator-() const {
  return RingElem(ring_, static_cast<std::int64_t>(ring_.neg(value_)));
}

namespace {
void require_same(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) throw MixedRings();
}
}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  return RingElem(a.ring_, static_cast<std::int64_t>(a.ring_.add(a.value_, b.value_)));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  return RingElem(a.ring_, static_cast<std::int64_t>(a.ring_.sub(a.value_, b.value_)));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  return RingElem(a.ring_, static_cast<std::int64_t>(a.ring_.mul(a.value_, b.value_)));
}

std::uint32_t ord(const RingElem& a) { return a.order(); }

std::vector<Residue> p_adic_expand(const RingElem& a) { return a.p_adic_digits(); }

RingElem unit_inverse(const RingElem& a) { return a.inverse(); }

}  // namespace zpr
