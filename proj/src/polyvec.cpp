#include "zpr/polyvec.hpp"

#include <algorithm>
#include <string>

#include "zpr/errors.hpp"

namespace zpr {

const char* to_string(MonomialOrder order) { return order == MonomialOrder::TOP ? "TOP" : "POT"; }

MonomialOrder parse_order(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "top") return MonomialOrder::TOP;
  if (lower == "pot") return MonomialOrder::POT;
  throw ParseError("unknown monomial order '" + std::string(name) + "' (expected top or pot)");
}

std::strong_ordering compare(MonomialOrder order, const Monomial& x, const Monomial& y) {
  // A larger position index is the smaller monomial in both orders.
  const auto by_alpha = x.alpha <=> y.alpha;
  const auto by_pos = y.pos <=> x.pos;
  if (order == MonomialOrder::TOP) return by_alpha != 0 ? by_alpha : by_pos;
  return by_pos != 0 ? by_pos : by_alpha;
}

namespace {

bool storage_less(const Monomial& a, const Monomial& b) {
  return a.pos != b.pos ? a.pos < b.pos : a.alpha < b.alpha;
}

}  // namespace

PolyVec::PolyVec(const Ring& ring, std::uint32_t q) : ring_(ring), q_(q) {
  if (q == 0) throw DimensionMismatch("ambient dimension q must be at least 1");
}

PolyVec::PolyVec(const Ring& ring, std::span<const Poly> components)
    : PolyVec(ring, static_cast<std::uint32_t>(components.size())) {
  for (std::uint32_t i = 0; i < q_; ++i) {
    const Poly& c = components[i];
    if (c.ring() != ring_) throw MixedRings();
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      if (c.coeffs()[k] != 0) terms_.push_back({{static_cast<std::uint32_t>(k), i + 1}, c.coeffs()[k]});
    }
  }
}

PolyVec PolyVec::unit_vector(const Ring& ring, std::uint32_t q, std::uint32_t pos) {
  PolyVec out(ring, q);
  if (pos < 1 || pos > q) throw DimensionMismatch("position out of range");
  out.terms_.push_back({{0, pos}, 1});
  return out;
}

Residue PolyVec::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return storage_less(t.mono, key); });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

Poly PolyVec::component(std::uint32_t pos) const {
  if (pos < 1 || pos > q_) throw DimensionMismatch("position out of range");
  std::vector<Residue> coeffs;
  for (const Term& t : terms_) {
    if (t.mono.pos != pos) continue;
    if (coeffs.size() <= t.mono.alpha) coeffs.resize(t.mono.alpha + 1, 0);
    coeffs[t.mono.alpha] = t.coeff;
  }
  return Poly(ring_, std::move(coeffs));
}

std::vector<Poly> PolyVec::components() const {
  std::vector<Poly> out;
  out.reserve(q_);
  for (std::uint32_t i = 1; i <= q_; ++i) out.push_back(component(i));
  return out;
}

PolyVec PolyVec::mul_term(Residue c, std::uint32_t shift) const {
  PolyVec out(ring_, q_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    const Residue v = ring_.mul(t.coeff, c);
    if (v != 0) out.terms_.push_back({times_x(t.mono, shift), v});
  }
  return out;
}

PolyVec PolyVec::operator-() const { return mul_term(ring_.neg(1), 0); }

void PolyVec::check_compatible(const PolyVec& other) const {
  if (ring_ != other.ring_) throw MixedRings();
  if (q_ != other.q_) throw DimensionMismatch("vectors of length " + std::to_string(q_) + " and " +
                                              std::to_string(other.q_));
}

PolyVec operator+(const PolyVec& f, const PolyVec& g) {
  f.check_compatible(g);
  PolyVec out(f.ring_, f.q_);
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin();
  auto b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && storage_less(a->mono, b->mono))) {
      out.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || storage_less(b->mono, a->mono)) {
      out.terms_.push_back(*b++);
    } else {
      const Residue v = f.ring_.add(a->coeff, b->coeff);
      if (v != 0) out.terms_.push_back({a->mono, v});
      ++a;
      ++b;
    }
  }
  return out;
}

PolyVec operator-(const PolyVec& f, const PolyVec& g) { return f + (-g); }

PolyVec add(const PolyVec& f, const PolyVec& g) { return f + g; }

PolyVec scale(const RingElem& c, const PolyVec& f) {
  if (c.ring() != f.ring()) throw MixedRings();
  return f.scaled(c.value());
}

PolyVec shift_mul(const Poly& a, const PolyVec& f) {
  if (a.ring() != f.ring()) throw MixedRings();
  PolyVec out(f.ring(), f.q());
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k] != 0) out = out + f.mul_term(a.coeffs()[k], static_cast<std::uint32_t>(k));
  }
  return out;
}

PolyVec linear_combination(std::span<const Poly> coeffs, std::span<const PolyVec> vectors) {
  if (coeffs.size() != vectors.size() || vectors.empty()) {
    throw DimensionMismatch("coefficient count does not match vector count");
  }
  PolyVec out(vectors.front().ring(), vectors.front().q());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!coeffs[i].is_zero()) out = out + shift_mul(coeffs[i], vectors[i]);
  }
  return out;
}

Term lt(const PolyVec& f, MonomialOrder order) {
  if (f.is_zero()) throw ZeroVector();
  const auto& terms = f.terms();
  auto best = std::max_element(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compare(order, a.mono, b.mono) < 0;
  });
  return *best;
}

Monomial lm(const PolyVec& f, MonomialOrder order) { return lt(f, order).mono; }
Residue lc(const PolyVec& f, MonomialOrder order) { return lt(f, order).coeff; }
std::uint32_t lpos(const PolyVec& f, MonomialOrder order) { return lm(f, order).pos; }
std::uint32_t deg(const PolyVec& f, MonomialOrder order) { return lm(f, order).alpha; }
std::uint32_t ord_vec(const PolyVec& f, MonomialOrder order) { return f.ring().order(lc(f, order)); }

LeadingData leading_data(const PolyVec& f, MonomialOrder order) {
  const Term t = lt(f, order);
  return {t.mono, t.coeff, f.ring().order(t.coeff)};
}

}  // namespace zpr
