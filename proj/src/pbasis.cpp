#include "zpr/pbasis.hpp"

#include <random>
#include <string>

#include "sampling.hpp"
#include "zpr/errors.hpp"
#include "zpr/text.hpp"

namespace zpr {

OrderDiffs order_differences(const GroebnerBasis& G) {
  const auto& lead = G.leading();
  OrderDiffs betas(lead.size());
  for (std::size_t j = 0; j < lead.size(); ++j) {
    betas[j] = lead[j].ord;
    for (std::size_t i = j + 1; i < lead.size(); ++i) {
      if (lead[i].lpos() == lead[j].lpos()) {
        betas[j] = lead[j].ord - lead[i].ord;
        break;
      }
    }
    if (betas[j] < 1) throw ValidationFailed("order difference below 1 at element " + std::to_string(j + 1));
  }
  return betas;
}

PBasis::PBasis(const GroebnerBasis& basis, OrderDiffs betas, std::vector<PolyVec> vectors,
               std::vector<Provenance> provenance)
    : ring_(basis.ring()),
      q_(basis.q()),
      order_(basis.order()),
      betas_(std::move(betas)),
      vectors_(std::move(vectors)),
      provenance_(std::move(provenance)),
      source_(basis.elements()) {
  if (vectors_.size() != provenance_.size()) throw ValidationFailed("provenance does not match vectors");
}

std::optional<std::size_t> PBasis::find(std::uint32_t position, std::uint32_t order) const {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const LeadingData d = leading_data(vectors_[i], order_);
    if (d.lpos() == position && d.ord == order) return i;
  }
  return std::nullopt;
}

std::vector<Poly> p_represent_tail(const PolyVec& f, const PBasis& B, std::size_t first) {
  const Ring& ring = B.ring();
  const MonomialOrder order = B.order();
  if (f.ring() != ring) throw MixedRings();
  if (f.q() != B.q()) throw DimensionMismatch("vector length differs from the p-basis");

  std::vector<LeadingData> lead;
  for (std::size_t k = first; k < B.size(); ++k) lead.push_back(leading_data(B[k], order));
  std::vector<std::vector<Residue>> coeffs(lead.size());

  PolyVec rest = f;
  while (!rest.is_zero()) {
    const Term top = lt(rest, order);
    const auto digits = ring.p_adic_digits(top.coeff);
    PolyVec next = rest;
    for (std::uint32_t t = 0; t < ring.r(); ++t) {
      if (digits[t] == 0) continue;
      // A digit at p^t needs the vector of order r - t in this position.
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < lead.size() && !hit; ++k) {
        if (lead[k].lpos() == top.mono.pos && lead[k].ord == ring.r() - t && lead[k].deg() <= top.mono.alpha &&
            lead[k].lc == ring.pow_p(t)) {
          hit = k;
        }
      }
      if (!hit) {
        throw NotInModule(format_vector(f) + " is not in the p-span: no basis vector matches digit " +
                          std::to_string(digits[t]) + "*p^" + std::to_string(t) + " at " +
                          format_monomial(top.mono));
      }
      const std::uint32_t shift = top.mono.alpha - lead[*hit].deg();
      auto& a = coeffs[*hit];
      if (a.size() <= shift) a.resize(shift + 1, 0);
      if (a[shift] != 0) throw ValidationFailed("digit slot used twice; p-PLM property violated");
      a[shift] = digits[t];
      next = next - B[first + *hit].mul_term(digits[t], shift);
    }
    if (!next.is_zero() && compare(order, lm(next, order), top.mono) >= 0) {
      throw ValidationFailed("digit peeling did not cancel the leading term of " + format_vector(rest));
    }
    rest = std::move(next);
  }

  std::vector<Poly> out;
  out.reserve(coeffs.size());
  for (auto& c : coeffs) out.emplace_back(ring, std::move(c));
  return out;
}

std::vector<Poly> p_represent(const PolyVec& f, const PBasis& B) { return p_represent_tail(f, B, 0); }

PBasis build_p_basis(const GroebnerBasis& G) {
  const Ring& ring = G.ring();
  OrderDiffs betas = order_differences(G);
  std::vector<PolyVec> vectors;
  std::vector<Provenance> provenance;
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::uint32_t k = 0; k < betas[j]; ++k) {
      vectors.push_back(G[j].scaled(ring.pow_p(k)));
      provenance.push_back({j, k});
    }
  }
  PBasis basis(G, std::move(betas), std::move(vectors), std::move(provenance));

  const std::size_t n = basis.size();
  if (n == 0) return basis;
  const MonomialOrder order = basis.order();
  if (!basis[n - 1].scaled(ring.p()).is_zero()) throw ValidationFailed("p * v_N is not zero");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const PolyVec target = basis[i].scaled(ring.p());
    std::vector<Poly> coeffs;
    try {
      coeffs = p_represent_tail(target, basis, i + 1);
    } catch (const NotInModule& e) {
      throw ValidationFailed("p * v_" + std::to_string(i + 1) + " is not a p-combination of later vectors: " +
                             e.what());
    }
    const std::span<const PolyVec> tail(basis.vectors().begin() + static_cast<std::ptrdiff_t>(i + 1),
                                        basis.vectors().end());
    if (linear_combination(coeffs, tail) != target) {
      throw ValidationFailed("re-evaluated p-combination differs for v_" + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const LeadingData a = leading_data(basis[i], order);
      const LeadingData b = leading_data(basis[j], order);
      if (a.lpos() == b.lpos() && a.ord == b.ord) {
        throw ValidationFailed("v_" + std::to_string(i + 1) + " and v_" + std::to_string(j + 1) +
                               " share leading position and order");
      }
    }
  }
  return basis;
}

std::size_t p_dim(const PBasis& B) { return B.size(); }

PPlmReport check_p_plm(std::span<const PolyVec> vectors, MonomialOrder order, std::size_t trials,
                       std::uint64_t seed, std::uint32_t max_coeff_degree) {
  PPlmReport report;
  if (vectors.empty()) return report;
  for (const auto& v : vectors) {
    if (v.is_zero()) throw ZeroVector();
  }
  const Ring& ring = vectors.front().ring();
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    auto coeffs = detail::random_tuple(rng, ring, vectors.size(), max_coeff_degree, ring.p());
    PolyVec f = linear_combination(coeffs, vectors);
    const Monomial predicted = detail::predicted_lm(coeffs, vectors, order);
    std::optional<Monomial> actual;
    if (!f.is_zero()) actual = lm(f, order);
    if (!actual || *actual != predicted) {
      report.passed = false;
      report.witness = PlmWitness{std::move(coeffs), std::move(f), actual, predicted};
      break;
    }
  }
  return report;
}

PPlmReport check_p_plm(const PBasis& B, std::size_t trials, std::uint64_t seed, std::uint32_t max_coeff_degree) {
  return check_p_plm(B.vectors(), B.order(), trials, seed, max_coeff_degree);
}

}  // namespace zpr
