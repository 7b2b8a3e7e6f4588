#include "zpr/groebner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "sampling.hpp"
#include "zpr/errors.hpp"
#include "zpr/text.hpp"

namespace zpr {

namespace {

bool divides(const LeadingData& d, const LeadingData& target) {
  return d.lpos() == target.lpos() && d.deg() <= target.deg() && d.ord >= target.ord;
}

void require_nonzero(std::span<const PolyVec> F) {
  for (const auto& f : F) {
    if (f.is_zero()) throw ZeroVector();
  }
}

// Clears every non-leading term whose monomial is a multiple of the leading
// monomial of another element with leading coefficient 1. Such terms can always
// be removed, and the leading data does not change.
void reduce_unit_tails(std::vector<PolyVec>& G, MonomialOrder order) {
  const std::uint32_t r = G.empty() ? 0 : G.front().ring().r();
  std::vector<LeadingData> data;
  for (const auto& g : G) data.push_back(leading_data(g, order));
  for (std::size_t i = 0; i < G.size(); ++i) {
    while (true) {
      // Largest reducible tail term; subtracting only introduces smaller terms.
      std::optional<std::pair<Term, std::size_t>> best;
      for (const Term& t : G[i].terms()) {
        if (t.mono == data[i].lm) continue;
        for (std::size_t k = 0; k < G.size(); ++k) {
          if (k == i || data[k].ord != r || data[k].lpos() != t.mono.pos || data[k].deg() > t.mono.alpha) continue;
          if (!best || compare(order, t.mono, best->first.mono) > 0) best = {t, k};
          break;
        }
      }
      if (!best) break;
      const auto& [t, k] = *best;
      G[i] = G[i] - G[k].mul_term(t.coeff, t.mono.alpha - data[k].deg());
    }
  }
}

}  // namespace

GroebnerBasis::GroebnerBasis(const Ring& ring, std::uint32_t q, MonomialOrder order, std::vector<PolyVec> elements)
    : ring_(ring), q_(q), order_(order), elements_(std::move(elements)) {
  leading_.reserve(elements_.size());
  for (const auto& g : elements_) {
    if (g.ring() != ring_) throw MixedRings();
    if (g.q() != q_) throw DimensionMismatch("basis element has the wrong length");
    if (g.is_zero()) throw ValidationFailed("basis contains the zero vector");
    leading_.push_back(leading_data(g, order_));
  }
  if (elements_.size() > static_cast<std::size_t>(q_) * ring_.r()) {
    throw ValidationFailed("basis has more than q*r elements");
  }
  for (std::size_t i = 0; i < leading_.size(); ++i) {
    const auto& li = leading_[i];
    if (li.lc != ring_.pow_p(ring_.r() - li.ord)) {
      throw ValidationFailed("leading coefficient of element " + std::to_string(i + 1) + " is not normalized");
    }
    if (i > 0 && compare(order_, leading_[i - 1].lm, li.lm) <= 0) {
      throw ValidationFailed("elements are not sorted by strictly decreasing leading monomial");
    }
    for (std::size_t j = 0; j < leading_.size(); ++j) {
      if (i == j) continue;
      if (divides(leading_[j], li)) {
        throw ValidationFailed("element " + std::to_string(i + 1) + " is not minimal");
      }
      // For j before i in the same position, degree and order both drop.
      if (j < i && leading_[j].lpos() == li.lpos() && !(leading_[j].deg() > li.deg() && leading_[j].ord > li.ord)) {
        throw ValidationFailed("same-position monotonicity violated");
      }
    }
  }
}

std::optional<PolyVec> reduce_step(const PolyVec& f, std::span<const PolyVec> F, MonomialOrder order) {
  if (f.is_zero()) throw ZeroVector();
  const Ring& ring = f.ring();
  const LeadingData target = leading_data(f, order);
  std::optional<std::size_t> best;
  LeadingData best_data;
  for (std::size_t k = 0; k < F.size(); ++k) {
    if (F[k].is_zero()) continue;
    const LeadingData d = leading_data(F[k], order);
    if (!divides(d, target)) continue;
    if (!best || compare(order, d.lm, best_data.lm) > 0) {
      best = k;
      best_data = d;
    }
  }
  if (!best) return std::nullopt;

  // c = u p^v, lc_k = w p^(v_k) with v_k <= v, so (u / w) p^(v - v_k) * lc_k = c.
  const std::uint32_t v = ring.valuation(target.lc);
  const std::uint32_t vk = ring.valuation(best_data.lc);
  const Residue factor =
      ring.mul(ring.mul(ring.unit_part(target.lc), ring.inverse(ring.unit_part(best_data.lc))), ring.pow_p(v - vk));
  PolyVec h = f - F[*best].mul_term(factor, target.deg() - best_data.deg());
  if (!h.is_zero() && compare(order, lm(h, order), target.lm) >= 0) {
    throw std::logic_error("reduction did not decrease the leading monomial of " + format_vector(f));
  }
  return h;
}

PolyVec normal_form(const PolyVec& f, std::span<const PolyVec> F, MonomialOrder order) {
  PolyVec cur = f;
  while (!cur.is_zero()) {
    auto next = reduce_step(cur, F, order);
    if (!next) break;
    cur = std::move(*next);
  }
  return cur;
}

PolyVec normalize_leading(const PolyVec& f, MonomialOrder order) {
  if (f.is_zero()) return f;
  const Ring& ring = f.ring();
  return f.scaled(ring.inverse(ring.unit_part(lc(f, order))));
}

PolyVec s_vector(const PolyVec& f, const PolyVec& g, MonomialOrder order) {
  const Ring& ring = f.ring();
  const LeadingData a = leading_data(f, order);
  const LeadingData b = leading_data(g, order);
  if (a.lpos() != b.lpos()) throw DimensionMismatch("S-vector needs a shared leading position");
  const std::uint32_t va = ring.valuation(a.lc);
  const std::uint32_t vb = ring.valuation(b.lc);
  const std::uint32_t vmax = std::max(va, vb);
  const std::uint32_t top = std::max(a.deg(), b.deg());
  const Residue fa = ring.mul(ring.inverse(ring.unit_part(a.lc)), ring.pow_p(vmax - va));
  const Residue fb = ring.mul(ring.inverse(ring.unit_part(b.lc)), ring.pow_p(vmax - vb));
  return f.mul_term(fa, top - a.deg()) - g.mul_term(fb, top - b.deg());
}

PolyVec annihilator_vector(const PolyVec& f, MonomialOrder order) {
  return f.scaled(f.ring().pow_p(ord_vec(f, order)));
}

namespace {

struct Pair {
  // j == i marks an annihilator pair.
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t seq;
};

class Completion {
 public:
  Completion(MonomialOrder order, const GroebnerOptions& options) : order_(order), options_(options) {}

  void insert(const PolyVec& f) {
    tick();
    PolyVec h = normal_form(f, basis_, order_);
    if (h.is_zero()) return;
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    const LeadingData dk = leading_data(basis_[k], order_);
    for (std::size_t j = 0; j < k; ++j) {
      const LeadingData dj = leading_data(basis_[j], order_);
      if (dj.lpos() != dk.lpos()) continue;
      pairs_.push({j, k, {std::max(dj.deg(), dk.deg()), dk.lpos()}, seq_++});
    }
    if (dk.ord < basis_[k].ring().r()) pairs_.push({k, k, dk.lm, seq_++});
  }

  void run() {
    while (!pairs_.empty()) {
      const Pair pair = pairs_.top();
      pairs_.pop();
      const PolyVec& a = basis_[pair.i];
      insert(pair.i == pair.j ? annihilator_vector(a, order_) : s_vector(a, basis_[pair.j], order_));
    }
  }

  const std::vector<PolyVec>& basis() const { return basis_; }

 private:
  void tick() {
    if (++steps_ > options_.iteration_cap) {
      throw IterationLimitExceeded("Groebner completion exceeded " + std::to_string(options_.iteration_cap) +
                                   " reductions");
    }
  }

  struct Later {
    MonomialOrder order;
    // Priority queue pops the "largest"; smallest lcm first, then FIFO.
    bool operator()(const Pair& a, const Pair& b) const {
      const auto c = compare(order, a.lcm, b.lcm);
      if (c != 0) return c > 0;
      return a.seq > b.seq;
    }
  };

  MonomialOrder order_;
  GroebnerOptions options_;
  std::vector<PolyVec> basis_;
  std::priority_queue<Pair, std::vector<Pair>, Later> pairs_{Later{order_}};
  std::size_t seq_ = 0;
  std::size_t steps_ = 0;
};

}  // namespace

GroebnerBasis buchberger(std::span<const PolyVec> generators, MonomialOrder order, const GroebnerOptions& options) {
  if (generators.empty()) throw DimensionMismatch("no generators given");
  const Ring& ring = generators.front().ring();
  const std::uint32_t q = generators.front().q();
  Completion completion(order, options);
  for (const auto& g : generators) {
    if (g.ring() != ring) throw MixedRings();
    if (g.q() != q) throw DimensionMismatch("generators have different lengths");
    if (!g.is_zero()) completion.insert(g);
  }
  completion.run();
  if (completion.basis().empty()) return GroebnerBasis(ring, q, order, {});
  return minimalize(completion.basis(), order);
}

std::optional<CriterionFailure> find_criterion_failure(std::span<const PolyVec> G, MonomialOrder order) {
  require_nonzero(G);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (ord_vec(G[i], order) < G[i].ring().r()) {
      PolyVec rem = normal_form(annihilator_vector(G[i], order), G, order);
      if (!rem.is_zero()) return CriterionFailure{i, i, std::move(rem)};
    }
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (lpos(G[i], order) != lpos(G[j], order)) continue;
      PolyVec rem = normal_form(s_vector(G[i], G[j], order), G, order);
      if (!rem.is_zero()) return CriterionFailure{i, j, std::move(rem)};
    }
  }
  return std::nullopt;
}

bool is_groebner(std::span<const PolyVec> G, MonomialOrder order) { return !find_criterion_failure(G, order); }

bool is_groebner_of(std::span<const PolyVec> G, std::span<const PolyVec> module_generators, MonomialOrder order) {
  if (!is_groebner(G, order)) return false;
  for (const auto& f : module_generators) {
    if (!normal_form(f, G, order).is_zero()) return false;
  }
  const GroebnerBasis reference = buchberger(module_generators, order);
  return std::all_of(G.begin(), G.end(),
                     [&](const PolyVec& g) { return normal_form(g, reference.elements(), order).is_zero(); });
}

GroebnerBasis minimalize(std::span<const PolyVec> G, MonomialOrder order) {
  if (G.empty()) throw DimensionMismatch("cannot minimalize an empty list without ring information");
  std::vector<PolyVec> elems;
  std::vector<LeadingData> data;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    elems.push_back(normalize_leading(g, order));
    data.push_back(leading_data(elems.back(), order));
  }
  // Divisibility of leading terms is a preorder; equal leading terms keep the first occurrence.
  std::vector<PolyVec> kept;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (j == i || !divides(data[j], data[i])) continue;
      const bool same = data[j].deg() == data[i].deg() && data[j].ord == data[i].ord;
      redundant = !same || j < i;
    }
    if (!redundant) kept.push_back(elems[i]);
  }
  std::stable_sort(kept.begin(), kept.end(), [order](const PolyVec& a, const PolyVec& b) {
    return compare(order, lm(a, order), lm(b, order)) > 0;
  });
  reduce_unit_tails(kept, order);
  return GroebnerBasis(G.front().ring(), G.front().q(), order, std::move(kept));
}

PlmReport check_plm(std::span<const PolyVec> F, MonomialOrder order, std::size_t trials, std::uint64_t seed,
                    std::uint32_t max_coeff_degree) {
  if (F.empty()) throw DimensionMismatch("PLM check needs at least one vector");
  require_nonzero(F);
  const Ring& ring = F.front().ring();
  if (!ring.is_field()) throw RingNotField();
  std::mt19937_64 rng(seed);
  PlmReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    auto coeffs = detail::random_tuple(rng, ring, F.size(), max_coeff_degree, ring.modulus());
    PolyVec f = linear_combination(coeffs, F);
    if (f.is_zero()) continue;
    ++report.nonzero_combinations;
    const Monomial predicted = detail::predicted_lm(coeffs, F, order);
    const Monomial actual = lm(f, order);
    if (actual != predicted) {
      report.passed = false;
      report.witness = PlmWitness{std::move(coeffs), std::move(f), actual, predicted};
      break;
    }
  }
  return report;
}

}  // namespace zpr
