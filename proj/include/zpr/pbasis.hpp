#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zpr/groebner.hpp"

namespace zpr {

/// beta_j = ord(g_j) - ord(g_i) for the first later g_i sharing g_j's leading
/// position, or ord(g_j) when there is none.
using OrderDiffs = std::vector<std::uint32_t>;

OrderDiffs order_differences(const GroebnerBasis& G);

/// Where a p-basis vector came from: p^exponent * g_source (source is 0-based).
struct Provenance {
  std::size_t source = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// The sequence (g_1, p g_1, ..., p^(beta_1 - 1) g_1, g_2, ..., p^(beta_m - 1) g_m)
/// built from a sorted minimal Groebner basis.
class PBasis {
 public:
  PBasis(const GroebnerBasis& basis, OrderDiffs betas, std::vector<PolyVec> vectors,
         std::vector<Provenance> provenance);

  const Ring& ring() const { return ring_; }
  std::uint32_t q() const { return q_; }
  MonomialOrder order() const { return order_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<PolyVec>& vectors() const { return vectors_; }
  const PolyVec& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  const OrderDiffs& betas() const { return betas_; }
  const std::vector<PolyVec>& source_basis() const { return source_; }

  /// Index of the unique vector with the given leading position and order, if any.
  std::optional<std::size_t> find(std::uint32_t position, std::uint32_t order) const;

 private:
  Ring ring_;
  std::uint32_t q_;
  MonomialOrder order_;
  OrderDiffs betas_;
  std::vector<PolyVec> vectors_;
  std::vector<Provenance> provenance_;
  std::vector<PolyVec> source_;
};

/// Builds the p-generator sequence and verifies it constructively: p v_N = 0,
/// every p v_i is re-derived as an explicit digit combination of v_(i+1..N),
/// and vectors sharing a leading position have distinct orders. Throws
/// ValidationFailed when any check fails.
PBasis build_p_basis(const GroebnerBasis& G);

std::size_t p_dim(const PBasis& B);

/// Unique digit-polynomial coefficients a_i in A_p[x] with f = sum a_i v_i.
///
/// Peels leading terms greedily: the p-adic digits of lc(f) select the basis
/// vectors of matching order at lpos(f), which are forced by the p-PLM
/// property. Coefficients of f are taken mod p^r as given. Throws NotInModule
/// when a leading term cannot be matched.
std::vector<Poly> p_represent(const PolyVec& f, const PBasis& B);
/// Same, restricted to the trailing vectors v_first, ..., v_N. The result has
/// one entry per trailing vector.
std::vector<Poly> p_represent_tail(const PolyVec& f, const PBasis& B, std::size_t first);

struct PPlmReport {
  bool passed = true;
  std::size_t trials = 0;
  std::optional<PlmWitness> witness;
};

/// Randomized check of the p-PLM property with a_i in A_p[x] of degree at most
/// max_coeff_degree. A nontrivial tuple whose combination vanishes also fails.
PPlmReport check_p_plm(const PBasis& B, std::size_t trials, std::uint64_t seed, std::uint32_t max_coeff_degree = 3);
/// The same check on an arbitrary vector sequence.
PPlmReport check_p_plm(std::span<const PolyVec> vectors, MonomialOrder order, std::size_t trials, std::uint64_t seed,
                       std::uint32_t max_coeff_degree = 3);

}  // namespace zpr
