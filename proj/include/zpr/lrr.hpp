#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zpr/pbasis.hpp"

namespace zpr {

/// Finite sequence S_0, ..., S_{n-1} over Z_{p^r}.
struct SequenceInput {
  SequenceInput(const Ring& ring, std::span<const std::int64_t> values);
  SequenceInput(const Ring& ring, std::vector<Residue> values);

  Ring ring;
  std::vector<Residue> values;

  std::size_t size() const { return values.size(); }
};

/// True iff lc(f) is a unit and sum_k f_k S_{j+k} = 0 for j = 0..n-L-1 (L = deg f).
/// Vacuously true for L >= n. The zero polynomial is never a recurrence.
bool is_lrr(const Poly& f, const SequenceInput& S);

/// ([1, -S(x)], [0, x^(n+1)]) with S(x) = S_0 x^n + S_1 x^(n-1) + ... + S_{n-1} x.
std::array<PolyVec, 2> build_module(const SequenceInput& S);

/// One free slot of the parametrization: q(x) * d with q in A_p[x], deg q <= budget.
struct ParamGenerator {
  std::size_t index = 0;  // position in the p-basis (0-based)
  Poly d;
  std::uint32_t budget = 0;
};

struct LrrSolution {
  Ring ring;
  std::size_t n = 0;
  Poly shortest;        // monic d_l
  std::uint32_t length = 0;
  Poly companion;       // h_l, with v_l = [d_l, -h_l] after the same normalization
  std::size_t pivot_index = 0;
  std::vector<ParamGenerator> params;
  std::vector<PolyVec> p_basis;  // the TOP minimal Groebner p-basis of the module

  /// Admissible nonzero digits for the pivot coefficient: 1..p-1.
  std::vector<Residue> pivot_digits() const;
  /// Number of digit slots over all generators with nonzero d.
  std::size_t free_slots() const;
};

/// Shortest recurrence from the TOP minimal Groebner p-basis, plus the data that
/// parametrizes every shortest recurrence. Throws PivotNotUnique unless exactly
/// one p-basis vector has leading position 1 and order r.
LrrSolution shortest_lrr(const SequenceInput& S, const GroebnerOptions& options = {});

/// Template such as "t0*(x^2+3x+2) + (t1*x+t2)*(3x+6)" with t0 in 1..p-1 and other t in A_p.
std::string parametrization_template(const LrrSolution& sol);

/// Materializes the parametrization, deduplicated and sorted. With monic_only only
/// polynomials with leading coefficient 1 are kept. Throws EnumerationTooLarge when
/// the number of digit choices exceeds cap.
std::vector<Poly> enumerate_shortest(const LrrSolution& sol, bool monic_only, std::size_t cap = 1'000'000);

struct BruteForceResult {
  std::uint32_t length = 0;
  std::vector<Poly> monic;  // sorted
};

/// Exhaustive oracle: tries every polynomial with unit leading coefficient, degree by
/// degree up to max_deg, and returns the first degree with a solution together with
/// all monic solutions of that degree. When nothing qualifies up to max_deg the
/// result has length max_deg + 1 and an empty set. Throws EnumerationTooLarge when
/// the candidates tried before reaching a solution would exceed cap.
BruteForceResult brute_force_shortest(const SequenceInput& S, std::uint32_t max_deg, std::size_t cap = 1'000'000);
/// max_deg = n, where x^n always qualifies.
BruteForceResult brute_force_shortest(const SequenceInput& S);

}  // namespace zpr
