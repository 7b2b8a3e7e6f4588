#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "zpr/errors.hpp"

using namespace zpr;
using fixtures::Z5;
using fixtures::Z9;

namespace {

constexpr auto TOP = MonomialOrder::TOP;
constexpr auto POT = MonomialOrder::POT;

}  // namespace

TEST(ReduceStep, FieldGeneratorReduces) {
  const auto G = fixtures::field_basis();
  const PolyVec f = parse_vector(Z5, "[0, x^6]");
  const auto h = reduce_step(f, G, TOP);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(h->is_zero() || compare(TOP, lm(*h, TOP), lm(f, TOP)) < 0);
}

TEST(ReduceStep, NotReducible) {
  const auto G = fixtures::ring_top_basis();
  EXPECT_FALSE(reduce_step(parse_vector(Z9, "[1, 0]"), G, TOP).has_value());
  EXPECT_FALSE(reduce_step(parse_vector(Z9, "[0, x^3]"), G, TOP).has_value());
  // same monomial, but the reducer's order is too small for a unit coefficient
  EXPECT_FALSE(reduce_step(parse_vector(Z9, "[x, 0]"), std::vector{G[3]}, TOP).has_value());
}

TEST(ReduceStep, ChainRingStep) {
  const auto G = fixtures::ring_top_basis();
  const PolyVec f = G[0].scaled(3);
  const auto h = reduce_step(f, std::vector{G[1]}, TOP);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, parse_vector(Z9, "[8x^2+4x+6, 3x^4+2x^2+3x]"));
}

TEST(NormalForm, Membership) {
  const auto G = fixtures::ring_top_basis();
  for (const auto& s : fixtures::ring_generators()) EXPECT_TRUE(normal_form(s, G, TOP).is_zero());
  EXPECT_TRUE(normal_form(PolyVec(Z9, 2), G, TOP).is_zero());
  EXPECT_FALSE(normal_form(parse_vector(Z9, "[1, 0]"), G, TOP).is_zero());
}

TEST(Buchberger, FieldExample) {
  const GroebnerBasis G = buchberger(fixtures::field_generators(), TOP);
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(G[0], parse_vector(Z5, "[2x+2, x^4-2x^3+x]"));
  EXPECT_EQ(G[1], parse_vector(Z5, "[x^2-3x-1, 4x^2-3x]"));
  EXPECT_EQ(G.leading()[0].lm, (Monomial{4, 2}));
  EXPECT_EQ(G.leading()[1].lm, (Monomial{2, 1}));
  EXPECT_TRUE(fixtures::same_module(G.elements(), fixtures::field_basis(), TOP));
}

TEST(Buchberger, RingExampleTop) {
  const GroebnerBasis G = buchberger(fixtures::ring_generators(), TOP);
  ASSERT_EQ(G.size(), 4u);
  const std::vector<std::array<std::uint32_t, 3>> expected{{2, 5, 2}, {2, 4, 1}, {1, 2, 2}, {1, 1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& d = G.leading()[i];
    EXPECT_EQ((std::array{d.lpos(), d.deg(), d.ord}), expected[i]) << "g" << i + 1;
  }
  EXPECT_TRUE(fixtures::same_module(G.elements(), fixtures::ring_top_basis(), TOP));
  EXPECT_TRUE(is_groebner(fixtures::ring_top_basis(), TOP));
}

TEST(Buchberger, RingExamplePot) {
  const GroebnerBasis G = buchberger(fixtures::ring_generators(), POT);
  EXPECT_EQ(G.elements(), fixtures::ring_generators());
}

TEST(Buchberger, SecondRingExample) {
  const GroebnerBasis G = buchberger(parse_matrix(Z9, "[1, 3x^5+6x^4+8x^3+4x^2+3x]\n[0, x^6]\n"), TOP);
  EXPECT_EQ(G.elements(), fixtures::second_ring_basis());
}

TEST(Buchberger, DegenerateInputs) {
  // zero generators span the zero module
  const GroebnerBasis empty = buchberger(std::vector{PolyVec(Z9, 2)}, TOP);
  EXPECT_TRUE(empty.empty());
  // a p-torsion generator
  const GroebnerBasis torsion = buchberger(std::vector{parse_vector(Z9, "[3x, 6]")}, TOP);
  ASSERT_EQ(torsion.size(), 1u);
  EXPECT_EQ(torsion[0], parse_vector(Z9, "[3x, 6]"));
  // unit constants generate everything
  const GroebnerBasis full = buchberger(parse_matrix(Z9, "[x+1, 1]\n[x, 1]\n"), POT);
  EXPECT_EQ(full.elements(), parse_matrix(Z9, "[1, 0]\n[0, 1]\n"));
}

TEST(Buchberger, IterationCap) {
  EXPECT_THROW(buchberger(fixtures::ring_generators(), TOP, GroebnerOptions{2}), IterationLimitExceeded);
}

TEST(IsGroebner, Examples) {
  EXPECT_TRUE(is_groebner(fixtures::ring_top_basis(), TOP));
  EXPECT_TRUE(is_groebner(fixtures::field_basis(), TOP));
  EXPECT_TRUE(is_groebner(std::vector{parse_vector(Z9, "[x^2+1]")}, TOP));
  EXPECT_FALSE(is_groebner(fixtures::ring_generators(), TOP));

  // On its own [1, -S] is trivially a basis of the module it spans; against the
  // module with the x^6 row it is not.
  const std::vector<PolyVec> s1{fixtures::ring_generators()[0]};
  EXPECT_FALSE(is_groebner_of(s1, fixtures::ring_generators(), TOP));
  EXPECT_TRUE(is_groebner_of(fixtures::ring_top_basis(), fixtures::ring_generators(), TOP));
}

TEST(IsGroebner, WitnessOnCorruptedRow) {
  auto G = fixtures::ring_top_basis();
  G[3] = parse_vector(Z9, "[3x+6, 3x+1]");
  const auto failure = find_criterion_failure(G, TOP);
  ASSERT_TRUE(failure.has_value());
  EXPECT_FALSE(failure->remainder.is_zero());
}

TEST(Minimalize, Examples) {
  const auto G = fixtures::ring_top_basis();
  EXPECT_EQ(minimalize(G, TOP).size(), 4u);

  auto extended = G;
  extended.push_back(G[2].mul_term(1, 1));
  extended.push_back(G[1].scaled(3));
  EXPECT_EQ(minimalize(extended, TOP).size(), 4u);

  // unit multiples are normalized
  const auto m = minimalize(std::vector{parse_vector(Z9, "[2x+1, 4]")}, TOP);
  EXPECT_EQ(m[0], parse_vector(Z9, "[x+5, 2]"));
  const auto p = minimalize(std::vector{parse_vector(Z9, "[6x+1, 3]")}, TOP);
  EXPECT_EQ(p[0], parse_vector(Z9, "[3x+5, 6]"));
}

TEST(GroebnerBasisInvariants, Rejected) {
  const auto G = fixtures::ring_top_basis();
  // wrong order of elements
  EXPECT_THROW(GroebnerBasis(Z9, 2, TOP, {G[1], G[0]}), ValidationFailed);
  // leading coefficient not normalized
  EXPECT_THROW(GroebnerBasis(Z9, 2, TOP, {G[0].scaled(2)}), ValidationFailed);
  // redundant element
  EXPECT_THROW(GroebnerBasis(Z9, 2, TOP, {G[0].mul_term(1, 1), G[0]}), ValidationFailed);
  EXPECT_NO_THROW(GroebnerBasis(Z9, 2, TOP, G));
}

TEST(Plm, FieldBasisPasses) {
  const GroebnerBasis G = buchberger(fixtures::field_generators(), TOP);
  const PlmReport report = check_plm(G.elements(), TOP, 500, 1);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.trials, 500u);
  EXPECT_GT(report.nonzero_combinations, 400u);
  EXPECT_TRUE(check_plm(std::vector{parse_vector(Z5, "[x+1, 3]")}, POT, 200, 4).passed);
}

TEST(Plm, DependentPairFails) {
  const PolyVec g = parse_vector(Z5, "[x+1, 2x^2]");
  const PlmReport report = check_plm(std::vector{g, g.mul_term(1, 1)}, TOP, 2000, 1);
  ASSERT_FALSE(report.passed);
  ASSERT_TRUE(report.witness.has_value());
  const auto& w = *report.witness;
  EXPECT_EQ(linear_combination(w.coefficients, std::vector{g, g.mul_term(1, 1)}), w.combination);
  ASSERT_TRUE(w.actual.has_value());
  EXPECT_NE(*w.actual, w.predicted);
}

TEST(Plm, RingRejected) { EXPECT_THROW(check_plm(fixtures::ring_top_basis(), TOP, 10, 1), RingNotField); }

TEST(SVector, CancelsLeadingTerms) {
  const auto G = fixtures::ring_top_basis();
  const PolyVec s = s_vector(G[0], G[1], TOP);
  EXPECT_EQ(s.coeff({5, 2}), 0u);
  EXPECT_TRUE(normal_form(s, G, TOP).is_zero());
  const PolyVec a = annihilator_vector(G[1], TOP);
  EXPECT_EQ(a, G[1].scaled(3));
  EXPECT_TRUE(annihilator_vector(G[0], TOP).is_zero() || normal_form(annihilator_vector(G[0], TOP), G, TOP).is_zero());
}

// Random modules: the computed basis is a Groebner basis of the input span.
TEST(GroebnerProperties, RandomModules) {
  std::mt19937_64 rng(5);
  for (const Ring ring : {Ring(2, 2), Ring(3, 2), Ring(2, 3), Ring(5, 1)}) {
    std::uniform_int_distribution<Residue> coeff(0, ring.modulus() - 1);
    for (auto order : {TOP, POT}) {
      for (int t = 0; t < 15; ++t) {
        std::vector<PolyVec> gens;
        for (int k = 0; k < 3; ++k) {
          std::vector<Poly> comps;
          for (int i = 0; i < 2; ++i) {
            std::vector<Residue> c(3);
            for (auto& v : c) v = coeff(rng);
            comps.emplace_back(ring, std::move(c));
          }
          gens.emplace_back(ring, comps);
        }
        const GroebnerBasis G = buchberger(gens, order);
        EXPECT_TRUE(is_groebner(G.elements(), order));
        for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G.elements(), order).is_zero());
        EXPECT_LE(G.size(), 2u * ring.r());
      }
    }
  }
}
