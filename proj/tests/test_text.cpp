#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "zpr/errors.hpp"

using namespace zpr;
using fixtures::Z9;

TEST(Text, ParsePoly) {
  EXPECT_EQ(parse_poly(Z9, "x^2+3x+2").coeffs(), (std::vector<Residue>{2, 3, 1}));
  EXPECT_EQ(parse_poly(Z9, "-x").coeffs(), (std::vector<Residue>{0, 8}));
  EXPECT_EQ(parse_poly(Z9, "−3").coeffs(), (std::vector<Residue>{6}));
  EXPECT_EQ(parse_poly(Z9, " 2 x ^ 3 - x^3 ").coeffs(), (std::vector<Residue>{0, 0, 0, 1}));
  EXPECT_EQ(parse_poly(Z9, "x^0+x^1").coeffs(), (std::vector<Residue>{1, 1}));
  EXPECT_TRUE(parse_poly(Z9, "9x").is_zero());
  EXPECT_TRUE(parse_poly(Z9, "0").is_zero());
  EXPECT_EQ(parse_poly(Z9, "123456789012345678901234567890").coeffs(),
            parse_poly(Z9, "0").coeffs());  // digit sum is a multiple of 9
}

TEST(Text, ParseErrors) {
  for (const char* bad : {"", "x^", "2*x", "x^-1", "y", "x^2+", "++x", "3x^1048577", "x^2 x", "1.5"}) {
    EXPECT_THROW(parse_poly(Z9, bad), ParseError) << bad;
  }
  for (const char* bad : {"1, 2", "[1, 2", "[]", "[1,,2]", "[1, x^]"}) {
    EXPECT_THROW(parse_vector(Z9, bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_matrix(Z9, ""), ParseError);
  EXPECT_THROW(parse_matrix(Z9, "# only a comment\n\n"), ParseError);
  EXPECT_THROW(parse_matrix(Z9, "[1, 2]\n[1]\n"), ParseError);
}

TEST(Text, Format) {
  EXPECT_EQ(format_poly(parse_poly(Z9, "x^5+4x^4+7x")), "x^5+4x^4+7x");
  EXPECT_EQ(format_poly(parse_poly(Z9, "-3x+1")), "6x+1");
  EXPECT_EQ(format_poly(Poly(Z9)), "0");
  EXPECT_EQ(format_vector(parse_vector(Z9, "[1, -x]")), "[1, 8x]");
  EXPECT_EQ(format_monomial({2, 1}), "x^2*e1");
  EXPECT_EQ(format_monomial({1, 2}), "x*e2");
  EXPECT_EQ(format_monomial({0, 1}), "1*e1");
  EXPECT_EQ(format_matrix(fixtures::ring_generators()), "[1, 8x^5+5x^4+5x^3+2x^2+2x]\n[0, x^6]\n");
}

TEST(Text, MatrixCommentsAndBlankLines) {
  const auto rows = parse_matrix(Z9, "# header\n\n[1, 2]  # trailing\n  \n[x, 0]\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], parse_vector(Z9, "[x, 0]"));
}

TEST(TextProperties, RoundTrip) {
  std::mt19937_64 rng(3);
  for (const Ring ring : {Ring(2, 1), Ring(2, 4), Ring(3, 2), Ring(7, 2), Ring(251, 1)}) {
    std::uniform_int_distribution<Residue> coeff(0, ring.modulus() - 1);
    std::uniform_int_distribution<int> degree(-1, 6);
    for (int t = 0; t < 300; ++t) {
      std::vector<Poly> comps;
      for (int i = 0; i < 3; ++i) {
        std::vector<Residue> c(static_cast<std::size_t>(degree(rng) + 1));
        for (auto& v : c) v = coeff(rng);
        comps.emplace_back(ring, std::move(c));
      }
      const PolyVec f(ring, comps);
      const std::string text = format_vector(f);
      EXPECT_EQ(parse_vector(ring, text), f) << text;
      EXPECT_EQ(format_vector(parse_vector(ring, text)), text);
    }
  }
}
