#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"
#include "zpr/cli.hpp"
#include "zpr/document.hpp"
#include "zpr/errors.hpp"

using namespace zpr;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "zpr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kGenerators = "[1, 8x^5+5x^4+5x^3+2x^2+2x]\n[0, x^6]\n";
const std::string kTopBasis = format_matrix(fixtures::ring_top_basis());

std::size_t count_rows(const std::string& text) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += !line.empty() && line[0] == '[';
  return n;
}

}  // namespace

TEST(Cli, GbTop) {
  const Result r = run({"gb", "--p", "3", "--r", "2", "--order", "top", "-"}, kGenerators);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_rows(r.out), 4u);
  EXPECT_NE(r.out.find("betas=(1,1,1,1)"), std::string::npos);
}

TEST(Cli, GbPot) {
  const Result r = run({"gb", "--ring", "9", "--order", "pot", "-"}, kGenerators);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_rows(r.out), 2u);
  EXPECT_NE(r.out.find("betas=(2,2)"), std::string::npos);
}

TEST(Cli, PBasis) {
  const Result pot = run({"pbasis", "--ring", "9", "--order", "pot", "-"}, kGenerators);
  EXPECT_EQ(pot.code, 0);
  EXPECT_EQ(count_rows(pot.out), 4u);
  EXPECT_NE(pot.out.find("N=4"), std::string::npos);
  EXPECT_NE(pot.out.find("[3, 6x^5+6x^4+6x^3+6x^2+6x]  # v2 = p*g1"), std::string::npos);
  const Result top = run({"pbasis", "--ring", "9", "-"}, kGenerators);
  EXPECT_EQ(count_rows(top.out), 4u);
  EXPECT_NE(top.out.find("N=4 order=TOP"), std::string::npos);

  // over a field the p-basis is the basis
  const std::string field = "[1, -x^5-4x^4-3x^3-3x^2-2x]\n[0, x^6]\n";
  const Result fg = run({"gb", "--ring", "5", "-"}, field);
  const Result fp = run({"pbasis", "--ring", "5", "-"}, field);
  EXPECT_EQ(count_rows(fg.out), count_rows(fp.out));
}

TEST(Cli, Lrr) {
  Result r = run({"lrr", "--ring", "9", "--seq", "1,4,4,7,7", "--verify"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("monic solutions (3):\n  x^2+5\n  x^2+3x+2\n  x^2+6x+8\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("agrees"), std::string::npos);

  r = run({"lrr", "--ring", "5", "--seq", "1,4,3,3,2"});
  EXPECT_NE(r.out.find("shortest: x^2+2x+4\n"), std::string::npos);
  EXPECT_NE(r.out.find("monic solutions (1):"), std::string::npos);

  r = run({"lrr", "--ring", "9", "--seq", "6,3,1,5,6"});
  EXPECT_NE(r.out.find("shortest: x^3+4x^2+7x+4\n"), std::string::npos);
  EXPECT_NE(r.out.find("  x^3+4x^2+7x+1\n"), std::string::npos);
}

TEST(Cli, Check) {
  EXPECT_EQ(run({"check", "--ring", "9", "-"}, kTopBasis).code, 0);
  const Result field = run({"check", "--ring", "5", "-"}, format_matrix(fixtures::field_basis()));
  EXPECT_EQ(field.code, 0);
  EXPECT_NE(field.out.find("PLM: pass"), std::string::npos);

  std::string corrupted = kTopBasis;
  corrupted.replace(corrupted.find("[3x+6, 3x]"), 10, "[3x+6, 3x+1]");
  const Result bad = run({"check", "--ring", "9", "-"}, corrupted);
  EXPECT_EQ(bad.code, 5);
  EXPECT_NE(bad.out.find("remainder:"), std::string::npos);
  const Result bad_json = run({"check", "--ring", "9", "--format", "json", "-"}, corrupted);
  EXPECT_EQ(bad_json.code, 5);
  EXPECT_FALSE(Document::parse(bad_json.out)["passed"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"gb", "--ring", "9", "-"}, "").code, 2);
  EXPECT_EQ(run({"gb", "--ring", "9", "-"}, "[1, 2x*]\n").code, 2);
  EXPECT_EQ(run({"gb", "--ring", "6", "-"}, kGenerators).code, 2);
  EXPECT_EQ(run({"gb", "--ring", "9", "--order", "lex", "-"}, kGenerators).code, 2);
  EXPECT_EQ(run({"gb", "-"}, kGenerators).code, 2);
  EXPECT_EQ(run({"gb", "--ring", "9", "/nonexistent/matrix.txt"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"lrr", "--ring", "9", "--seq", "1,x"}).code, 2);
  EXPECT_EQ(run({"gb", "--ring", "9", "--iteration-cap", "2", "-"}, kGenerators).code, 3);
  const Result capped = run({"lrr", "--ring", "9", "--seq", "6,3,1,5,6", "--enum-cap", "5"});
  EXPECT_EQ(capped.code, 4);
  EXPECT_NE(capped.out.find("parametrization: "), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EnvironmentCaps) {
  ::setenv("ZPR_ENUMERATION_CAP", "5", 1);
  EXPECT_EQ(run({"lrr", "--ring", "9", "--seq", "6,3,1,5,6"}).code, 4);
  EXPECT_EQ(run({"lrr", "--ring", "9", "--seq", "6,3,1,5,6", "--enum-cap", "100"}).code, 0);
  ::unsetenv("ZPR_ENUMERATION_CAP");
  ::setenv("ZPR_ITERATION_CAP", "2", 1);
  EXPECT_EQ(run({"gb", "--ring", "9", "-"}, kGenerators).code, 3);
  ::unsetenv("ZPR_ITERATION_CAP");
}

TEST(Cli, JsonIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gb", "--ring", "9", "--format", "json", "-"},
           {"pbasis", "--ring", "9", "--order", "pot", "--format", "json", "-"},
           {"check", "--ring", "9", "--format", "json", "--seed", "17", "-"},
       }) {
    const Result a = run(args, kGenerators);
    const Result b = run(args, kGenerators);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(Document::parse(a.out).is_object());
  }
}

TEST(Documents, RoundTrip) {
  const GroebnerBasis G = buchberger(fixtures::ring_generators(), MonomialOrder::TOP);
  const std::string gb_text = dump(gb_document(G));
  const GroebnerBasis G2 = parse_gb_document(gb_text);
  EXPECT_EQ(G2.elements(), G.elements());
  EXPECT_EQ(dump(gb_document(G2)), gb_text);

  const PBasis B = build_p_basis(buchberger(fixtures::ring_generators(), MonomialOrder::POT));
  const std::string pb_text = dump(pbasis_document(B));
  const PBasis B2 = parse_pbasis_document(pb_text);
  EXPECT_EQ(B2.vectors(), B.vectors());
  EXPECT_EQ(dump(pbasis_document(B2)), pb_text);
}

TEST(Documents, Rejected) {
  const GroebnerBasis G = buchberger(fixtures::ring_generators(), MonomialOrder::TOP);
  Document doc = gb_document(G);
  EXPECT_THROW(parse_gb_document("{not json"), ParseError);
  EXPECT_THROW(parse_pbasis_document(dump(doc)), ParseError);

  Document wrong_lead = doc;
  wrong_lead["elements"][0]["leading"]["deg"] = 4;
  EXPECT_THROW(parse_gb_document(dump(wrong_lead)), ParseError);

  Document unsorted = doc;
  std::swap(unsorted["elements"][0], unsorted["elements"][1]);
  EXPECT_THROW(parse_gb_document(dump(unsorted)), ValidationFailed);

  Document no_ring = doc;
  no_ring.erase("ring");
  EXPECT_THROW(parse_gb_document(dump(no_ring)), ParseError);
}
