#include "zpr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zpr/document.hpp"
#include "zpr/errors.hpp"
#include "zpr/lrr.hpp"
#include "zpr/pbasis.hpp"
#include "zpr/text.hpp"

namespace zpr::cli {

namespace {

struct Config {
  std::optional<std::uint64_t> ring_size;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> r;
  std::string order = "top";
  std::string format = "human";
  std::uint64_t seed = 1;
  std::size_t trials = 500;
  std::optional<std::size_t> iteration_cap;
  std::optional<std::size_t> enumeration_cap;
  std::string matrix;
  std::string sequence;
  bool all_units = false;
  bool verify = false;
};

std::size_t cap_from_env(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(raw));
  } catch (const std::exception&) {
    throw ParseError(std::string(name) + " must be a nonnegative integer");
  }
}

Ring resolve_ring(const Config& cfg) {
  if (cfg.ring_size) {
    if (cfg.p || cfg.r) throw ParseError("give either --ring or --p/--r, not both");
    return Ring::from_modulus(*cfg.ring_size);
  }
  if (!cfg.p || !cfg.r) throw ParseError("a ring is required: --ring p^r or --p P --r R");
  return Ring(*cfg.p, *cfg.r);
}

std::string read_matrix_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string join_betas(const OrderDiffs& betas) {
  std::string out = "(";
  for (std::size_t i = 0; i < betas.size(); ++i) out += (i ? "," : "") + std::to_string(betas[i]);
  return out + ")";
}

std::string power_label(std::uint32_t exponent) {
  return exponent == 0 ? "" : exponent == 1 ? "p*" : "p^" + std::to_string(exponent) + "*";
}

std::vector<std::int64_t> parse_sequence(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad sequence entry '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("bad sequence entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("sequence must be nonempty");
  return out;
}

void print_witness(std::ostream& out, const PlmWitness& w) {
  out << "  coefficients:";
  for (const auto& a : w.coefficients) out << " " << format_poly(a);
  out << "\n  combination: " << format_vector(w.combination) << "\n";
  out << "  lm: " << (w.actual ? format_monomial(*w.actual) : std::string("(zero vector)"))
      << "  predicted: " << format_monomial(w.predicted) << "\n";
}

Document witness_document(const PlmWitness& w) {
  Document doc;
  std::vector<std::string> coeffs;
  for (const auto& a : w.coefficients) coeffs.push_back(format_poly(a));
  doc["coefficients"] = coeffs;
  doc["combination"] = format_vector(w.combination);
  doc["lm"] = w.actual ? Document(format_monomial(*w.actual)) : Document(nullptr);
  doc["predicted"] = format_monomial(w.predicted);
  return doc;
}

class Runner {
 public:
  Runner(const Config& cfg, std::istream& in, std::ostream& out)
      : cfg_(cfg),
        in_(in),
        out_(out),
        ring_(resolve_ring(cfg)),
        order_(parse_order(cfg.order)),
        json_(cfg.format == "json") {
    options_.iteration_cap = cfg.iteration_cap.value_or(cap_from_env("ZPR_ITERATION_CAP", options_.iteration_cap));
    enumeration_cap_ = cfg.enumeration_cap.value_or(cap_from_env("ZPR_ENUMERATION_CAP", 1'000'000));
  }

  int gb() {
    const GroebnerBasis G = buchberger(rows(), order_, options_);
    if (json_) {
      out_ << dump(gb_document(G));
      return kOk;
    }
    out_ << "# ring=" << ring_.name() << " order=" << to_string(order_) << " q=" << G.q() << " m=" << G.size()
         << " betas=" << join_betas(G.empty() ? OrderDiffs{} : order_differences(G)) << "\n";
    out_ << format_matrix(G.elements());
    out_ << "# element lm lc lpos deg ord\n";
    for (std::size_t i = 0; i < G.size(); ++i) {
      const auto& d = G.leading()[i];
      out_ << "# g" << i + 1 << " " << format_monomial(d.lm) << " " << d.lc << " " << d.lpos() << " " << d.deg()
           << " " << d.ord << "\n";
    }
    return kOk;
  }

  int pbasis() {
    const PBasis B = build_p_basis(buchberger(rows(), order_, options_));
    if (json_) {
      out_ << dump(pbasis_document(B));
      return kOk;
    }
    out_ << "# betas=" << join_betas(B.betas()) << " N=" << p_dim(B) << " order=" << to_string(order_) << "\n";
    out_ << "# ring=" << ring_.name() << "\n";
    for (std::size_t i = 0; i < B.size(); ++i) {
      const auto& prov = B.provenance()[i];
      out_ << format_vector(B[i]) << "  # v" << i + 1 << " = " << power_label(prov.exponent) << "g"
           << prov.source + 1 << "\n";
    }
    return kOk;
  }

  int check() {
    const std::vector<PolyVec> input = rows();
    for (const auto& f : input) {
      if (f.is_zero()) throw ParseError("check input contains the zero vector");
    }
    Document doc;
    doc["kind"] = "check";
    doc["ring"] = ring_document(ring_);
    doc["order"] = to_string(order_);
    bool passed = true;
    std::ostringstream human;

    if (auto failure = find_criterion_failure(input, order_)) {
      passed = false;
      const bool ann = failure->i == failure->j;
      const std::string pair = ann ? "annihilator(" + std::to_string(failure->i + 1) + ")"
                                   : "S(" + std::to_string(failure->i + 1) + "," + std::to_string(failure->j + 1) + ")";
      human << "groebner: fail\n  pair: " << pair << "\n  remainder: " << format_vector(failure->remainder) << "\n";
      doc["groebner"] = {{"passed", false}, {"pair", pair}, {"remainder", format_vector(failure->remainder)}};
    } else {
      human << "groebner: pass\n";
      doc["groebner"] = {{"passed", true}};
      const GroebnerBasis G = minimalize(input, order_);
      const bool minimal = G.size() == input.size();
      human << "minimal: " << (minimal ? "yes" : "no (checked its minimalization)") << "\n";
      doc["minimal"] = minimal;
      const PBasis B = build_p_basis(G);
      human << "p-basis: N=" << p_dim(B) << " betas=" << join_betas(B.betas()) << "\n";
      doc["N"] = p_dim(B);
      doc["betas"] = B.betas();

      const PPlmReport pplm = check_p_plm(B, cfg_.trials, cfg_.seed);
      human << "p-PLM: " << (pplm.passed ? "pass" : "fail") << " (" << pplm.trials << " trials)\n";
      Document pdoc = {{"passed", pplm.passed}, {"trials", pplm.trials}};
      if (pplm.witness) {
        print_witness(human, *pplm.witness);
        pdoc["witness"] = witness_document(*pplm.witness);
      }
      doc["p_plm"] = std::move(pdoc);
      passed = passed && pplm.passed;

      if (ring_.is_field()) {
        const PlmReport plm = check_plm(G.elements(), order_, cfg_.trials, cfg_.seed);
        human << "PLM: " << (plm.passed ? "pass" : "fail") << " (" << plm.trials << " trials)\n";
        Document fdoc = {{"passed", plm.passed}, {"trials", plm.trials}};
        if (plm.witness) {
          print_witness(human, *plm.witness);
          fdoc["witness"] = witness_document(*plm.witness);
        }
        doc["plm"] = std::move(fdoc);
        passed = passed && plm.passed;
      }
    }
    doc["passed"] = passed;
    if (json_) {
      out_ << dump(doc);
    } else {
      out_ << human.str() << "result: " << (passed ? "pass" : "fail") << "\n";
    }
    return passed ? kOk : kPropertyFailed;
  }

  int lrr() {
    const auto raw = parse_sequence(cfg_.sequence);
    const SequenceInput seq(ring_, raw);
    LrrReport report{shortest_lrr(seq, options_), !cfg_.all_units, std::nullopt, std::nullopt};
    int code = kOk;
    try {
      report.solutions = enumerate_shortest(report.solution, report.monic_only, enumeration_cap_);
    } catch (const EnumerationTooLarge& e) {
      code = kEnumerationCap;
      note_ = e.what();
    }
    if (cfg_.verify) {
      try {
        report.oracle = brute_force_shortest(seq, static_cast<std::uint32_t>(seq.size()), enumeration_cap_);
      } catch (const EnumerationTooLarge& e) {
        code = kEnumerationCap;
        note_ = e.what();
      }
      if (report.oracle && code == kOk && report.monic_only &&
          (report.oracle->length != report.solution.length || report.oracle->monic != *report.solutions)) {
        code = kPropertyFailed;
      }
    }

    if (json_) {
      out_ << dump(lrr_document(report));
      return code;
    }
    const LrrSolution& sol = report.solution;
    out_ << "ring: " << ring_.name() << "\n";
    out_ << "sequence: ";
    for (std::size_t i = 0; i < seq.size(); ++i) out_ << (i ? "," : "") << seq.values[i];
    out_ << "\nshortest: " << format_poly(sol.shortest) << "\n";
    out_ << "length: " << sol.length << "\n";
    out_ << "companion: " << format_poly(sol.companion) << "\n";
    out_ << "parametrization: " << parametrization_template(sol) << "\n";
    out_ << "  t0 in {1.." << ring_.p() - 1 << "}, other t in {0.." << ring_.p() - 1 << "}\n";
    if (report.solutions) {
      out_ << (report.monic_only ? "monic solutions" : "solutions") << " (" << report.solutions->size() << "):\n";
      for (const auto& f : *report.solutions) out_ << "  " << format_poly(f) << "\n";
    } else {
      out_ << "solutions: not enumerated (" << note_ << ")\n";
    }
    if (report.oracle) {
      out_ << "oracle: length " << report.oracle->length << ", " << report.oracle->monic.size() << " monic; "
           << (code == kPropertyFailed ? "MISMATCH" : "agrees") << "\n";
    }
    return code;
  }

 private:
  std::vector<PolyVec> rows() { return parse_matrix(ring_, read_matrix_text(cfg_.matrix, in_)); }

  const Config& cfg_;
  std::istream& in_;
  std::ostream& out_;
  Ring ring_;
  MonomialOrder order_;
  bool json_;
  GroebnerOptions options_;
  std::size_t enumeration_cap_ = 1'000'000;
  std::string note_;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Groebner bases, p-bases and shortest linear recurrences over Z_{p^r}"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", cfg.ring_size, "ring size p^r, e.g. 9 for Z_9");
    sub->add_option("--p", cfg.p, "the prime p");
    sub->add_option("--r", cfg.r, "the exponent r");
    sub->add_option("--format", cfg.format, "human or json")->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--iteration-cap", cfg.iteration_cap, "Groebner pair-reduction cap (env ZPR_ITERATION_CAP)");
  };
  auto matrix_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    sub->add_option("--order", cfg.order, "top or pot");
    sub->add_option("matrix", cfg.matrix, "file with one vector per line, '-' for stdin")->required();
    return sub;
  };

  CLI::App* gb = matrix_command("gb", "minimal Groebner basis of the span of the rows");
  CLI::App* pb = matrix_command("pbasis", "minimal Groebner p-basis of the span of the rows");
  CLI::App* chk = matrix_command("check", "Groebner criterion plus PLM / p-PLM checks on the rows");
  chk->add_option("--seed", cfg.seed, "seed for the randomized checks");
  chk->add_option("--trials", cfg.trials, "random coefficient tuples per check");
  CLI::App* lrr = app.add_subcommand("lrr", "shortest linear recurrences of a sequence");
  common(lrr);
  lrr->add_option("--seq", cfg.sequence, "comma-separated S_0,...,S_{n-1}")->required();
  lrr->add_flag("--all-units", cfg.all_units, "enumerate every unit multiple, not only monic recurrences");
  lrr->add_flag("--verify", cfg.verify, "cross-check with the exhaustive oracle");
  lrr->add_option("--enum-cap", cfg.enumeration_cap, "enumeration cap (env ZPR_ENUMERATION_CAP)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    Runner runner(cfg, in, out);
    if (*gb) return runner.gb();
    if (*pb) return runner.pbasis();
    if (*chk) return runner.check();
    return runner.lrr();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidRing& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const IterationLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kIterationCap;
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kEnumerationCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace zpr::cli
