#include "zpr/document.hpp"

#include "zpr/errors.hpp"
#include "zpr/text.hpp"

namespace zpr {

namespace {

Document leading_entry(const LeadingData& d) {
  Document out;
  out["lm"] = format_monomial(d.lm);
  out["lc"] = d.lc;
  out["lpos"] = d.lpos();
  out["deg"] = d.deg();
  out["ord"] = d.ord;
  return out;
}

Document parse_json(std::string_view text) {
  try {
    return Document::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

template <typename T>
T field(const Document& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document field '") + key + "': " + e.what());
  }
}

Ring parse_ring(const Document& doc) {
  const Document& ring = doc.contains("ring") ? doc.at("ring") : throw ParseError("document lacks 'ring'");
  return Ring(field<std::uint32_t>(ring, "p"), field<std::uint32_t>(ring, "r"));
}

void expect_kind(const Document& doc, const char* kind) {
  if (field<std::string>(doc, "kind") != kind) {
    throw ParseError(std::string("expected a '") + kind + "' document");
  }
}

std::vector<PolyVec> parse_rows(const Ring& ring, const Document& rows, const char* key) {
  std::vector<PolyVec> out;
  for (const auto& row : rows) out.push_back(parse_vector(ring, field<std::string>(row, key)));
  return out;
}

// Key order does not matter when comparing a parsed document with its rebuild.
bool same_content(const Document& a, const Document& b) {
  return nlohmann::json::parse(a.dump()) == nlohmann::json::parse(b.dump());
}

std::vector<std::string> poly_strings(const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(format_poly(f));
  return out;
}

}  // namespace

Document ring_document(const Ring& ring) {
  Document out;
  out["p"] = ring.p();
  out["r"] = ring.r();
  out["modulus"] = ring.modulus();
  return out;
}

Document gb_document(const GroebnerBasis& G) {
  Document doc;
  doc["kind"] = "groebner_basis";
  doc["ring"] = ring_document(G.ring());
  doc["order"] = to_string(G.order());
  doc["q"] = G.q();
  Document elements = Document::array();
  for (std::size_t i = 0; i < G.size(); ++i) {
    Document e;
    e["vector"] = format_vector(G[i]);
    e["leading"] = leading_entry(G.leading()[i]);
    elements.push_back(std::move(e));
  }
  doc["elements"] = std::move(elements);
  doc["betas"] = G.empty() ? OrderDiffs{} : order_differences(G);
  return doc;
}

Document pbasis_document(const PBasis& B) {
  Document doc;
  doc["kind"] = "p_basis";
  doc["ring"] = ring_document(B.ring());
  doc["order"] = to_string(B.order());
  doc["q"] = B.q();
  doc["betas"] = B.betas();
  doc["N"] = p_dim(B);
  Document source = Document::array();
  for (const auto& g : B.source_basis()) source.push_back(format_vector(g));
  doc["groebner_basis"] = std::move(source);
  Document vectors = Document::array();
  for (std::size_t i = 0; i < B.size(); ++i) {
    Document v;
    v["vector"] = format_vector(B[i]);
    v["source"] = B.provenance()[i].source + 1;
    v["p_power"] = B.provenance()[i].exponent;
    v["leading"] = leading_entry(leading_data(B[i], B.order()));
    vectors.push_back(std::move(v));
  }
  doc["vectors"] = std::move(vectors);
  return doc;
}

Document lrr_document(const LrrReport& report) {
  const LrrSolution& sol = report.solution;
  Document doc;
  doc["kind"] = "lrr";
  doc["ring"] = ring_document(sol.ring);
  doc["n"] = sol.n;
  doc["shortest"] = format_poly(sol.shortest);
  doc["length"] = sol.length;
  doc["companion"] = format_poly(sol.companion);
  doc["pivot_index"] = sol.pivot_index + 1;
  doc["parametrization"] = parametrization_template(sol);
  doc["pivot_digits"] = sol.pivot_digits();
  Document gens = Document::array();
  for (const auto& g : sol.params) {
    Document e;
    e["index"] = g.index + 1;
    e["d"] = format_poly(g.d);
    e["budget"] = g.budget;
    gens.push_back(std::move(e));
  }
  doc["generators"] = std::move(gens);
  Document pb = Document::array();
  for (const auto& v : sol.p_basis) pb.push_back(format_vector(v));
  doc["p_basis"] = std::move(pb);
  doc["monic_only"] = report.monic_only;
  if (report.solutions) {
    doc["solutions"] = poly_strings(*report.solutions);
  } else {
    doc["solutions"] = nullptr;
  }
  if (report.oracle) {
    Document o;
    o["length"] = report.oracle->length;
    o["monic"] = poly_strings(report.oracle->monic);
    doc["oracle"] = std::move(o);
  }
  return doc;
}

std::string dump(const Document& doc) { return doc.dump(2) + "\n"; }

GroebnerBasis parse_gb_document(std::string_view text) {
  const Document doc = parse_json(text);
  expect_kind(doc, "groebner_basis");
  const Ring ring = parse_ring(doc);
  const MonomialOrder order = parse_order(field<std::string>(doc, "order"));
  const auto q = field<std::uint32_t>(doc, "q");
  GroebnerBasis G(ring, q, order, parse_rows(ring, doc.at("elements"), "vector"));
  if (!same_content(gb_document(G), doc)) throw ParseError("document is inconsistent with its recomputed leading data");
  return G;
}

PBasis parse_pbasis_document(std::string_view text) {
  const Document doc = parse_json(text);
  expect_kind(doc, "p_basis");
  const Ring ring = parse_ring(doc);
  const MonomialOrder order = parse_order(field<std::string>(doc, "order"));
  const auto q = field<std::uint32_t>(doc, "q");
  std::vector<PolyVec> source;
  for (const auto& row : doc.at("groebner_basis")) source.push_back(parse_vector(ring, row.get<std::string>()));
  PBasis B = build_p_basis(GroebnerBasis(ring, q, order, std::move(source)));
  if (!same_content(pbasis_document(B), doc)) throw ParseError("document is inconsistent with the rebuilt p-basis");
  return B;
}

}  // namespace zpr
