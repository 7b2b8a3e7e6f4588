#pragma once

// Structured (JSON) documents emitted by the CLI in --format json mode.
//
// Every document carries "kind", the ring and, where relevant, the order.
// Vectors and polynomials are stored in the canonical text grammar, so the
// documents stay diffable. Parsing a document rebuilds and re-validates the
// underlying object; emitting it again reproduces the original bytes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zpr/groebner.hpp"
#include "zpr/lrr.hpp"
#include "zpr/pbasis.hpp"

namespace zpr {

using Document = nlohmann::ordered_json;

Document ring_document(const Ring& ring);
Document gb_document(const GroebnerBasis& G);
Document pbasis_document(const PBasis& B);

struct LrrReport {
  LrrSolution solution;
  bool monic_only = true;
  std::optional<std::vector<Poly>> solutions;  // empty when the enumeration cap was hit
  std::optional<BruteForceResult> oracle;
};

Document lrr_document(const LrrReport& report);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Document& doc);

/// Throw ParseError on malformed or inconsistent documents and ValidationFailed
/// when the rebuilt object breaks an invariant.
GroebnerBasis parse_gb_document(std::string_view text);
PBasis parse_pbasis_document(std::string_view text);

}  // namespace zpr
