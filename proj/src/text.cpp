#include "zpr/text.hpp"

#include <cctype>

#include "zpr/errors.hpp"

namespace zpr {

namespace {

// Strips whitespace and folds U+2212 (UTF-8 E2 88 92) into '-'.
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (!std::isspace(c)) {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view src) : ring_(ring), src_(src) {}

  Poly parse_all() {
    Poly p = parse_poly();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

  Poly parse_poly() {
    std::vector<Residue> coeffs;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = (next() == '-');
    while (true) {
      auto [c, e] = parse_term();
      if (negative) c = ring_.neg(c);
      if (coeffs.size() <= e) coeffs.resize(static_cast<std::size_t>(e) + 1, 0);
      coeffs[e] = ring_.add(coeffs[e], c);
      if (peek() != '+' && peek() != '-') break;
      negative = (next() == '-');
    }
    return Poly(ring_, std::move(coeffs));
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char next() { return src_[pos_++]; }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
  }

 private:
  std::pair<Residue, std::uint32_t> parse_term() {
    Residue c = 1;
    const bool has_coeff = std::isdigit(static_cast<unsigned char>(peek()));
    if (has_coeff) c = parse_residue();
    if (peek() != 'x') {
      if (!has_coeff) fail("expected a term");
      return {c, 0};
    }
    ++pos_;
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      std::uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + static_cast<std::uint64_t>(next() - '0');
        if (v > (1u << 20)) fail("exponent too large");
      }
      e = static_cast<std::uint32_t>(v);
    }
    return {c, e};
  }

  Residue parse_residue() {
    Residue v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<Residue>(next() - '0')) % ring_.modulus();
    }
    return v;
  }

  const Ring& ring_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

PolyVec parse_vector_normalized(const Ring& ring, std::string_view src) {
  if (src.size() < 2 || src.front() != '[' || src.back() != ']') {
    throw ParseError("vector must be enclosed in brackets: '" + std::string(src) + "'");
  }
  std::vector<Poly> comps;
  std::string_view body = src.substr(1, src.size() - 2);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view piece = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    if (piece.empty()) throw ParseError("empty vector entry in '" + std::string(src) + "'");
    comps.push_back(PolyParser(ring, piece).parse_all());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PolyVec(ring, comps);
}

}  // namespace

Poly parse_poly(const Ring& ring, std::string_view text) {
  const std::string src = normalize(text);
  if (src.empty()) throw ParseError("empty polynomial");
  return PolyParser(ring, src).parse_all();
}

PolyVec parse_vector(const Ring& ring, std::string_view text) { return parse_vector_normalized(ring, normalize(text)); }

std::vector<PolyVec> parse_matrix(const Ring& ring, std::string_view text) {
  std::vector<PolyVec> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == text.npos ? text.npos : end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    const std::string src = normalize(line);
    if (!src.empty()) {
      try {
        rows.push_back(parse_vector_normalized(ring, src));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (rows.back().q() != rows.front().q()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(rows.front().q()) +
                         " entries, found " + std::to_string(rows.back().q()));
      }
    }
    if (end == text.npos) break;
    start = end + 1;
  }
  if (rows.empty()) throw ParseError("no vectors in input");
  return rows;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Residue c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0 || c != 1) out += std::to_string(c);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::string format_vector(const PolyVec& f) {
  std::string out = "[";
  for (std::uint32_t i = 1; i <= f.q(); ++i) {
    if (i > 1) out += ", ";
    out += format_poly(f.component(i));
  }
  return out + "]";
}

std::string format_matrix(const std::vector<PolyVec>& rows) {
  std::string out;
  for (const auto& row : rows) out += format_vector(row) + "\n";
  return out;
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  if (m.alpha == 0) {
    out = "1";
  } else {
    out = "x";
    if (m.alpha > 1) out += "^" + std::to_string(m.alpha);
  }
  return out + "*e" + std::to_string(m.pos);
}

}  // namespace zpr
