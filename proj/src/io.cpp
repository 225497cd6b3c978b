#include "wittkit/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct Line {
  std::size_t number = 0;
  std::string text; // trimmed, nonempty, comment-free
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string text = trim(raw);
    if (!text.empty()) lines.push_back({number, text});
  }
  return lines;
}

// Splits "key: rest" and returns true on match; key must be a bare word.
bool split_key(const std::string& text, std::string& key, std::string& rest) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  key = trim(text.substr(0, colon));
  rest = trim(text.substr(colon + 1));
  if (key.empty()) return false;
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

std::vector<std::string> split_spaces(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) parts.push_back(tok);
  return parts;
}

Field parse_field_spec(const std::string& rest, const std::string& filename,
                       std::size_t line) {
  auto toks = split_spaces(rest);
  if (toks.size() == 1 && toks[0] == "Q") return Field::rationals();
  if (toks.size() == 2 && toks[0] == "Fp") {
    try {
      unsigned long long p = std::stoull(toks[1]);
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const Error&) {
      throw ParseError(filename, line, "invalid prime in field spec: " + toks[1]);
    } catch (const std::exception&) {
      throw ParseError(filename, line, "invalid prime in field spec: " + toks[1]);
    }
  }
  throw ParseError(filename, line, "unknown field spec: " + rest);
}

Polynomial parse_poly_at(const std::string& text, const ContextPtr& ctx,
                         const std::string& filename, std::size_t line) {
  try {
    return Polynomial::parse(ctx, text);
  } catch (const Error& e) {
    throw ParseError(filename, line, e.what());
  }
}

RingElement parse_element_at(const std::string& text, const RingPtr& ring,
                             const std::string& filename, std::size_t line) {
  try {
    return RingElement::parse(ring, text);
  } catch (const Error& e) {
    throw ParseError(filename, line, e.what());
  }
}

} // namespace

RingPtr parse_ring(std::istream& in, const std::string& filename,
                   std::optional<Field> field_override) {
  std::vector<std::string> vars;
  bool saw_vars = false;
  MonomialOrder order = MonomialOrder::grevlex;
  Field field = Field::rationals();
  // Relations are parsed after the header is complete, so `rel:` lines may
  // legally precede `vars:` only in theory; we require vars first for clarity.
  std::vector<std::pair<std::size_t, std::string>> rel_texts;

  for (const Line& line : read_lines(in)) {
    std::string key, rest;
    if (!split_key(line.text, key, rest)) {
      throw ParseError(filename, line.number,
                       "expected 'key: value', got: " + line.text);
    }
    if (key == "vars") {
      if (saw_vars) throw ParseError(filename, line.number, "duplicate vars line");
      vars = split_spaces(rest);
      if (vars.empty()) throw ParseError(filename, line.number, "vars line is empty");
      saw_vars = true;
    } else if (key == "order") {
      if (rest == "grevlex") {
        order = MonomialOrder::grevlex;
      } else if (rest == "lex") {
        order = MonomialOrder::lex;
      } else {
        throw ParseError(filename, line.number, "unknown order: " + rest);
      }
    } else if (key == "field") {
      field = parse_field_spec(rest, filename, line.number);
    } else if (key == "rel") {
      if (rest.empty()) throw ParseError(filename, line.number, "empty relation");
      rel_texts.emplace_back(line.number, rest);
    } else {
      throw ParseError(filename, line.number, "unknown key: " + key);
    }
  }
  if (!saw_vars) throw ParseError(filename, 0, "missing vars line");
  if (field_override) field = *field_override;

  ContextPtr ctx;
  try {
    ctx = make_context(field, vars, order);
  } catch (const Error& e) {
    throw ParseError(filename, 0, e.what());
  }
  std::vector<Polynomial> rels;
  rels.reserve(rel_texts.size());
  for (const auto& [number, text] : rel_texts) {
    rels.push_back(parse_poly_at(text, ctx, filename, number));
  }
  try {
    return rels.empty() ? RingPresentation::polynomial_ring(ctx)
                        : RingPresentation::make(ctx, rels);
  } catch (const Error& e) {
    throw ParseError(filename, 0, e.what());
  }
}

void print_ring(std::ostream& out, const RingPtr& ring) {
  const auto& ctx = ring->context();
  out << "vars:";
  for (const auto& v : ctx->vars()) out << ' ' << v;
  out << '\n';
  out << "order: "
      << (ctx->order() == MonomialOrder::grevlex ? "grevlex" : "lex") << '\n';
  out << "field: " << ctx->field().to_string() << '\n';
  for (const auto& rel : ring->relations()) {
    out << "rel: " << rel.to_string() << '\n';
  }
}

MatrixOverRing parse_matrix(std::istream& in, const RingPtr& ring,
                            const std::string& filename) {
  std::vector<std::vector<RingElement>> rows;
  std::size_t cols = 0;
  for (const Line& line : read_lines(in)) {
    auto parts = split_commas(line.text);
    if (!rows.empty() && parts.size() != cols) {
      throw ParseError(filename, line.number,
                       "row has " + std::to_string(parts.size()) +
                           " entries, expected " + std::to_string(cols));
    }
    cols = parts.size();
    std::vector<RingElement> row;
    row.reserve(parts.size());
    for (const auto& part : parts) {
      row.push_back(parse_element_at(part, ring, filename, line.number));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(filename, 0, "empty matrix file");
  return MatrixOverRing::from_rows(ring, rows);
}

void print_matrix(std::ostream& out, const MatrixOverRing& m,
                  const std::string& sep) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << sep;
      out << m.at(i, j).to_string();
    }
    out << '\n';
  }
}

RowFileData parse_row_file(std::istream& in, const RingPtr& ring,
                           const std::string& filename) {
  RowFileData data;
  bool saw_v = false;
  for (const Line& line : read_lines(in)) {
    std::string key, rest;
    if (!split_key(line.text, key, rest)) {
      throw ParseError(filename, line.number,
                       "expected 'v: ...' or 'w: ...', got: " + line.text);
    }
    std::vector<RingElement> entries;
    for (const auto& part : split_commas(rest)) {
      entries.push_back(parse_element_at(part, ring, filename, line.number));
    }
    if (key == "v") {
      if (saw_v) throw ParseError(filename, line.number, "duplicate v line");
      data.v = std::move(entries);
      saw_v = true;
    } else if (key == "w") {
      if (data.w) throw ParseError(filename, line.number, "duplicate w line");
      data.w = std::move(entries);
    } else {
      throw ParseError(filename, line.number, "unknown key: " + key);
    }
  }
  if (!saw_v) throw ParseError(filename, 0, "missing v line");
  if (data.w && data.w->size() != data.v.size()) {
    throw ParseError(filename, 0, "v and w have different lengths");
  }
  return data;
}

void print_row(std::ostream& out, const std::string& tag,
               const std::vector<RingElement>& entries, const std::string& sep) {
  out << tag << ':';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << (i ? sep : std::string(" ")) << entries[i].to_string();
  }
  out << '\n';
}

ElementaryProduct parse_word(std::istream& in, const RingPtr& ring,
                             const std::string& filename) {
  auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(filename, 0, "empty word file");

  std::string key, rest;
  if (!split_key(lines.front().text, key, rest) || key != "rank") {
    throw ParseError(filename, lines.front().number, "expected 'rank: <n>' header");
  }
  std::size_t rank = 0;
  try {
    long long r = std::stoll(rest);
    if (r <= 0) throw std::out_of_range("rank");
    rank = static_cast<std::size_t>(r);
  } catch (const std::exception&) {
    throw ParseError(filename, lines.front().number, "invalid rank: " + rest);
  }

  ElementaryProduct word(ring, rank);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    std::istringstream ss(line.text);
    std::string kind;
    long long i1 = 0, j1 = 0;
    ss >> kind >> i1 >> j1;
    if (ss.fail() || (kind != "E" && kind != "SE")) {
      throw ParseError(filename, line.number,
                       "expected 'E i j <poly>' or 'SE i j <poly>'");
    }
    std::string lambda_text;
    std::getline(ss, lambda_text);
    lambda_text = trim(lambda_text);
    if (lambda_text.empty()) {
      throw ParseError(filename, line.number, "missing coefficient polynomial");
    }
    if (i1 < 1 || j1 < 1 || static_cast<std::size_t>(i1) > rank ||
        static_cast<std::size_t>(j1) > rank) {
      throw ParseError(filename, line.number, "index out of range for rank " +
                                                  std::to_string(rank));
    }
    RingElement lambda = parse_element_at(lambda_text, ring, filename, line.number);
    auto gkind = kind == "E" ? ElementaryGenerator::Kind::linear
                             : ElementaryGenerator::Kind::symplectic;
    try {
      word.append(ElementaryGenerator(gkind, static_cast<std::size_t>(i1) - 1,
                                      static_cast<std::size_t>(j1) - 1, lambda,
                                      rank));
    } catch (const Error& e) {
      throw ParseError(filename, line.number, e.what());
    }
  }
  return word;
}

void print_word(std::ostream& out, const ElementaryProduct& word) {
  out << "rank: " << word.rank() << '\n';
  for (const auto& g : word.word()) {
    out << (g.kind == ElementaryGenerator::Kind::linear ? "E" : "SE") << ' '
        << (g.i + 1) << ' ' << (g.j + 1) << ' ' << g.lambda.to_string() << '\n';
  }
}

RingHom parse_hom(std::istream& in, const RingPtr& source, const RingPtr& target,
                  const std::string& filename) {
  const auto& vars = source->context()->vars();
  std::vector<std::optional<RingElement>> images(vars.size());
  for (const Line& line : read_lines(in)) {
    std::string key, rest;
    if (!split_key(line.text, key, rest)) {
      throw ParseError(filename, line.number,
                       "expected '<var>: <polynomial>', got: " + line.text);
    }
    auto idx = source->context()->var_index(key);
    if (!idx) throw ParseError(filename, line.number, "unknown source variable: " + key);
    if (images[*idx]) {
      throw ParseError(filename, line.number, "duplicate image for: " + key);
    }
    images[*idx] = parse_element_at(rest, target, filename, line.number);
  }
  std::vector<RingElement> resolved;
  resolved.reserve(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!images[k]) throw ParseError(filename, 0, "missing image for: " + vars[k]);
    resolved.push_back(*images[k]);
  }
  try {
    return RingHom(source, target, resolved);
  } catch (const Error& e) {
    throw ParseError(filename, 0, e.what());
  }
}

std::vector<Polynomial> parse_poly_lines(std::istream& in, const ContextPtr& ctx,
                                         const std::string& filename) {
  std::vector<Polynomial> polys;
  for (const Line& line : read_lines(in)) {
    polys.push_back(parse_poly_at(line.text, ctx, filename, line.number));
  }
  return polys;
}

std::vector<std::vector<long long>> parse_integer_matrix(std::istream& in,
                                                         const std::string& filename) {
  std::vector<std::vector<long long>> rows;
  for (const Line& line : read_lines(in)) {
    std::vector<long long> row;
    for (const auto& part : split_commas(line.text)) {
      try {
        std::size_t used = 0;
        long long value = std::stoll(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        row.push_back(value);
      } catch (const std::exception&) {
        throw ParseError(filename, line.number, "invalid integer: " + part);
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(filename, line.number, "ragged integer matrix");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(filename, 0, "empty matrix file");
  return rows;
}

} // namespace wittkit
