#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wittkit/elementary.hpp"
#include "wittkit/matrix.hpp"
#include "wittkit/ring.hpp"

namespace wittkit {

// Line-oriented text formats.  Blank lines and '#' comments are ignored
// everywhere; all diagnostics carry file:line.
//
// ring file:      vars: x y z | order: grevlex|lex | field: Q | field: Fp 7
//                 rel: <polynomial>        (zero or more)
// matrix file:    one row per line, entries separated by ','
// row file:       v: p1, ..., pn           optional  w: q1, ..., qn
// word file:      rank: N  then lines  E i j <poly>  or  SE i j <poly>
//                 (indices 1-based in text)
// hom file:       one line per source variable:  <var>: <target polynomial>

RingPtr parse_ring(std::istream& in, const std::string& filename,
                   std::optional<Field> field_override = std::nullopt);
void print_ring(std::ostream& out, const RingPtr& ring);

MatrixOverRing parse_matrix(std::istream& in, const RingPtr& ring,
                            const std::string& filename);
void print_matrix(std::ostream& out, const MatrixOverRing& m,
                  const std::string& sep = ", ");

struct RowFileData {
  std::vector<RingElement> v;
  std::optional<std::vector<RingElement>> w;
};
RowFileData parse_row_file(std::istream& in, const RingPtr& ring,
                           const std::string& filename);
void print_row(std::ostream& out, const std::string& tag,
               const std::vector<RingElement>& entries,
               const std::string& sep = ", ");

ElementaryProduct parse_word(std::istream& in, const RingPtr& ring,
                             const std::string& filename);
void print_word(std::ostream& out, const ElementaryProduct& word);

RingHom parse_hom(std::istream& in, const RingPtr& source, const RingPtr& target,
                  const std::string& filename);

// One polynomial per line (used by `gb`, `nf`, `member`).
std::vector<Polynomial> parse_poly_lines(std::istream& in, const ContextPtr& ctx,
                                         const std::string& filename);

// Integer matrix: rows of comma-separated integers.
std::vector<std::vector<long long>> parse_integer_matrix(std::istream& in,
                                                         const std::string& filename);

} // namespace wittkit
