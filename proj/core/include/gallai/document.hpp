#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "gallai/coloring.hpp"
#include "gallai/error.hpp"

namespace gallai {

// On-disk form of an EdgeColoring:
//
//   {
//     "n": 3,
//     "edges": [
//       {"u": 0, "v": 1, "color": 0},
//       {"u": 0, "v": 2, "color": 0},
//       {"u": 1, "v": 2, "color": 1}
//     ]
//   }
//
// Writers emit edges in lexicographic (u, v) order with u < v, one record per
// line. Readers accept records in any order but require every unordered pair
// exactly once, 0 <= u < v < n and nonnegative colors.
class DocumentError : public Error {
 public:
  using Error::Error;
};

std::string write_document(const EdgeColoring& coloring);
void write_document(std::ostream& os, const EdgeColoring& coloring);

// Throws DocumentError.
EdgeColoring parse_document(std::string_view text);
EdgeColoring read_document_file(const std::string& path);

// Graphviz pen color for a color id. The first twelve ids map to the base
// palette; later ids reuse it with the numbered X11 variants 2, 3, 4.
std::string palette_color(Color c);

// Undirected Graphviz description with one pen color per edge color.
std::string write_dot(const EdgeColoring& coloring);

}  // namespace gallai
