#include "gallai/document.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace gallai {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "red",     "blue",  "green", "orange", "purple", "brown",
    "magenta", "cyan",  "gold",  "gray",   "pink",   "turquoise",
};

std::uint64_t require_index(const nlohmann::json& record, const char* key,
                            std::uint64_t max, std::size_t position) {
  const auto it = record.find(key);
  const std::string where =
      "edge record " + std::to_string(position) + ", field \"" + key + "\"";
  if (it == record.end()) throw DocumentError(where + " is missing");
  if (!it->is_number_integer()) {
    throw DocumentError(where + " must be an integer");
  }
  if (it->is_number_unsigned()) {
    const auto value = it->get<std::uint64_t>();
    if (value <= max) return value;
  } else if (it->get<std::int64_t>() < 0) {
    throw DocumentError(where + " must be nonnegative");
  }
  throw DocumentError(where + " is out of range");
}

}  // namespace

void write_document(std::ostream& os, const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  os << "{\n  \"n\": " << n << ",\n  \"edges\": [";
  bool first = true;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      os << (first ? "\n" : ",\n") << "    {\"u\": " << u << ", \"v\": " << v
         << ", \"color\": " << coloring.color(u, v) << '}';
      first = false;
    }
  }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
}

std::string write_document(const EdgeColoring& coloring) {
  std::ostringstream os;
  write_document(os, coloring);
  return os.str();
}

EdgeColoring parse_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");

  const auto n_it = doc.find("n");
  if (n_it == doc.end() || !n_it->is_number_unsigned() ||
      n_it->get<std::uint64_t>() == 0) {
    throw DocumentError("\"n\" must be a positive integer");
  }
  // 2^16 vertices is already ~8 GiB of pair colors.
  const auto n64 = n_it->get<std::uint64_t>();
  if (n64 > (1u << 16)) throw DocumentError("\"n\" is too large");
  const auto n = static_cast<std::size_t>(n64);

  const auto edges_it = doc.find("edges");
  if (edges_it == doc.end() || !edges_it->is_array()) {
    throw DocumentError("\"edges\" must be an array");
  }
  const std::size_t expected = n * (n - 1) / 2;
  if (edges_it->size() != expected) {
    throw DocumentError("expected " + std::to_string(expected) +
                        " edge records for n = " + std::to_string(n) +
                        ", got " + std::to_string(edges_it->size()));
  }

  EdgeColoring coloring(n);
  std::vector<bool> seen(expected, false);
  std::size_t position = 0;
  for (const auto& record : *edges_it) {
    if (!record.is_object()) {
      throw DocumentError("edge record " + std::to_string(position) +
                          " must be an object");
    }
    const auto u = require_index(record, "u", n - 1, position);
    const auto v = require_index(record, "v", n - 1, position);
    const auto c = require_index(record, "color",
                                 std::numeric_limits<Color>::max(), position);
    if (u >= v) {
      throw DocumentError("edge record " + std::to_string(position) +
                          " must have u < v");
    }
    const std::size_t index = coloring.pair_index(u, v);
    if (seen[index]) {
      throw DocumentError("pair {" + std::to_string(u) + ", " +
                          std::to_string(v) + "} appears twice");
    }
    seen[index] = true;
    coloring.set_color(u, v, static_cast<Color>(c));
    ++position;
  }
  return coloring;
}

EdgeColoring read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string palette_color(Color c) {
  std::string name = kPalette[c % kPalette.size()];
  const Color cycle = c / static_cast<Color>(kPalette.size());
  if (cycle > 0) name += std::to_string(2 + (cycle - 1) % 3);
  return name;
}

std::string write_dot(const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  std::ostringstream os;
  os << "graph gallai {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < n; ++v) os << "  " << v << ";\n";
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Color c = coloring.color(u, v);
      os << "  " << u << " -- " << v << " [color=\"" << palette_color(c)
         << "\", label=\"" << c << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace gallai
