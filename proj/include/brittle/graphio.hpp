#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brittle/graph.hpp"
#include "json.hpp"

namespace brittle {

/// Raised on malformed graph text; `offset` is the byte position of the
/// first offending byte.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& what)
      : std::runtime_error("parse error at byte " + std::to_string(off) + ": " + what),
        offset(off) {}
};

// graph6: 6-bit big-endian encoding of the upper adjacency triangle in
// column order (0,1),(0,2),(1,2),(0,3),..., each group offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// sparse6: ':' prefix, edge list encoded as (b,x) items against a moving
// current vertex, padded with 1-bits.
std::string to_sparse6(const Graph& g);
Graph from_sparse6(std::string_view text);

/// Accepts graph6 or sparse6, with optional ">>graph6<<" / ">>sparse6<<"
/// headers and surrounding whitespace.
Graph graph_from_text(std::string_view text);

// JSON form: {"n": int, "edges": [[u,v],...], "labels": [...]?}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace brittle
