#pragma once

// Text formats, report writers and built-in fixtures.
//
//   poset:          "elements: a b c", then "cover: a b" lines (a < b is a cover)
//   complex:        one face per line, vertex names separated by whitespace
//   graph:          "vertex: u" and "edge: u v" lines
//   weighted graph: "vertex: u w" and "edge: u v w" lines
//   edge list:      CSV rows "u,v,w", optional header, optional "u" rows
//
// '#' starts a comment; blank lines are ignored. Parse failures throw
// `ParseError` carrying the 1-based line number.

#include "ppers/complex.hpp"
#include "ppers/persistence.hpp"
#include "ppers/poset.hpp"
#include "ppers/pweighted.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ppers {

Poset parse_poset(std::string_view text);
SimplicialComplex parse_complex(std::string_view text);
ReflexiveGraph parse_graph(std::string_view text);
/// True when the text uses "vertex:"/"edge:" lines rather than bare faces.
bool looks_like_graph(std::string_view text);

/// Weights name elements of `poset`, or, without one, are decimals forming
/// the implicit chain of values that occur. A vertex without a "vertex:" line
/// takes the greatest common lower bound of its incident edge weights.
PWeightedGraph parse_weighted_graph(std::string_view text, const Poset* poset = nullptr);

EdgeList parse_edge_list(std::string_view text);

/// Comma-separated decimals, e.g. "0.5,1,2".
std::vector<Decimal> parse_decimal_list(std::string_view text);

/// Throws `Error` when the file cannot be read.
std::string read_file(const std::string& path);
/// Writes to a temporary sibling, then renames over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

/// [{"dim": n, "birth": b, "death": d|null}, ...]
std::string barcode_json(const Barcode& b);
/// Intervals carry grades only; indices are left at zero.
Barcode parse_barcode_json(std::string_view text);
/// Header "dim,birth,death"; empty death for infinite intervals.
std::string barcode_csv(const Barcode& b);
/// 600x600 persistence diagram: birth on x, death on y, diagonal drawn,
/// infinite deaths on a dashed line above the data.
std::string barcode_svg(const Barcode& b, const std::string& title);

std::string betti_json(const std::vector<std::size_t>& betti);
/// [{"dim": n, "u": "name", "v": "name", "rank": r}, ...]
std::string rank_invariant_json(const RankInvariant& r);
std::string stats_json(const std::vector<DegreeStats>& stats);

/// chain3, diamond, antichain2, v, pseudo-circle, point.
std::optional<Poset> named_poset(const std::string& name);
/// triangle, hollow-triangle, tetrahedron-boundary, octahedron, point, empty.
std::optional<SimplicialComplex> named_complex(const std::string& name);
std::vector<std::string> named_complex_list();

}  // namespace ppers
