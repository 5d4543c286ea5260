#pragma once

// P-weighted graphs (G, w) and P-persistent graphs (functors P -> graphs).
//
// phi sends (G, w) to its sublevel functor v |-> G_v with inclusion maps.
// psi sends a functor to the disjoint union of its values, each copy weighted
// by the element it sits over. On one-critical inclusion functors,
// from_persistent inverts phi.

#include "ppers/complex.hpp"
#include "ppers/poset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppers {

/// A vertex ({x}) or an edge ({x, y}, sorted) named by vertex identifiers.
using Cell = std::vector<std::string>;

/// Graph with a weight in P on every vertex and edge, monotone along faces:
/// w(x) <= w(xy) and w(y) <= w(xy).
class PWeightedGraph {
 public:
  PWeightedGraph() = default;
  PWeightedGraph(ReflexiveGraph graph, Poset poset, std::vector<std::size_t> vertex_weight,
                 std::vector<std::size_t> edge_weight);

  const ReflexiveGraph& graph() const { return graph_; }
  const Poset& poset() const { return poset_; }
  std::size_t vertex_weight(std::size_t v) const { return vertex_weight_.at(v); }
  std::size_t edge_weight(std::size_t e) const { return edge_weight_.at(e); }
  const std::vector<std::size_t>& vertex_weights() const { return vertex_weight_; }
  const std::vector<std::size_t>& edge_weights() const { return edge_weight_; }
  std::size_t cell_count() const { return graph_.cell_count(); }

  /// Named cells with their weights.
  std::map<Cell, std::size_t> weighted_cells() const;

 private:
  ReflexiveGraph graph_;
  Poset poset_;
  std::vector<std::size_t> vertex_weight_;
  std::vector<std::size_t> edge_weight_;
};

/// Same poset, same named cells, same weight on every cell.
bool same_weighted_graph(const PWeightedGraph& a, const PWeightedGraph& b);

/// Functor from a poset to reflexive graphs. Only maps along cover pairs are
/// stored; longer maps are composed on demand. Functoriality (all cover paths
/// between two elements compose to the same map) is checked at construction.
class PersistentGraph {
 public:
  using CoverMaps = std::map<std::pair<std::size_t, std::size_t>, GraphMorphism>;

  PersistentGraph() = default;
  PersistentGraph(Poset poset, std::vector<ReflexiveGraph> graphs, CoverMaps cover_maps);

  /// Maps are the name-preserving inclusions graph_at(u) -> graph_at(v);
  /// throws `Error` when some graph_at(u) is not a subgraph of graph_at(v).
  static PersistentGraph from_inclusions(Poset poset, std::vector<ReflexiveGraph> graphs);

  const Poset& poset() const { return poset_; }
  const ReflexiveGraph& graph_at(std::size_t v) const { return graphs_.at(v); }
  const std::vector<ReflexiveGraph>& graphs() const { return graphs_; }
  const CoverMaps& cover_maps() const { return cover_maps_; }
  /// Throws `Error` unless u <= v.
  GraphMorphism map_at(std::size_t u, std::size_t v) const;

  /// Every structure map is injective and preserves vertex names.
  bool is_inclusion_functor() const;

 private:
  Poset poset_;
  std::vector<ReflexiveGraph> graphs_;
  CoverMaps cover_maps_;
};

/// Vertex-by-vertex equality up to storage order, level by level.
bool same_persistent_graph(const PersistentGraph& a, const PersistentGraph& b);

/// Cell -> least element of P at which it is present.
struct CriticalValueTable {
  std::map<Cell, std::size_t> birth;
};

/// Disjoint union produced by psi together with where each vertex came from.
struct TaggedUnion {
  PWeightedGraph weighted;
  /// vertex of `weighted` -> (element v, vertex of graph_at(v))
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  /// (element v, vertex of graph_at(v)) -> vertex of `weighted`
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> copy_of;
};

/// Cells with weight <= v, vertex order inherited from W.
ReflexiveGraph sublevel_graph(const PWeightedGraph& w, std::size_t v);
ReflexiveGraph sublevel_graph(const PWeightedGraph& w, const std::string& v);

PersistentGraph phi(const PWeightedGraph& w);

/// Vertices of the union are named "x@v" for vertex x of graph_at(v).
PWeightedGraph psi(const PersistentGraph& f);
TaggedUnion psi_tagged(const PersistentGraph& f);

/// Throws `Error` when the functor is not an inclusion functor.
std::optional<CriticalValueTable> critical_values(const PersistentGraph& f);
bool is_one_critical(const PersistentGraph& f);

/// Union of all graph_at(v) weighted by critical values. Vertices are listed
/// in order of first appearance along a linear extension of P. Throws `Error`
/// when f is not one-critical.
PWeightedGraph from_persistent(const PersistentGraph& f);

/// Renames vertices so that every structure map becomes a name-preserving
/// inclusion. Requires injective structure maps; throws `Error` otherwise.
PersistentGraph to_inclusion_functor(const PersistentGraph& f);

}  // namespace ppers
