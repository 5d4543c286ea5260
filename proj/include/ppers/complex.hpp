#pragma once

#include "ppers/poset.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppers {

/// Strictly increasing vertex positions. Dimension is size() - 1.
using Simplex = std::vector<std::size_t>;

/// Cap accepted by clique_complex meaning "all cliques".
inline constexpr int kUnboundedDim = std::numeric_limits<int>::max();

/// Downward-closed family of faces over a totally ordered vertex list.
/// Every listed vertex is a 0-face. Faces of each dimension are kept sorted
/// lexicographically, which fixes the basis order used by homology.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closes `faces` downward. Each face is sorted and deduplicated first;
  /// indices must address `vertices`.
  static SimplicialComplex from_faces(std::vector<std::string> vertices,
                                      const std::vector<Simplex>& faces);
  /// Vertices are the names appearing in `faces`, sorted lexicographically.
  static SimplicialComplex from_named_faces(const std::vector<std::vector<std::string>>& faces);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::optional<std::size_t> find_vertex(const std::string& name) const;

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return faces_.empty(); }
  /// Faces of dimension `dim`; empty for dimensions outside [0, dimension()].
  const std::vector<Simplex>& faces(int dim) const;
  std::size_t face_count() const;
  bool contains(const Simplex& s) const;
  /// Position of `s` within faces(dim(s)), if present.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// All faces ordered by dimension, then lexicographically.
  std::vector<Simplex> all_faces() const;

  std::vector<std::string> face_names(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> faces_;
};

/// Undirected graph with an implicit self-loop on every vertex, i.e. a
/// 1-dimensional simplicial complex. The null graph is a valid value.
class ReflexiveGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  ReflexiveGraph() = default;
  /// Edges are normalized to (min, max) and sorted; loops and duplicates throw.
  ReflexiveGraph(std::vector<std::string> vertices, std::vector<Edge> edges);
  static ReflexiveGraph from_named_edges(std::vector<std::string> vertices,
                                         const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t cell_count() const { return vertices_.size() + edges_.size(); }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  bool has_edge(std::size_t u, std::size_t v) const;
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;

  friend bool operator==(const ReflexiveGraph&, const ReflexiveGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// True when both graphs have the same vertex names and the same edges
/// between names, regardless of storage order.
bool same_labeled_graph(const ReflexiveGraph& a, const ReflexiveGraph& b);

/// Vertex map between graphs; an edge may map to an edge or collapse to a vertex.
struct GraphMorphism {
  std::vector<std::size_t> vertex_map;
  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
};

bool is_graph_morphism(const ReflexiveGraph& source, const ReflexiveGraph& target,
                       const GraphMorphism& f);
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<std::size_t> vertex_map;

  /// Sorted, deduplicated image of a face.
  Simplex image(const Simplex& s) const;
};

bool is_simplicial_map(const SimplicialMap& f);

/// Faces are the nonempty chains x0 < ... < xk. Vertex order follows P.
SimplicialComplex order_complex(const Poset& p);
/// Faces ordered by inclusion. Elements are named "a|b|c" after their vertices.
Poset face_poset(const SimplicialComplex& s);
/// order_complex(face_poset(s)) with vertices sorted by name.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& s);
SimplicialComplex k_skeleton(const SimplicialComplex& s, int k);
ReflexiveGraph one_skeleton(const SimplicialComplex& s);
/// Cliques of G of dimension <= max_dim. Vertex order follows G.
SimplicialComplex clique_complex(const ReflexiveGraph& g, int max_dim = kUnboundedDim);
bool is_flag(const SimplicialComplex& s);
/// The graph viewed as a 1-dimensional complex.
SimplicialComplex as_complex(const ReflexiveGraph& g);

/// Simplicial map O(source) -> O(target) of a monotone map. Throws `Error`
/// when `f` is not monotone.
SimplicialMap induced_order_map(const MonotoneMap& f);

/// Simplicial map Cl(source) -> Cl(target) of a graph morphism.
SimplicialMap induced_clique_map(const SimplicialComplex& source, const SimplicialComplex& target,
                                 const GraphMorphism& f);

}  // namespace ppers
