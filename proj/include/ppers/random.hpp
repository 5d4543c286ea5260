#pragma once

// Seeded instance generators and small exhaustive enumerations. All sampling
// goes through `Rng` with hand-rolled reductions, so a seed gives the same
// instances on every platform.

#include "ppers/complex.hpp"
#include "ppers/persistence.hpp"
#include "ppers/poset.hpp"
#include "ppers/pweighted.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace ppers {

using Rng = std::mt19937_64;

/// Uniform in [0, n); n > 0.
std::size_t uniform_index(Rng& rng, std::size_t n);
/// True with probability p.
bool coin(Rng& rng, double p = 0.5);

/// Elements "p0".."p{n-1}"; each pair is related (in a random direction
/// consistent with a hidden linear order) with probability `density`.
Poset random_poset(Rng& rng, std::size_t n, double density = 0.35);
/// Like random_poset, but pairs may point both ways, so classes can merge.
Preorder random_preorder(Rng& rng, std::size_t n, double density = 0.25);

/// 1..max_vertices vertices "v0".., a few random faces of dimension <= max_dim, closed.
SimplicialComplex random_complex(Rng& rng, std::size_t max_vertices, int max_dim);

/// Edge probability 1/2 on 0..max_vertices vertices, edge weights uniform in
/// P, vertex weights a random common lower bound of the incident edge
/// weights. Without one, the vertex takes a minimal element and the incident
/// edges not above it are dropped.
PWeightedGraph random_weighted_graph(Rng& rng, const Poset& p, std::size_t max_vertices = 6);

/// A functor with non-injective structure maps: each level of phi(w) is
/// quotiented by vertex merges that grow along the order.
struct QuotientFunctor {
  PersistentGraph functor;
  /// q[v][x]: vertex x of sublevel_graph(w, v) -> vertex of functor.graph_at(v).
  std::vector<std::vector<std::size_t>> q;
};
QuotientFunctor random_quotient_functor(Rng& rng, const PWeightedGraph& w);

/// phi(w) with the vertices of every level stored in a random order.
PersistentGraph shuffled_inclusion_functor(Rng& rng, const PWeightedGraph& w);

/// Inclusion functor grown along a linear extension: each level adds random
/// vertices and edges to the union of the levels below. Not one-critical in
/// general.
PersistentGraph random_inclusion_functor(Rng& rng, const Poset& p, std::size_t max_vertices = 5);

/// Points "d0".. with distances k/10, k uniform in 1..100.
MetricData random_metric(Rng& rng, std::size_t n);

/// Chain of `levels` spaces on growing point sets with growing relations,
/// joined by inclusions. Up to max_points points.
SpaceFiltration random_space_filtration(Rng& rng, std::size_t levels, std::size_t max_points);

/// All posets on n elements up to isomorphism, elements "0".."n-1".
std::vector<Poset> all_posets(std::size_t n);

/// Every weighted graph over p on vertex names "a", "b", ... with at most
/// max_vertices vertices, every monotone weighting.
std::vector<PWeightedGraph> exhaustive_weighted_graphs(const Poset& p, std::size_t max_vertices = 2);

}  // namespace ppers
