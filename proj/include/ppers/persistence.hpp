#pragma once

// Filtrations over totally ordered grades, barcodes by column reduction, and
// rank invariants for functors over arbitrary finite posets.

#include "ppers/complex.hpp"
#include "ppers/decimal.hpp"
#include "ppers/linalg.hpp"
#include "ppers/poset.hpp"
#include "ppers/pweighted.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppers {

enum class Direction { ascending, descending };

/// Nested complexes K_0 ⊆ K_1 ⊆ ... stored as the last complex plus the index
/// of the threshold at which each face appears.
class ChainFiltration {
 public:
  ChainFiltration() = default;
  /// `birth[d][i]` is the threshold index of complex.faces(d)[i]. Births must
  /// be monotone along faces and below `grades.size()`.
  ChainFiltration(SimplicialComplex complex, std::vector<std::vector<std::size_t>> birth,
                  std::vector<Decimal> grades, std::vector<std::string> labels, Direction direction);

  const SimplicialComplex& complex() const { return complex_; }
  std::size_t threshold_count() const { return grades_.size(); }
  /// Filtration-order grades: increasing when ascending, decreasing when descending.
  const std::vector<Decimal>& grades() const { return grades_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Direction direction() const { return direction_; }
  std::size_t birth(int dim, std::size_t face) const { return birth_.at(static_cast<std::size_t>(dim)).at(face); }
  const std::vector<std::vector<std::size_t>>& births() const { return birth_; }

  /// Faces born at or before threshold i, over the vertices present by then.
  SimplicialComplex complex_at(std::size_t i) const;
  /// Index of the last threshold not after `grade` in filtration order.
  std::optional<std::size_t> threshold_at(const Decimal& grade) const;
  SimplicialComplex complex_at_value(const Decimal& grade) const;

  friend bool operator==(const ChainFiltration&, const ChainFiltration&) = default;

 private:
  SimplicialComplex complex_;
  std::vector<std::vector<std::size_t>> birth_;
  std::vector<Decimal> grades_;
  std::vector<std::string> labels_;
  Direction direction_ = Direction::ascending;
};

/// Re-buckets faces onto new grades: a face enters at the first new grade not
/// before its own. Faces born after the last new grade are dropped.
ChainFiltration with_thresholds(const ChainFiltration& f, const std::vector<Decimal>& grades);

struct Interval {
  int dim = 0;
  std::size_t birth = 0;
  std::optional<std::size_t> death;  // nullopt = infinite
  Decimal birth_grade;
  std::optional<Decimal> death_grade;

  bool zero_length() const { return death && *death == birth; }
  bool infinite() const { return !death; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Barcode {
  std::vector<Interval> intervals;

  /// Intervals of degree `dim` alive at threshold i (birth <= i < death).
  std::size_t alive_at(int dim, std::size_t i) const;
  /// Intervals of degree `dim` alive over all of [i, j].
  std::size_t alive_over(int dim, std::size_t i, std::size_t j) const;
  /// Zero-length intervals removed.
  Barcode reported() const;
};

/// Same multiset of (dim, birth grade, death grade).
bool same_intervals(const Barcode& a, const Barcode& b);

/// Grades of a chain poset, indexed by element: the numeric values of the
/// element names when they parse and increase along the chain, else ranks.
std::vector<Decimal> chain_grades(const Poset& chain);

/// Clique filtration of a weighted graph over a chain. Descending runs the
/// reversed chain; a vertex then enters with its heaviest incident edge.
/// Throws `Error` when the poset is not a chain.
ChainFiltration weight_filtration(const PWeightedGraph& w, Direction direction, int max_degree);

struct MetricData {
  std::vector<std::string> points;
  /// Row-major n x n, symmetric, zero diagonal, non-negative.
  std::vector<Decimal> distance;

  const Decimal& d(std::size_t i, std::size_t j) const { return distance[i * points.size() + j]; }
};

/// Throws `Error` unless `m` is symmetric, non-negative with zero diagonal.
void validate(const MetricData& m);

/// K_i = Cl(D_{eps_i}) with x ~ y when d(x, y) <= eps_i. Throws `Error` unless
/// the epsilons strictly increase.
ChainFiltration vietoris_rips(const MetricData& m, const std::vector<Decimal>& epsilons, int max_degree);

/// Complete graph weighted by distance, vertices at 0, over the chain of
/// {0} and all distances.
PWeightedGraph distance_weighted_graph(const MetricData& m);

/// v -> finite space (by its specialization preorder), with point maps on
/// cover pairs of the index poset.
struct SpaceFiltration {
  Poset levels;
  std::vector<Preorder> spaces;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> cover_maps;
};

/// Throws `Error` unless every cover map is monotone and injective and all
/// cover paths compose to the same map.
void validate(const SpaceFiltration& tau);
/// Composite point map tau(u) -> tau(v) for u <= v.
std::vector<std::size_t> space_map(const SpaceFiltration& tau, std::size_t u, std::size_t v);

/// theta(v) = one_skeleton(order_complex(kolmogorov_quotient(tau(v)))), with
/// the induced graph maps.
PersistentGraph space_filtration_to_graph(const SpaceFiltration& tau);

struct RankEntry {
  int dim = 0;
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t rank = 0;
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// rank of H_n(u) -> H_n(v) for comparable pairs, sorted by (dim, u, v).
struct RankInvariant {
  Poset poset;
  std::vector<RankEntry> entries;

  std::optional<std::size_t> at(int dim, std::size_t u, std::size_t v) const;
};

/// Ranks of H_n(Cl(F(u))) -> H_n(Cl(F(v))). Evaluates all comparable pairs
/// unless `pairs` is given.
RankInvariant rank_invariant(const PersistentGraph& f, int max_degree, FieldConfig field,
                             const std::vector<std::pair<std::size_t, std::size_t>>* pairs = nullptr);

/// Ranks of H_n(O(tau(u))) -> H_n(O(tau(v))) taken on order complexes of the
/// Kolmogorov quotients, without passing through graphs.
RankInvariant order_complex_rank_invariant(const SpaceFiltration& tau, int max_degree, FieldConfig field);

/// Standard column reduction in filtration order with clearing. Cells are
/// ordered by (birth, dimension, vertex tuple). Intervals of degree <= max_degree.
Barcode barcode(const ChainFiltration& f, int max_degree, FieldConfig field);

/// Undirected weighted edge list with optional isolated vertices.
struct EdgeList {
  std::vector<std::string> vertices;  // order of first appearance
  struct Row {
    std::string u, v;
    Decimal w;
  };
  std::vector<Row> edges;
};

/// Weighted graph over the chain of distinct edge weights. Vertices take the
/// extremal incident weight; isolated vertices enter at the first threshold.
PWeightedGraph network_graph(const EdgeList& edges, Direction direction);

/// Shortest-path metric with edge weights as lengths, on the largest
/// connected component (ties: component of the earliest vertex). Throws
/// `Error` on negative weights.
MetricData shortest_path_metric(const EdgeList& edges, std::vector<std::string>* warnings = nullptr);

struct DegreeStats {
  int dim = 0;
  std::size_t intervals = 0;
  std::size_t infinite = 0;
  double mean_persistence = 0;
  double max_persistence = 0;
};

struct Comparison {
  ChainFiltration weight_filtration;
  ChainFiltration metric_filtration;
  Barcode weight_barcode;
  Barcode metric_barcode;
  std::vector<DegreeStats> weight_stats;
  std::vector<DegreeStats> metric_stats;
  std::vector<std::string> warnings;
};

/// Per-degree interval counts and finite persistence, zero-length intervals excluded.
std::vector<DegreeStats> barcode_stats(const Barcode& b, int max_degree);

/// Descending weight filtration against Vietoris-Rips on the shortest-path
/// metric. Default epsilons: every distinct pairwise distance, or 0 when
/// there is a single point.
Comparison compare_filtrations(const EdgeList& edges, const std::optional<std::vector<Decimal>>& epsilons,
                               const std::optional<std::vector<Decimal>>& thresholds, int max_degree,
                               FieldConfig field);

}  // namespace ppers
