#include "ppers/persistence.hpp"

#include "ppers/error.hpp"
#include "ppers/homology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

namespace ppers {

namespace {

bool before(Direction dir, const Decimal& a, const Decimal& b) {
  return dir == Direction::ascending ? a < b : b < a;
}

Simplex without(const Simplex& s, std::size_t i) {
  Simplex out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != i) out.push_back(s[k]);
  return out;
}

int capped(int max_degree) { return max_degree >= kUnboundedDim - 1 ? kUnboundedDim : max_degree + 1; }

/// Restricts `s` to the faces accepted by `keep`, dropping vertices that fail.
template <class Keep>
SimplicialComplex sub_complex(const SimplicialComplex& s, Keep keep) {
  std::vector<std::size_t> position(s.vertex_count(), s.vertex_count());
  std::vector<std::string> names;
  for (std::size_t v = 0; v < s.vertex_count(); ++v)
    if (keep(0, v)) {
      position[v] = names.size();
      names.push_back(s.vertices()[v]);
    }
  std::vector<Simplex> faces;
  for (int d = 1; d <= s.dimension(); ++d) {
    const auto& list = s.faces(d);
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!keep(d, i)) continue;
      Simplex f;
      for (auto v : list[i]) f.push_back(position[v]);
      faces.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_faces(std::move(names), faces);
}

}  // namespace

ChainFiltration::ChainFiltration(SimplicialComplex complex, std::vector<std::vector<std::size_t>> birth,
                                 std::vector<Decimal> grades, std::vector<std::string> labels, Direction direction)
    : complex_(std::move(complex)),
      birth_(std::move(birth)),
      grades_(std::move(grades)),
      labels_(std::move(labels)),
      direction_(direction) {
  if (labels_.size() != grades_.size()) throw Error("one label per threshold");
  for (std::size_t i = 1; i < grades_.size(); ++i)
    if (!before(direction_, grades_[i - 1], grades_[i])) throw Error("thresholds must be strictly monotone");
  if (birth_.size() != static_cast<std::size_t>(complex_.dimension() + 1)) throw Error("births per dimension missing");
  for (int d = 0; d <= complex_.dimension(); ++d) {
    const auto& faces = complex_.faces(d);
    const auto& b = birth_[static_cast<std::size_t>(d)];
    if (b.size() != faces.size()) throw Error("one birth per face");
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (b[i] >= grades_.size()) throw Error("birth outside the thresholds");
      if (d == 0) continue;
      for (std::size_t k = 0; k < faces[i].size(); ++k)
        if (birth_[static_cast<std::size_t>(d - 1)][*complex_.index_of(without(faces[i], k))] > b[i])
          throw Error("a face is born before one of its facets");
    }
  }
}

SimplicialComplex ChainFiltration::complex_at(std::size_t i) const {
  return sub_complex(complex_, [&](int d, std::size_t f) { return birth_[static_cast<std::size_t>(d)][f] <= i; });
}

std::optional<std::size_t> ChainFiltration::threshold_at(const Decimal& grade) const {
  std::optional<std::size_t> out;
  for (std::size_t i = 0; i < grades_.size() && !before(direction_, grade, grades_[i]); ++i) out = i;
  return out;
}

SimplicialComplex ChainFiltration::complex_at_value(const Decimal& grade) const {
  auto i = threshold_at(grade);
  return i ? complex_at(*i) : SimplicialComplex{};
}

ChainFiltration with_thresholds(const ChainFiltration& f, const std::vector<Decimal>& grades) {
  const Direction dir = f.direction();
  for (std::size_t i = 1; i < grades.size(); ++i)
    if (!before(dir, grades[i - 1], grades[i])) throw Error("thresholds must be strictly monotone");
  // Old threshold index -> first new threshold not before it.
  std::vector<std::optional<std::size_t>> target(f.threshold_count());
  for (std::size_t t = 0; t < f.threshold_count(); ++t)
    for (std::size_t j = 0; j < grades.size(); ++j)
      if (!before(dir, grades[j], f.grades()[t])) {
        target[t] = j;
        break;
      }
  const SimplicialComplex& s = f.complex();
  SimplicialComplex kept =
      sub_complex(s, [&](int d, std::size_t i) { return target[f.birth(d, i)].has_value(); });
  std::vector<std::vector<std::size_t>> birth(static_cast<std::size_t>(kept.dimension() + 1));
  for (int d = 0; d <= kept.dimension(); ++d)
    for (const auto& face : kept.faces(d)) {
      Simplex original;
      for (auto v : face) original.push_back(*s.find_vertex(kept.vertices()[v]));
      birth[static_cast<std::size_t>(d)].push_back(*target[f.birth(d, *s.index_of(original))]);
    }
  std::vector<std::string> labels;
  for (const auto& g : grades) labels.push_back(g.to_string());
  return ChainFiltration(std::move(kept), std::move(birth), grades, std::move(labels), dir);
}

std::size_t Barcode::alive_at(int dim, std::size_t i) const { return alive_over(dim, i, i); }

std::size_t Barcode::alive_over(int dim, std::size_t i, std::size_t j) const {
  return static_cast<std::size_t>(std::count_if(intervals.begin(), intervals.end(), [&](const Interval& x) {
    return x.dim == dim && x.birth <= i && (!x.death || *x.death > j);
  }));
}

Barcode Barcode::reported() const {
  Barcode out;
  for (const auto& x : intervals)
    if (!x.zero_length()) out.intervals.push_back(x);
  return out;
}

bool same_intervals(const Barcode& a, const Barcode& b) {
  auto key = [](const Barcode& bc) {
    std::vector<std::tuple<int, Decimal, bool, Decimal>> out;
    for (const auto& x : bc.intervals)
      out.emplace_back(x.dim, x.birth_grade, !x.death_grade, x.death_grade.value_or(Decimal{}));
    std::sort(out.begin(), out.end());
    return out;
  };
  return key(a) == key(b);
}

std::vector<Decimal> chain_grades(const Poset& chain) {
  const auto order = chain.linear_extension();
  std::vector<Decimal> out(chain.size());
  bool numeric = true;
  std::optional<Decimal> last;
  for (auto e : order) {
    auto value = Decimal::parse(chain.name(e));
    if (!value || (last && !(*last < *value))) {
      numeric = false;
      break;
    }
    out[e] = *value;
    last = value;
  }
  if (!numeric)
    for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = Decimal(static_cast<std::int64_t>(i));
  return out;
}

ChainFiltration weight_filtration(const PWeightedGraph& w, Direction direction, int max_degree) {
  const Poset& p = w.poset();
  if (!p.is_chain()) throw Error("weights do not form a chain; use the rank invariant for general posets");
  if (max_degree < 0) throw Error("max degree must be non-negative");
  const auto order = p.linear_extension();
  const std::size_t n = p.size();
  std::vector<std::size_t> step(n);
  for (std::size_t i = 0; i < n; ++i) step[order[i]] = direction == Direction::ascending ? i : n - 1 - i;

  const ReflexiveGraph& g = w.graph();
  std::vector<std::size_t> vertex_step(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertex_step[v] = step[w.vertex_weight(v)];
  if (direction == Direction::descending) {
    std::vector<bool> touched(g.vertex_count(), false);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      for (auto v : {g.edges()[e].first, g.edges()[e].second}) {
        const auto s = step[w.edge_weight(e)];
        vertex_step[v] = touched[v] ? std::min(vertex_step[v], s) : s;
        touched[v] = true;
      }
  }

  const SimplicialComplex s = clique_complex(g, capped(max_degree));
  std::vector<std::vector<std::size_t>> raw(static_cast<std::size_t>(s.dimension() + 1));
  std::set<std::size_t> used;
  for (int d = 0; d <= s.dimension(); ++d)
    for (const auto& face : s.faces(d)) {
      std::size_t b = 0;
      for (auto v : face) b = std::max(b, vertex_step[v]);
      for (std::size_t i = 0; i < face.size(); ++i)
        for (std::size_t j = i + 1; j < face.size(); ++j)
          b = std::max(b, step[w.edge_weight(*g.edge_index(face[i], face[j]))]);
      raw[static_cast<std::size_t>(d)].push_back(b);
      used.insert(b);
    }

  const std::vector<Decimal> element_grade = chain_grades(p);
  std::vector<std::size_t> index_of_step(n, 0);
  std::vector<Decimal> grades;
  std::vector<std::string> labels;
  for (auto st : used) {
    index_of_step[st] = grades.size();
    const std::size_t element = order[direction == Direction::ascending ? st : n - 1 - st];
    grades.push_back(element_grade[element]);
    labels.push_back(p.name(element));
  }
  for (auto& level : raw)
    for (auto& b : level) b = index_of_step[b];
  return ChainFiltration(s, std::move(raw), std::move(grades), std::move(labels), direction);
}

void validate(const MetricData& m) {
  const std::size_t n = m.points.size();
  if (m.distance.size() != n * n) throw Error("distance matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (m.d(i, i) != Decimal{}) throw Error("distance matrix needs a zero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (m.d(i, j) < Decimal{}) throw Error("negative distance");
      if (m.d(i, j) != m.d(j, i)) throw Error("distance matrix is not symmetric");
    }
  }
}

ChainFiltration vietoris_rips(const MetricData& m, const std::vector<Decimal>& epsilons, int max_degree) {
  validate(m);
  if (max_degree < 0) throw Error("max degree must be non-negative");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (epsilons[i] < Decimal{}) throw Error("epsilons must be non-negative");
    if (i && !(epsilons[i - 1] < epsilons[i])) throw Error("epsilons must be strictly increasing");
  }
  std::vector<std::string> labels;
  for (const auto& e : epsilons) labels.push_back(e.to_string());
  if (epsilons.empty()) {
    if (!m.points.empty()) throw Error("need at least one epsilon");
    return ChainFiltration({}, {}, {}, {}, Direction::ascending);
  }
  const std::size_t n = m.points.size();
  std::vector<ReflexiveGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.d(i, j) <= epsilons.back()) edges.emplace_back(i, j);
  const ReflexiveGraph g(m.points, edges);
  const SimplicialComplex s = clique_complex(g, capped(max_degree));
  auto enters = [&](const Decimal& d) {
    return static_cast<std::size_t>(std::lower_bound(epsilons.begin(), epsilons.end(), d) - epsilons.begin());
  };
  std::vector<std::vector<std::size_t>> birth(static_cast<std::size_t>(s.dimension() + 1));
  for (int d = 0; d <= s.dimension(); ++d)
    for (const auto& face : s.faces(d)) {
      std::size_t b = 0;
      for (std::size_t i = 0; i < face.size(); ++i)
        for (std::size_t j = i + 1; j < face.size(); ++j) b = std::max(b, enters(m.d(face[i], face[j])));
      birth[static_cast<std::size_t>(d)].push_back(b);
    }
  return ChainFiltration(s, std::move(birth), epsilons, std::move(labels), Direction::ascending);
}

PWeightedGraph distance_weighted_graph(const MetricData& m) {
  validate(m);
  const std::size_t n = m.points.size();
  std::set<Decimal> values;
  if (n) values.insert(Decimal{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) values.insert(m.d(i, j));
  std::vector<Decimal> sorted(values.begin(), values.end());
  std::vector<std::string> names;
  for (const auto& v : sorted) names.push_back(v.to_string());
  auto index = [&](const Decimal& v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };
  std::vector<ReflexiveGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  ReflexiveGraph g(m.points, edges);
  std::vector<std::size_t> edge_weight;
  for (auto [i, j] : g.edges()) edge_weight.push_back(index(m.d(i, j)));
  return PWeightedGraph(std::move(g), Poset::chain(names), std::vector<std::size_t>(n, 0), std::move(edge_weight));
}

void validate(const SpaceFiltration& tau) {
  const Poset& p = tau.levels;
  if (tau.spaces.size() != p.size()) throw Error("need one space per level");
  const auto covers = p.covers();
  for (const auto& [key, map] : tau.cover_maps)
    if (std::find(covers.begin(), covers.end(), key) == covers.end())
      throw Error("point map given on a non-cover pair");
  for (const auto& key : covers) {
    auto it = tau.cover_maps.find(key);
    if (it == tau.cover_maps.end()) throw Error("missing point map on a cover pair");
    const auto& map = it->second;
    const Preorder& a = tau.spaces[key.first];
    const Preorder& b = tau.spaces[key.second];
    if (map.size() != a.size()) throw Error("point map is not total");
    std::set<std::size_t> image;
    for (auto y : map) {
      if (y >= b.size()) throw Error("point map leaves the target space");
      if (!image.insert(y).second)
        throw Error("point map " + p.name(key.first) + " -> " + p.name(key.second) + " is not injective");
    }
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y)
        if (a.leq(x, y) && !b.leq(map[x], map[y])) throw Error("point map is not continuous");
  }
  for (std::size_t u = 0; u < p.size(); ++u) {
    std::vector<std::optional<std::vector<std::size_t>>> from_u(p.size());
    std::vector<std::size_t> id(tau.spaces[u].size());
    std::iota(id.begin(), id.end(), 0);
    from_u[u] = id;
    for (auto w : p.linear_extension()) {
      if (w == u || !p.leq(u, w)) continue;
      for (const auto& [key, map] : tau.cover_maps) {
        if (key.second != w || !from_u[key.first]) continue;
        std::vector<std::size_t> composite;
        for (auto x : *from_u[key.first]) composite.push_back(map[x]);
        if (!from_u[w])
          from_u[w] = std::move(composite);
        else if (*from_u[w] != composite)
          throw Error("point maps do not commute");
      }
    }
  }
}

std::vector<std::size_t> space_map(const SpaceFiltration& tau, std::size_t u, std::size_t v) {
  const Poset& p = tau.levels;
  if (!p.leq(u, v)) throw Error("levels are not comparable");
  std::vector<std::size_t> out(tau.spaces.at(u).size());
  std::iota(out.begin(), out.end(), 0);
  for (std::size_t at = u; at != v;) {
    bool stepped = false;
    for (const auto& [key, map] : tau.cover_maps)
      if (key.first == at && p.leq(key.second, v)) {
        for (auto& x : out) x = map[x];
        at = key.second;
        stepped = true;
        break;
      }
    if (!stepped) throw Error("broken cover path");
  }
  return out;
}

namespace {

/// Quotient class at u -> quotient class at v along tau(u <= v).
std::vector<std::size_t> class_map(const SpaceFiltration& tau, const std::vector<KolmogorovQuotient>& q,
                                   std::size_t u, std::size_t v) {
  const auto points = space_map(tau, u, v);
  std::vector<std::size_t> out(q[u].poset.size());
  for (std::size_t x = 0; x < points.size(); ++x) out[q[u].assignment[x]] = q[v].assignment[points[x]];
  return out;
}

}  // namespace

PersistentGraph space_filtration_to_graph(const SpaceFiltration& tau) {
  validate(tau);
  std::vector<KolmogorovQuotient> q;
  std::vector<ReflexiveGraph> graphs;
  for (const auto& space : tau.spaces) {
    q.push_back(kolmogorov_quotient(space));
    graphs.push_back(one_skeleton(order_complex(q.back().poset)));
  }
  PersistentGraph::CoverMaps maps;
  for (auto [u, v] : tau.levels.covers()) maps[{u, v}] = GraphMorphism{class_map(tau, q, u, v)};
  return PersistentGraph(tau.levels, std::move(graphs), std::move(maps));
}

std::optional<std::size_t> RankInvariant::at(int dim, std::size_t u, std::size_t v) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), RankEntry{dim, u, v, 0},
                             [](const RankEntry& a, const RankEntry& b) {
                               return std::tie(a.dim, a.u, a.v) < std::tie(b.dim, b.u, b.v);
                             });
  if (it == entries.end() || it->dim != dim || it->u != u || it->v != v) return std::nullopt;
  return it->rank;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> comparable_pairs(
    const Poset& p, const std::vector<std::pair<std::size_t, std::size_t>>* pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (pairs) {
    for (auto [u, v] : *pairs) {
      if (u >= p.size() || v >= p.size() || !p.leq(u, v)) throw Error("rank pair is not comparable");
      out.emplace_back(u, v);
    }
  } else {
    for (std::size_t u = 0; u < p.size(); ++u)
      for (std::size_t v = 0; v < p.size(); ++v)
        if (p.leq(u, v)) out.emplace_back(u, v);
  }
  return out;
}

void sort_entries(std::vector<RankEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const RankEntry& a, const RankEntry& b) {
    return std::tie(a.dim, a.u, a.v) < std::tie(b.dim, b.u, b.v);
  });
}

}  // namespace

RankInvariant rank_invariant(const PersistentGraph& f, int max_degree, FieldConfig field,
                             const std::vector<std::pair<std::size_t, std::size_t>>* pairs) {
  if (max_degree < 0) throw Error("max degree must be non-negative");
  const Poset& p = f.poset();
  std::vector<SimplicialComplex> cl;
  for (std::size_t v = 0; v < p.size(); ++v) cl.push_back(clique_complex(f.graph_at(v), capped(max_degree)));
  RankInvariant out{p, {}};
  for (auto [u, v] : comparable_pairs(p, pairs)) {
    const SimplicialMap m = induced_clique_map(cl[u], cl[v], f.map_at(u, v));
    for (int n = 0; n <= max_degree; ++n) out.entries.push_back({n, u, v, induced_map_on_homology(m, n, field).rank});
  }
  sort_entries(out.entries);
  return out;
}

RankInvariant order_complex_rank_invariant(const SpaceFiltration& tau, int max_degree, FieldConfig field) {
  validate(tau);
  if (max_degree < 0) throw Error("max degree must be non-negative");
  const Poset& p = tau.levels;
  std::vector<KolmogorovQuotient> q;
  for (const auto& space : tau.spaces) q.push_back(kolmogorov_quotient(space));
  RankInvariant out{p, {}};
  for (auto [u, v] : comparable_pairs(p, nullptr)) {
    const SimplicialMap m = induced_order_map(MonotoneMap{q[u].poset, q[v].poset, class_map(tau, q, u, v)});
    for (int n = 0; n <= max_degree; ++n) out.entries.push_back({n, u, v, induced_map_on_homology(m, n, field).rank});
  }
  sort_entries(out.entries);
  return out;
}

Barcode barcode(const ChainFiltration& f, int max_degree, FieldConfig field) {
  if (max_degree < 0) throw Error("max degree must be non-negative");
  const SimplicialComplex& s = f.complex();
  const int top = std::min(capped(max_degree), s.dimension());
  Barcode out;
  if (top < 0) return out;
  const auto dims = static_cast<std::size_t>(top + 1);

  // Filtration order within each dimension: birth, then the lexicographic face order.
  std::vector<std::vector<std::size_t>> order(dims), position(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const std::size_t count = s.faces(static_cast<int>(d)).size();
    order[d].resize(count);
    std::iota(order[d].begin(), order[d].end(), 0);
    std::stable_sort(order[d].begin(), order[d].end(), [&](std::size_t a, std::size_t b) {
      return f.birth(static_cast<int>(d), a) < f.birth(static_cast<int>(d), b);
    });
    position[d].resize(count);
    for (std::size_t k = 0; k < count; ++k) position[d][order[d][k]] = k;
  }

  // killed[d][k]: the k-th d-cell is the pivot of some (d+1)-column.
  std::vector<std::vector<bool>> killed(dims), negative(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    killed[d].assign(order[d].size(), false);
    negative[d].assign(order[d].size(), false);
  }
  auto birth_of = [&](std::size_t d, std::size_t k) { return f.birth(static_cast<int>(d), order[d][k]); };
  auto add = [&](int dim, std::size_t b, std::optional<std::size_t> death) {
    Interval x{dim, b, death, f.grades()[b], std::nullopt};
    if (death) x.death_grade = f.grades()[*death];
    out.intervals.push_back(x);
  };

  for (std::size_t d = dims - 1; d >= 1; --d) {
    const auto& faces = s.faces(static_cast<int>(d));
    ColumnMatrix m(order[d - 1].size(), order[d].size(), field);
    for (std::size_t k = 0; k < order[d].size(); ++k) {
      const Simplex& face = faces[order[d][k]];
      for (std::size_t i = 0; i < face.size(); ++i)
        m.set(position[d - 1][*s.index_of(without(face, i))], k, field.from_int(i % 2 ? -1 : 1));
    }
    // Clearing: a column that is itself a pivot row one dimension up is a cycle.
    const Reduction red = reduce_columns(m, nullptr, &killed[d]);
    for (std::size_t k = 0; k < order[d].size(); ++k) {
      if (auto low = red.low[k]) {
        negative[d][k] = true;
        killed[d - 1][*low] = true;
        if (static_cast<int>(d) - 1 <= max_degree) add(static_cast<int>(d) - 1, birth_of(d - 1, *low), birth_of(d, k));
      }
    }
  }
  for (std::size_t d = 0; d < dims && static_cast<int>(d) <= max_degree; ++d)
    for (std::size_t k = 0; k < order[d].size(); ++k)
      if (!negative[d][k] && !killed[d][k]) add(static_cast<int>(d), birth_of(d, k), std::nullopt);

  std::stable_sort(out.intervals.begin(), out.intervals.end(), [](const Interval& a, const Interval& b) {
    const std::size_t inf = static_cast<std::size_t>(-1);
    return std::tuple(a.dim, a.birth, a.death.value_or(inf)) < std::tuple(b.dim, b.birth, b.death.value_or(inf));
  });
  return out;
}

PWeightedGraph network_graph(const EdgeList& edges, Direction direction) {
  std::set<Decimal> values;
  for (const auto& row : edges.edges) values.insert(row.w);
  if (values.empty() && !edges.vertices.empty()) values.insert(Decimal{});
  const std::vector<Decimal> sorted(values.begin(), values.end());
  std::vector<std::string> names;
  for (const auto& v : sorted) names.push_back(v.to_string());
  auto index = [&](const Decimal& v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& row : edges.edges) named.emplace_back(row.u, row.v);
  ReflexiveGraph g = ReflexiveGraph::from_named_edges(edges.vertices, named);

  const std::size_t isolated = direction == Direction::ascending || sorted.empty() ? 0 : sorted.size() - 1;
  std::vector<std::optional<std::size_t>> vertex_weight(g.vertex_count());
  std::vector<std::size_t> edge_weight(g.edge_count());
  for (const auto& row : edges.edges) {
    const auto a = *g.find_vertex(row.u), b = *g.find_vertex(row.v);
    const auto w = index(row.w);
    edge_weight[*g.edge_index(a, b)] = w;
    for (auto x : {a, b}) vertex_weight[x] = vertex_weight[x] ? std::min(*vertex_weight[x], w) : w;
  }
  std::vector<std::size_t> vw;
  for (const auto& w : vertex_weight) vw.push_back(w.value_or(isolated));
  return PWeightedGraph(std::move(g), Poset::chain(names), std::move(vw), std::move(edge_weight));
}

MetricData shortest_path_metric(const EdgeList& edges, std::vector<std::string>* warnings) {
  const std::size_t n = edges.vertices.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[edges.vertices[i]] = i;
  std::vector<std::vector<std::pair<std::size_t, Decimal>>> adj(n);
  for (const auto& row : edges.edges) {
    if (row.w < Decimal{}) throw Error("negative edge weight cannot serve as a path length");
    const auto a = index.at(row.u), b = index.at(row.v);
    adj[a].emplace_back(b, row.w);
    adj[b].emplace_back(a, row.w);
  }
  // Components by traversal; keep the largest, earliest on ties.
  std::vector<std::size_t> component(n, n);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] != n) continue;
    members.emplace_back();
    std::vector<std::size_t> stack{s};
    component[s] = members.size() - 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      members.back().push_back(x);
      for (auto [y, w] : adj[x])
        if (component[y] == n) {
          component[y] = members.size() - 1;
          stack.push_back(y);
        }
    }
  }
  std::vector<std::size_t> keep;
  for (const auto& c : members)
    if (c.size() > keep.size()) keep = c;
  std::sort(keep.begin(), keep.end());
  if (members.size() > 1 && warnings)
    warnings->push_back("network is disconnected; metric branch uses the largest component (" +
                        std::to_string(keep.size()) + " of " + std::to_string(n) + " vertices)");

  MetricData m;
  const std::size_t k = keep.size();
  std::vector<std::size_t> local(n, k);
  for (std::size_t i = 0; i < k; ++i) {
    local[keep[i]] = i;
    m.points.push_back(edges.vertices[keep[i]]);
  }
  m.distance.assign(k * k, Decimal{});
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<std::optional<Decimal>> dist(k);
    std::vector<bool> done(k, false);
    dist[s] = Decimal{};
    for (std::size_t round = 0; round < k; ++round) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < k; ++i)
        if (!done[i] && dist[i] && (!best || *dist[i] < *dist[*best])) best = i;
      if (!best) break;
      done[*best] = true;
      for (auto [y, w] : adj[keep[*best]]) {
        const auto ly = local[y];
        const Decimal candidate = *dist[*best] + w;
        if (!dist[ly] || candidate < *dist[ly]) dist[ly] = candidate;
      }
    }
    for (std::size_t i = 0; i < k; ++i) m.distance[s * k + i] = *dist[i];
  }
  return m;
}

std::vector<DegreeStats> barcode_stats(const Barcode& b, int max_degree) {
  std::vector<DegreeStats> out;
  for (int d = 0; d <= max_degree; ++d) {
    DegreeStats st;
    st.dim = d;
    double total = 0;
    std::size_t finite = 0;
    for (const auto& x : b.intervals) {
      if (x.dim != d || x.zero_length()) continue;
      ++st.intervals;
      if (!x.death_grade) {
        ++st.infinite;
        continue;
      }
      const double length = std::fabs((*x.death_grade - x.birth_grade).to_double());
      total += length;
      ++finite;
      st.max_persistence = std::max(st.max_persistence, length);
    }
    st.mean_persistence = finite ? total / static_cast<double>(finite) : 0.0;
    out.push_back(st);
  }
  return out;
}

Comparison compare_filtrations(const EdgeList& edges, const std::optional<std::vector<Decimal>>& epsilons,
                               const std::optional<std::vector<Decimal>>& thresholds, int max_degree,
                               FieldConfig field) {
  Comparison out;
  out.weight_filtration = weight_filtration(network_graph(edges, Direction::descending), Direction::descending, max_degree);
  if (thresholds) out.weight_filtration = with_thresholds(out.weight_filtration, *thresholds);

  const MetricData metric = shortest_path_metric(edges, &out.warnings);
  std::vector<Decimal> eps;
  if (epsilons) {
    eps = *epsilons;
  } else {
    std::set<Decimal> values;
    const std::size_t n = metric.points.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) values.insert(metric.d(i, j));
    if (values.empty() && n) values.insert(Decimal{});
    eps.assign(values.begin(), values.end());
  }
  out.metric_filtration = vietoris_rips(metric, eps, max_degree);
  out.weight_barcode = barcode(out.weight_filtration, max_degree, field);
  out.metric_barcode = barcode(out.metric_filtration, max_degree, field);
  out.weight_stats = barcode_stats(out.weight_barcode, max_degree);
  out.metric_stats = barcode_stats(out.metric_barcode, max_degree);
  return out;
}

}  // namespace ppers
