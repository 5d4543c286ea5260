#include "ppers/random.hpp"

#include "ppers/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace ppers {

std::size_t uniform_index(Rng& rng, std::size_t n) {
  if (n == 0) throw Error("uniform_index over an empty range");
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

std::vector<std::size_t> permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  shuffle(rng, p);
  return p;
}

}  // namespace

Poset random_poset(Rng& rng, std::size_t n, double density) {
  const auto perm = permutation(rng, n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, density)) pairs.emplace_back(perm[i], perm[j]);
  return Poset(Preorder::closure(numbered("p", n), pairs));
}

Preorder random_preorder(Rng& rng, std::size_t n, double density) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng, density)) pairs.emplace_back(i, j);
  return Preorder::closure(numbered("p", n), pairs);
}

SimplicialComplex random_complex(Rng& rng, std::size_t max_vertices, int max_dim) {
  const std::size_t n = 1 + uniform_index(rng, max_vertices);
  const std::size_t count = 1 + uniform_index(rng, n + 2);
  std::vector<Simplex> faces;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t size = 1 + uniform_index(rng, std::min(static_cast<std::size_t>(max_dim) + 1, n));
    auto perm = permutation(rng, n);
    perm.resize(size);
    faces.push_back(perm);
  }
  return SimplicialComplex::from_faces(numbered("v", n), faces);
}

PWeightedGraph random_weighted_graph(Rng& rng, const Poset& p, std::size_t max_vertices) {
  if (p.empty()) return PWeightedGraph({}, p, {}, {});
  const std::size_t n = uniform_index(rng, max_vertices + 1);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_weight;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) {
        edges.emplace_back(i, j);
        edge_weight.push_back(uniform_index(rng, p.size()));
      }
  const auto minimal = p.minimal_elements();
  std::vector<std::size_t> vertex_weight(n);
  std::vector<bool> keep(edges.size(), true);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> bounds;
    for (std::size_t c = 0; c < p.size(); ++c) {
      bool below = true;
      for (std::size_t e = 0; e < edges.size() && below; ++e)
        if (edges[e].first == x || edges[e].second == x) below = p.leq(c, edge_weight[e]);
      if (below) bounds.push_back(c);
    }
    if (!bounds.empty()) {
      vertex_weight[x] = bounds[uniform_index(rng, bounds.size())];
      continue;
    }
    vertex_weight[x] = minimal[uniform_index(rng, minimal.size())];
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((edges[e].first == x || edges[e].second == x) && !p.leq(vertex_weight[x], edge_weight[e])) keep[e] = false;
  }
  // Edges were generated in sorted order, which the graph keeps.
  std::vector<ReflexiveGraph::Edge> kept_edges;
  std::vector<std::size_t> ew;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (keep[e]) {
      kept_edges.push_back(edges[e]);
      ew.push_back(edge_weight[e]);
    }
  ReflexiveGraph g(numbered("x", n), kept_edges);
  return PWeightedGraph(std::move(g), p, std::move(vertex_weight), std::move(ew));
}

QuotientFunctor random_quotient_functor(Rng& rng, const PWeightedGraph& w) {
  const Poset& p = w.poset();
  const PersistentGraph base = phi(w);
  const ReflexiveGraph& g = w.graph();
  // Partition of the vertices of g per level, as union-find parents; only
  // vertices present at the level matter.
  std::vector<std::vector<std::size_t>> parent(p.size(), std::vector<std::size_t>(g.vertex_count()));
  auto find = [](std::vector<std::size_t>& par, std::size_t x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  };
  auto unite = [&](std::vector<std::size_t>& par, std::size_t a, std::size_t b) {
    a = find(par, a);
    b = find(par, b);
    if (a != b) par[std::max(a, b)] = std::min(a, b);
  };
  QuotientFunctor out;
  std::vector<ReflexiveGraph> graphs(p.size());
  std::vector<std::vector<std::size_t>> class_index(p.size());  // vertex of g -> vertex of level graph
  out.q.resize(p.size());
  for (auto v : p.linear_extension()) {
    auto& par = parent[v];
    std::iota(par.begin(), par.end(), 0);
    std::vector<std::size_t> present;
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      if (p.leq(w.vertex_weight(x), v)) present.push_back(x);
    for (std::size_t u = 0; u < p.size(); ++u) {
      if (!p.less(u, v)) continue;
      for (std::size_t x = 0; x < g.vertex_count(); ++x)
        if (p.leq(w.vertex_weight(x), u)) unite(par, x, find(parent[u], x));
    }
    if (present.size() >= 2) {
      const std::size_t merges = uniform_index(rng, 3);
      for (std::size_t k = 0; k < merges; ++k)
        unite(par, present[uniform_index(rng, present.size())], present[uniform_index(rng, present.size())]);
    }
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (auto x : present) classes[find(par, x)].push_back(x);
    std::vector<std::string> names;
    class_index[v].assign(g.vertex_count(), 0);
    for (const auto& [root, members] : classes) {
      std::string name;
      for (auto x : members) name += (name.empty() ? "" : "+") + g.vertices()[x];
      for (auto x : members) class_index[v][x] = names.size();
      names.push_back(name);
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!p.leq(w.edge_weight(e), v)) continue;
      auto a = class_index[v][g.edges()[e].first], b = class_index[v][g.edges()[e].second];
      if (a != b) edges.insert(std::minmax(a, b));
    }
    graphs[v] = ReflexiveGraph(names, std::vector<ReflexiveGraph::Edge>(edges.begin(), edges.end()));
    const ReflexiveGraph& level = base.graph_at(v);
    for (const auto& name : level.vertices()) out.q[v].push_back(class_index[v][*g.find_vertex(name)]);
  }
  PersistentGraph::CoverMaps maps;
  for (auto [u, v] : p.covers()) {
    GraphMorphism m;
    m.vertex_map.assign(graphs[u].vertex_count(), 0);
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      if (p.leq(w.vertex_weight(x), u)) m.vertex_map[class_index[u][x]] = class_index[v][x];
    maps[{u, v}] = std::move(m);
  }
  out.functor = PersistentGraph(p, std::move(graphs), std::move(maps));
  return out;
}

PersistentGraph shuffled_inclusion_functor(Rng& rng, const PWeightedGraph& w) {
  const PersistentGraph base = phi(w);
  std::vector<ReflexiveGraph> graphs;
  for (const auto& level : base.graphs()) {
    const auto perm = permutation(rng, level.vertex_count());  // new position -> old vertex
    std::vector<std::size_t> where(perm.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      where[perm[i]] = i;
      names.push_back(level.vertices()[perm[i]]);
    }
    std::vector<ReflexiveGraph::Edge> edges;
    for (auto [a, b] : level.edges()) edges.emplace_back(where[a], where[b]);
    graphs.emplace_back(std::move(names), std::move(edges));
  }
  return PersistentGraph::from_inclusions(base.poset(), std::move(graphs));
}

PersistentGraph random_inclusion_functor(Rng& rng, const Poset& p, std::size_t max_vertices) {
  const auto universe = numbered("y", max_vertices);
  std::vector<std::set<std::string>> vertices(p.size());
  std::vector<std::set<std::pair<std::string, std::string>>> edges(p.size());
  for (auto v : p.linear_extension()) {
    for (std::size_t u = 0; u < p.size(); ++u)
      if (p.less(u, v)) {
        vertices[v].insert(vertices[u].begin(), vertices[u].end());
        edges[v].insert(edges[u].begin(), edges[u].end());
      }
    for (const auto& name : universe)
      if (!vertices[v].count(name) && coin(rng, 0.3)) vertices[v].insert(name);
    for (auto a = vertices[v].begin(); a != vertices[v].end(); ++a)
      for (auto b = std::next(a); b != vertices[v].end(); ++b)
        if (!edges[v].count({*a, *b}) && coin(rng, 0.3)) edges[v].insert({*a, *b});
  }
  std::vector<ReflexiveGraph> graphs;
  for (std::size_t v = 0; v < p.size(); ++v)
    graphs.push_back(ReflexiveGraph::from_named_edges(
        std::vector<std::string>(vertices[v].begin(), vertices[v].end()),
        std::vector<std::pair<std::string, std::string>>(edges[v].begin(), edges[v].end())));
  return PersistentGraph::from_inclusions(p, std::move(graphs));
}

MetricData random_metric(Rng& rng, std::size_t n) {
  MetricData m;
  m.points = numbered("d", n);
  m.distance.assign(n * n, Decimal{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto tenths = static_cast<std::int64_t>(1 + uniform_index(rng, 100));
      const Decimal d = *Decimal::parse(std::to_string(tenths) + "e-1");
      m.distance[i * n + j] = m.distance[j * n + i] = d;
    }
  return m;
}

SpaceFiltration random_space_filtration(Rng& rng, std::size_t levels, std::size_t max_points) {
  if (levels == 0 || max_points == 0) throw Error("need at least one level and one point");
  const std::size_t n = 1 + uniform_index(rng, max_points);
  // Points join in a random order; relations join in a random order too.
  const auto arrival = permutation(rng, n);
  std::vector<std::size_t> count(levels);
  for (std::size_t a = 0; a < levels; ++a) count[a] = 1 + uniform_index(rng, n);
  std::sort(count.begin(), count.end());
  count.back() = n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng, 0.2)) pairs.emplace_back(i, j);
  shuffle(rng, pairs);
  std::vector<std::size_t> pair_count(levels);
  for (std::size_t a = 0; a < levels; ++a) pair_count[a] = uniform_index(rng, pairs.size() + 1);
  std::sort(pair_count.begin(), pair_count.end());

  SpaceFiltration tau;
  tau.levels = Poset::chain(numbered("t", levels));
  const auto names = numbered("s", n);
  std::vector<std::vector<std::size_t>> local(levels, std::vector<std::size_t>(n, n));
  for (std::size_t a = 0; a < levels; ++a) {
    const Preorder full = Preorder::closure(
        names, std::span<const std::pair<std::size_t, std::size_t>>(pairs.data(), pair_count[a]));
    std::vector<std::size_t> members(arrival.begin(), arrival.begin() + static_cast<std::ptrdiff_t>(count[a]));
    std::sort(members.begin(), members.end());
    std::vector<std::string> sub_names;
    std::vector<std::uint8_t> leq;
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[a][members[i]] = i;
      sub_names.push_back(names[members[i]]);
    }
    for (auto x : members)
      for (auto y : members) leq.push_back(full.leq(x, y));
    tau.spaces.emplace_back(std::move(sub_names), std::move(leq));
    if (a > 0) {
      std::vector<std::size_t> map;
      for (std::size_t x = 0; x < n; ++x)
        if (local[a - 1][x] != n) map.push_back(local[a][x]);
      // Members are listed in point order at both levels, so `map` follows level a-1's order.
      tau.cover_maps[{a - 1, a}] = std::move(map);
    }
  }
  return tau;
}

std::vector<Poset> all_posets(std::size_t n) {
  if (n > 6) throw Error("poset enumeration is limited to 6 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::size_t> perm(n);
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<Poset> out;
  const auto names = numbered("", n);
  // Every poset has a natural labeling, so upper-triangular relations cover all classes.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) leq[slots[s].first * n + slots[s].second] = 1;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (leq[i * n + j] && leq[j * n + k] && !leq[i * n + k]) transitive = false;
    if (!transitive) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> canonical = leq;
    do {
      std::vector<std::uint8_t> relabeled(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) relabeled[perm[i] * n + perm[j]] = leq[i * n + j];
      canonical = std::min(canonical, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canonical).second) out.emplace_back(names, leq);
  }
  return out;
}

std::vector<PWeightedGraph> exhaustive_weighted_graphs(const Poset& p, std::size_t max_vertices) {
  std::vector<PWeightedGraph> out;
  const std::size_t m = p.size();
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<ReflexiveGraph::Edge> all_edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
    for (std::uint64_t edge_mask = 0; edge_mask < (std::uint64_t{1} << all_edges.size()); ++edge_mask) {
      std::vector<ReflexiveGraph::Edge> edges;
      for (std::size_t e = 0; e < all_edges.size(); ++e)
        if (edge_mask >> e & 1) edges.push_back(all_edges[e]);
      const ReflexiveGraph g(names, edges);
      const std::size_t cells = g.cell_count();
      std::vector<std::size_t> weight(cells, 0);
      if (m == 0 && cells > 0) continue;
      // Odometer over all weightings; keep the monotone ones.
      while (true) {
        std::vector<std::size_t> vw(weight.begin(), weight.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<std::size_t> ew(weight.begin() + static_cast<std::ptrdiff_t>(n), weight.end());
        bool monotone = true;
        for (std::size_t e = 0; e < g.edge_count() && monotone; ++e)
          monotone = p.leq(vw[g.edges()[e].first], ew[e]) && p.leq(vw[g.edges()[e].second], ew[e]);
        if (monotone) out.emplace_back(g, p, std::move(vw), std::move(ew));
        std::size_t k = 0;
        while (k < cells && ++weight[k] == m) weight[k++] = 0;
        if (k == cells) break;
      }
    }
  }
  return out;
}

}  // namespace ppers
