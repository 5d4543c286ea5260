#include "ppers/pweighted.hpp"

#include "ppers/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ppers {

namespace {

Cell edge_cell(const ReflexiveGraph& g, std::size_t e) {
  auto [u, v] = g.edges()[e];
  auto [a, b] = std::minmax(g.vertices()[u], g.vertices()[v]);
  return {a, b};
}

std::vector<Cell> cells_of(const ReflexiveGraph& g) {
  std::vector<Cell> out;
  for (const auto& name : g.vertices()) out.push_back({name});
  for (std::size_t e = 0; e < g.edge_count(); ++e) out.push_back(edge_cell(g, e));
  return out;
}

}  // namespace

PWeightedGraph::PWeightedGraph(ReflexiveGraph graph, Poset poset, std::vector<std::size_t> vertex_weight,
                               std::vector<std::size_t> edge_weight)
    : graph_(std::move(graph)),
      poset_(std::move(poset)),
      vertex_weight_(std::move(vertex_weight)),
      edge_weight_(std::move(edge_weight)) {
  if (vertex_weight_.size() != graph_.vertex_count() || edge_weight_.size() != graph_.edge_count())
    throw Error("every vertex and edge needs exactly one weight");
  for (auto w : vertex_weight_)
    if (w >= poset_.size()) throw Error("vertex weight outside the poset");
  for (auto w : edge_weight_)
    if (w >= poset_.size()) throw Error("edge weight outside the poset");
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    auto [u, v] = graph_.edges()[e];
    for (auto x : {u, v})
      if (!poset_.leq(vertex_weight_[x], edge_weight_[e]))
        throw Error("weight is not monotone: vertex '" + graph_.vertices()[x] + "' weighs " +
                    poset_.name(vertex_weight_[x]) + ", not <= edge weight " + poset_.name(edge_weight_[e]));
  }
}

std::map<Cell, std::size_t> PWeightedGraph::weighted_cells() const {
  std::map<Cell, std::size_t> out;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) out[{graph_.vertices()[v]}] = vertex_weight_[v];
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) out[edge_cell(graph_, e)] = edge_weight_[e];
  return out;
}

bool same_weighted_graph(const PWeightedGraph& a, const PWeightedGraph& b) {
  return a.poset() == b.poset() && a.weighted_cells() == b.weighted_cells();
}

PersistentGraph::PersistentGraph(Poset poset, std::vector<ReflexiveGraph> graphs, CoverMaps cover_maps)
    : poset_(std::move(poset)), graphs_(std::move(graphs)), cover_maps_(std::move(cover_maps)) {
  if (graphs_.size() != poset_.size()) throw Error("need one graph per poset element");
  const auto covers = poset_.covers();
  for (const auto& [key, map] : cover_maps_) {
    if (std::find(covers.begin(), covers.end(), key) == covers.end())
      throw Error("structure map given on a non-cover pair");
  }
  for (const auto& key : covers) {
    auto it = cover_maps_.find(key);
    if (it == cover_maps_.end())
      throw Error("missing structure map " + poset_.name(key.first) + " -> " + poset_.name(key.second));
    if (!is_graph_morphism(graphs_[key.first], graphs_[key.second], it->second))
      throw Error("structure map " + poset_.name(key.first) + " -> " + poset_.name(key.second) +
                  " is not a graph morphism");
  }
  // Every cover path between two elements must compose to the same map.
  const auto order = poset_.linear_extension();
  const std::size_t n = poset_.size();
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::optional<GraphMorphism>> from_u(n);
    GraphMorphism id;
    id.vertex_map.resize(graphs_[u].vertex_count());
    std::iota(id.vertex_map.begin(), id.vertex_map.end(), 0);
    from_u[u] = id;
    for (auto w : order) {
      if (w == u || !poset_.leq(u, w)) continue;
      for (const auto& [key, map] : cover_maps_) {
        if (key.second != w || !from_u[key.first]) continue;
        GraphMorphism candidate = compose(map, *from_u[key.first]);
        if (!from_u[w]) {
          from_u[w] = std::move(candidate);
        } else if (*from_u[w] != candidate) {
          throw Error("structure maps do not commute between " + poset_.name(u) + " and " + poset_.name(w));
        }
      }
    }
  }
}

PersistentGraph PersistentGraph::from_inclusions(Poset poset, std::vector<ReflexiveGraph> graphs) {
  if (graphs.size() != poset.size()) throw Error("need one graph per poset element");
  CoverMaps maps;
  for (auto [u, v] : poset.covers()) {
    GraphMorphism m;
    for (const auto& name : graphs[u].vertices()) {
      auto target = graphs[v].find_vertex(name);
      if (!target)
        throw Error("vertex '" + name + "' at " + poset.name(u) + " is missing at " + poset.name(v));
      m.vertex_map.push_back(*target);
    }
    for (auto [a, b] : graphs[u].edges())
      if (!graphs[v].has_edge(m.vertex_map[a], m.vertex_map[b]))
        throw Error("edge " + graphs[u].vertices()[a] + " " + graphs[u].vertices()[b] + " at " + poset.name(u) +
                    " is missing at " + poset.name(v));
    maps.emplace(std::pair{u, v}, std::move(m));
  }
  return PersistentGraph(std::move(poset), std::move(graphs), std::move(maps));
}

GraphMorphism PersistentGraph::map_at(std::size_t u, std::size_t v) const {
  if (!poset_.leq(u, v)) throw Error("no structure map: " + poset_.name(u) + " is not <= " + poset_.name(v));
  GraphMorphism result;
  result.vertex_map.resize(graphs_.at(u).vertex_count());
  std::iota(result.vertex_map.begin(), result.vertex_map.end(), 0);
  std::size_t at = u;
  // Any cover step that stays below v extends to a maximal chain ending at v.
  while (at != v) {
    bool stepped = false;
    for (const auto& [key, map] : cover_maps_) {
      if (key.first == at && poset_.leq(key.second, v)) {
        result = compose(map, result);
        at = key.second;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error("broken cover path");
  }
  return result;
}

bool PersistentGraph::is_inclusion_functor() const {
  for (const auto& [key, map] : cover_maps_) {
    const auto& source = graphs_[key.first];
    const auto& target = graphs_[key.second];
    for (std::size_t x = 0; x < map.vertex_map.size(); ++x)
      if (target.vertices()[map.vertex_map[x]] != source.vertices()[x]) return false;
  }
  return true;
}

bool same_persistent_graph(const PersistentGraph& a, const PersistentGraph& b) {
  if (!(a.poset() == b.poset())) return false;
  for (std::size_t v = 0; v < a.poset().size(); ++v)
    if (!same_labeled_graph(a.graph_at(v), b.graph_at(v))) return false;
  for (const auto& [key, map] : a.cover_maps()) {
    const auto& other = b.cover_maps().at(key);
    const auto& sa = a.graph_at(key.first);
    const auto& ta = a.graph_at(key.second);
    const auto& sb = b.graph_at(key.first);
    const auto& tb = b.graph_at(key.second);
    for (std::size_t x = 0; x < sa.vertex_count(); ++x) {
      auto xb = *sb.find_vertex(sa.vertices()[x]);
      if (ta.vertices()[map.vertex_map[x]] != tb.vertices()[other.vertex_map[xb]]) return false;
    }
  }
  return true;
}

ReflexiveGraph sublevel_graph(const PWeightedGraph& w, std::size_t v) {
  if (v >= w.poset().size()) throw Error("element outside the poset");
  const auto& g = w.graph();
  std::vector<std::size_t> position(g.vertex_count(), g.vertex_count());
  std::vector<std::string> names;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    if (w.poset().leq(w.vertex_weight(x), v)) {
      position[x] = names.size();
      names.push_back(g.vertices()[x]);
    }
  }
  std::vector<ReflexiveGraph::Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!w.poset().leq(w.edge_weight(e), v)) continue;
    auto [a, b] = g.edges()[e];
    edges.emplace_back(position[a], position[b]);
  }
  return ReflexiveGraph(std::move(names), std::move(edges));
}

ReflexiveGraph sublevel_graph(const PWeightedGraph& w, const std::string& v) {
  return sublevel_graph(w, w.poset().index_of(v));
}

PersistentGraph phi(const PWeightedGraph& w) {
  std::vector<ReflexiveGraph> graphs;
  for (std::size_t v = 0; v < w.poset().size(); ++v) graphs.push_back(sublevel_graph(w, v));
  return PersistentGraph::from_inclusions(w.poset(), std::move(graphs));
}

TaggedUnion psi_tagged(const PersistentGraph& f) {
  const Poset& p = f.poset();
  TaggedUnion out;
  std::vector<std::string> names;
  std::vector<ReflexiveGraph::Edge> edges;
  std::vector<std::size_t> vertex_weight, edge_weight;
  for (std::size_t v = 0; v < p.size(); ++v) {
    const auto& g = f.graph_at(v);
    const std::size_t offset = names.size();
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      out.copy_of[{v, x}] = names.size();
      out.origin.emplace_back(v, x);
      names.push_back(g.vertices()[x] + "@" + p.name(v));
      vertex_weight.push_back(v);
    }
    for (auto [a, b] : g.edges()) {
      edges.emplace_back(offset + a, offset + b);
    }
  }
  ReflexiveGraph graph(std::move(names), std::move(edges));
  // Edge storage is re-sorted by the graph; weights follow the copy of the endpoints.
  for (auto [a, b] : graph.edges()) edge_weight.push_back(vertex_weight[a]);
  out.weighted = PWeightedGraph(std::move(graph), p, std::move(vertex_weight), std::move(edge_weight));
  return out;
}

PWeightedGraph psi(const PersistentGraph& f) { return psi_tagged(f).weighted; }

std::optional<CriticalValueTable> critical_values(const PersistentGraph& f) {
  if (!f.is_inclusion_functor()) throw Error("structure maps are not inclusions");
  const Poset& p = f.poset();
  std::map<Cell, std::vector<std::size_t>> present;
  for (std::size_t v = 0; v < p.size(); ++v)
    for (auto& c : cells_of(f.graph_at(v))) present[c].push_back(v);
  CriticalValueTable table;
  for (const auto& [cell, levels] : present) {
    std::optional<std::size_t> least;
    for (auto m : levels) {
      bool below_all = std::all_of(levels.begin(), levels.end(), [&](std::size_t s) { return p.leq(m, s); });
      if (below_all) least = m;
    }
    if (!least) return std::nullopt;
    table.birth[cell] = *least;
  }
  return table;
}

bool is_one_critical(const PersistentGraph& f) { return critical_values(f).has_value(); }

PWeightedGraph from_persistent(const PersistentGraph& f) {
  auto table = critical_values(f);
  if (!table) throw Error("functor is not one-critical");
  const Poset& p = f.poset();
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::string>> named_edges;
  std::set<Cell> seen_edges;
  for (auto v : p.linear_extension()) {
    const auto& g = f.graph_at(v);
    for (const auto& name : g.vertices())
      if (seen.insert(name).second) names.push_back(name);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      Cell c = edge_cell(g, e);
      if (seen_edges.insert(c).second) named_edges.emplace_back(c[0], c[1]);
    }
  }
  ReflexiveGraph graph = ReflexiveGraph::from_named_edges(names, named_edges);
  std::vector<std::size_t> vertex_weight, edge_weight;
  for (const auto& name : graph.vertices()) vertex_weight.push_back(table->birth.at({name}));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) edge_weight.push_back(table->birth.at(edge_cell(graph, e)));
  return PWeightedGraph(std::move(graph), p, std::move(vertex_weight), std::move(edge_weight));
}

PersistentGraph to_inclusion_functor(const PersistentGraph& f) {
  const Poset& p = f.poset();
  std::vector<std::size_t> offset(p.size() + 1, 0);
  for (std::size_t v = 0; v < p.size(); ++v) offset[v + 1] = offset[v] + f.graph_at(v).vertex_count();
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [key, map] : f.cover_maps())
    for (std::size_t x = 0; x < map.vertex_map.size(); ++x) {
      auto a = find(offset[key.first] + x), b = find(offset[key.second] + map.vertex_map[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  // Classes are named after their member at the earliest level of a linear extension.
  std::vector<std::size_t> rank_of(p.size());
  const auto order = p.linear_extension();
  for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = i;
  std::map<std::size_t, std::pair<std::pair<std::size_t, std::size_t>, std::string>> best;
  for (std::size_t v = 0; v < p.size(); ++v) {
    std::set<std::size_t> classes_here;
    for (std::size_t x = 0; x < f.graph_at(v).vertex_count(); ++x) {
      auto c = find(offset[v] + x);
      if (!classes_here.insert(c).second)
        throw Error("structure maps into " + p.name(v) + " are not injective");
      std::pair<std::size_t, std::size_t> key{rank_of[v], x};
      auto it = best.find(c);
      if (it == best.end() || key < it->second.first) best[c] = {key, f.graph_at(v).vertices()[x]};
    }
  }
  std::map<std::size_t, std::string> name_of;
  std::map<std::string, std::size_t> used;
  for (const auto& [c, entry] : best) {
    std::string name = entry.second;
    if (auto count = used[name]++) name += "~" + std::to_string(count);
    name_of[c] = name;
  }
  std::vector<ReflexiveGraph> graphs;
  for (std::size_t v = 0; v < p.size(); ++v) {
    std::vector<std::string> names;
    for (std::size_t x = 0; x < f.graph_at(v).vertex_count(); ++x) names.push_back(name_of.at(find(offset[v] + x)));
    graphs.emplace_back(std::move(names), f.graph_at(v).edges());
  }
  return PersistentGraph::from_inclusions(p, std::move(graphs));
}

}  // namespace ppers
