#include "ppers/complex.hpp"

#include "ppers/error.hpp"
#include "ppers/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ppers {

namespace {

const std::vector<Simplex>& empty_faces() {
  static const std::vector<Simplex> none;
  return none;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void check_unique_names(const std::vector<std::string>& names) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw Error("duplicate vertex '" + *dup + "'");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertices,
                                                const std::vector<Simplex>& faces) {
  check_unique_names(vertices);
  const std::size_t n = vertices.size();
  std::vector<std::set<Simplex>> levels;
  auto insert = [&](const Simplex& s) {
    const std::size_t d = s.size() - 1;
    if (levels.size() <= d) levels.resize(d + 1);
    levels[d].insert(s);
  };
  for (std::size_t v = 0; v < n; ++v) insert({v});
  for (Simplex face : faces) {
    if (face.empty()) throw Error("empty face");
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    for (auto v : face)
      if (v >= n) throw Error("face refers to an unknown vertex");
    if (face.size() > 24) throw Error("face too large to close downward");
    if (levels.size() >= face.size() && levels[face.size() - 1].count(face)) continue;
    const std::uint32_t subsets = std::uint32_t{1} << face.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < face.size(); ++i)
        if (mask >> i & 1) sub.push_back(face[i]);
      insert(sub);
    }
  }
  SimplicialComplex out;
  out.vertices_ = std::move(vertices);
  if (n == 0) return out;
  for (auto& level : levels) out.faces_.emplace_back(level.begin(), level.end());
  return out;
}

SimplicialComplex SimplicialComplex::from_named_faces(const std::vector<std::vector<std::string>>& faces) {
  std::vector<std::string> names;
  for (const auto& f : faces) names.insert(names.end(), f.begin(), f.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<Simplex> indexed;
  for (const auto& f : faces) {
    Simplex s;
    for (const auto& name : f)
      s.push_back(static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), name) - names.begin()));
    indexed.push_back(std::move(s));
  }
  return from_faces(std::move(names), indexed);
}

std::optional<std::size_t> SimplicialComplex::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const {
  if (dim < 0 || dim > dimension()) return empty_faces();
  return faces_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& level : faces_) total += level.size();
  return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& level = faces(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  for (const auto& level : faces_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<std::string> SimplicialComplex::face_names(const Simplex& s) const {
  std::vector<std::string> out;
  for (auto v : s) out.push_back(vertices_.at(v));
  return out;
}

ReflexiveGraph::ReflexiveGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  check_unique_names(vertices_);
  for (auto& [u, v] : edges_) {
    if (u >= vertices_.size() || v >= vertices_.size()) throw Error("edge refers to an unknown vertex");
    if (u == v) throw Error("explicit self-loop at '" + vertices_[u] + "'; loops are implicit");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw Error("duplicate edge " + vertices_[dup->first] + " " + vertices_[dup->second]);
}

ReflexiveGraph ReflexiveGraph::from_named_edges(std::vector<std::string> vertices,
                                                const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error("edge refers to unknown vertex '" + name + "'");
    return it->second;
  };
  std::vector<Edge> indexed;
  for (const auto& [a, b] : edges) indexed.emplace_back(lookup(a), lookup(b));
  return ReflexiveGraph(std::move(vertices), std::move(indexed));
}

std::optional<std::size_t> ReflexiveGraph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> ReflexiveGraph::edge_index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool ReflexiveGraph::has_edge(std::size_t u, std::size_t v) const { return edge_index(u, v).has_value(); }

bool same_labeled_graph(const ReflexiveGraph& a, const ReflexiveGraph& b) {
  auto names = [](const ReflexiveGraph& g) {
    auto v = g.vertices();
    std::sort(v.begin(), v.end());
    return v;
  };
  auto edges = [](const ReflexiveGraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) out.push_back(std::minmax(g.vertices()[u], g.vertices()[v]));
    std::sort(out.begin(), out.end());
    return out;
  };
  return names(a) == names(b) && edges(a) == edges(b);
}

bool is_graph_morphism(const ReflexiveGraph& source, const ReflexiveGraph& target, const GraphMorphism& f) {
  if (f.vertex_map.size() != source.vertex_count()) return false;
  for (auto v : f.vertex_map)
    if (v >= target.vertex_count()) return false;
  for (auto [u, v] : source.edges()) {
    auto a = f.vertex_map[u], b = f.vertex_map[v];
    if (a != b && !target.has_edge(a, b)) return false;
  }
  return true;
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
  GraphMorphism out;
  out.vertex_map.reserve(f.vertex_map.size());
  for (auto v : f.vertex_map) out.vertex_map.push_back(g.vertex_map.at(v));
  return out;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(vertex_map.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simplicial_map(const SimplicialMap& f) {
  if (f.vertex_map.size() != f.source.vertex_count()) return false;
  for (auto v : f.vertex_map)
    if (v >= f.target.vertex_count()) return false;
  for (int d = 1; d <= f.source.dimension(); ++d)
    for (const auto& s : f.source.faces(d))
      if (!f.target.contains(f.image(s))) return false;
  return true;
}

SimplicialComplex order_complex(const Poset& p) {
  std::vector<Simplex> chains;
  Simplex chain;
  // Chains are grown upward from their least element, so each is produced once.
  auto grow = [&](auto&& self, std::size_t last) -> void {
    Simplex sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    chains.push_back(std::move(sorted));
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.less(last, y)) continue;
      chain.push_back(y);
      self(self, y);
      chain.pop_back();
    }
  };
  for (std::size_t x = 0; x < p.size(); ++x) {
    chain = {x};
    grow(grow, x);
  }
  return SimplicialComplex::from_faces(p.elements(), chains);
}

Poset face_poset(const SimplicialComplex& s) {
  std::vector<Simplex> faces = s.all_faces();
  std::vector<std::string> names;
  for (const auto& f : faces) names.push_back(join(s.face_names(f), "|"));
  const std::size_t n = faces.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i * n + j] = faces[i].size() <= faces[j].size() &&
                       std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
  return Poset(std::move(names), std::move(rel));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& s) {
  SimplicialComplex unsorted = order_complex(face_poset(s));
  const auto& names = unsorted.vertices();
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::size_t> position(names.size());
  std::vector<std::string> sorted_names;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    sorted_names.push_back(names[order[i]]);
  }
  std::vector<Simplex> faces;
  for (int d = 1; d <= unsorted.dimension(); ++d)
    for (const auto& f : unsorted.faces(d)) {
      Simplex g;
      for (auto v : f) g.push_back(position[v]);
      faces.push_back(std::move(g));
    }
  return SimplicialComplex::from_faces(std::move(sorted_names), faces);
}

SimplicialComplex k_skeleton(const SimplicialComplex& s, int k) {
  if (k < 0) throw Error("skeleton dimension must be non-negative");
  std::vector<Simplex> faces;
  for (int d = 1; d <= std::min(k, s.dimension()); ++d)
    faces.insert(faces.end(), s.faces(d).begin(), s.faces(d).end());
  return SimplicialComplex::from_faces(s.vertices(), faces);
}

ReflexiveGraph one_skeleton(const SimplicialComplex& s) {
  std::vector<ReflexiveGraph::Edge> edges;
  for (const auto& e : s.faces(1)) edges.emplace_back(e[0], e[1]);
  return ReflexiveGraph(s.vertices(), std::move(edges));
}

SimplicialComplex as_complex(const ReflexiveGraph& g) {
  std::vector<Simplex> faces;
  for (auto [u, v] : g.edges()) faces.push_back({u, v});
  return SimplicialComplex::from_faces(g.vertices(), faces);
}

SimplicialComplex clique_complex(const ReflexiveGraph& g, int max_dim) {
  if (max_dim < 0) throw Error("clique dimension cap must be non-negative");
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  // Upper neighbourhoods: neighbours with a larger index.
  std::vector<std::uint64_t> upper(n * words, 0);
  for (auto [u, v] : g.edges()) upper[u * words + v / 64] |= std::uint64_t{1} << (v % 64);

  std::vector<Simplex> faces;
  Simplex clique;
  std::vector<std::vector<std::uint64_t>> scratch;
  auto extend = [&](auto&& self, std::span<const std::uint64_t> candidates) -> void {
    faces.push_back(clique);
    if (static_cast<int>(clique.size()) - 1 >= max_dim) return;
    const std::size_t depth = clique.size();
    if (scratch.size() <= depth) scratch.resize(depth + 1, std::vector<std::uint64_t>(words));
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = candidates[w]; bits; bits &= bits - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        auto& next = scratch[depth];
        kernels::and_into(next, candidates, std::span<const std::uint64_t>(upper).subspan(v * words, words));
        clique.push_back(v);
        self(self, std::span<const std::uint64_t>(next));
        clique.pop_back();
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    clique = {v};
    extend(extend, std::span<const std::uint64_t>(upper).subspan(v * words, words));
  }
  return SimplicialComplex::from_faces(g.vertices(), faces);
}

bool is_flag(const SimplicialComplex& s) { return s == clique_complex(one_skeleton(s)); }

SimplicialMap induced_order_map(const MonotoneMap& f) {
  if (!is_monotone(f)) throw Error("map is not monotone");
  return {order_complex(f.source), order_complex(f.target), f.assignment};
}

SimplicialMap induced_clique_map(const SimplicialComplex& source, const SimplicialComplex& target,
                                 const GraphMorphism& f) {
  SimplicialMap out{source, target, f.vertex_map};
  if (!is_simplicial_map(out)) throw Error("vertex map does not send cliques to cliques");
  return out;
}

}  // namespace ppers
