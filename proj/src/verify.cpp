#include "ppers/verify.hpp"

#include "ppers/error.hpp"
#include "ppers/random.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace ppers {

namespace {

std::string instance_tag(const PWeightedGraph& w) {
  return std::to_string(w.graph().vertex_count()) + " vertices, " + std::to_string(w.graph().edge_count()) +
         " edges over " + std::to_string(w.poset().size()) + " elements";
}

/// Vertex x of the full graph -> its index in sublevel_graph(w, u), if present.
std::vector<std::optional<std::size_t>> sublevel_index(const PWeightedGraph& w, std::size_t u) {
  std::vector<std::optional<std::size_t>> out(w.graph().vertex_count());
  std::size_t next = 0;
  for (std::size_t x = 0; x < out.size(); ++x)
    if (w.poset().leq(w.vertex_weight(x), u)) out[x] = next++;
  return out;
}

std::set<std::size_t> cell(std::size_t a, std::size_t b) { return {a, b}; }

}  // namespace

VerificationReport check_equivalence(const PWeightedGraph& w) {
  VerificationReport r("equivalence");
  const std::string tag = instance_tag(w);
  const PersistentGraph f = phi(w);
  const auto table = critical_values(f);
  r.check(table.has_value(), "phi(W) is not one-critical (" + tag + ")");
  if (!table) return r;
  r.check(table->birth == w.weighted_cells(), "critical values differ from the weights (" + tag + ")");
  const PWeightedGraph back = from_persistent(f);
  r.check(same_weighted_graph(back, w), "from_persistent(phi(W)) != W (" + tag + ")");
  r.check(same_persistent_graph(phi(back), f), "phi(from_persistent(phi(W))) != phi(W) (" + tag + ")");
  return r;
}

VerificationReport check_one_critical_functor(const PersistentGraph& f) {
  VerificationReport r("equivalence");
  if (is_one_critical(f)) {
    const PersistentGraph g = phi(from_persistent(f));
    bool same = true;
    for (std::size_t v = 0; v < f.poset().size(); ++v) same = same && same_labeled_graph(g.graph_at(v), f.graph_at(v));
    r.check(same, "phi(from_persistent(F)) differs from F at some level");
    r.check(same_persistent_graph(g, f), "phi(from_persistent(F)) has different structure maps");
  } else {
    bool rejected = false;
    try {
      from_persistent(f);
    } catch (const Error&) {
      rejected = true;
    }
    r.check(rejected, "from_persistent accepted a functor that is not one-critical");
  }
  return r;
}

VerificationReport verify_equivalence(const Poset& p, std::size_t trials, std::uint64_t seed) {
  VerificationReport r("equivalence");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PWeightedGraph w = random_weighted_graph(rng, p);
    r.merge(check_equivalence(w));
    r.merge(check_one_critical_functor(shuffled_inclusion_functor(rng, w)));
    r.merge(check_one_critical_functor(random_inclusion_functor(rng, p)));
    const QuotientFunctor q = random_quotient_functor(rng, w);
    if (q.functor.is_inclusion_functor()) {
      ++r.skipped;
      continue;
    }
    bool rejected = false;
    try {
      is_one_critical(q.functor);
    } catch (const Error&) {
      rejected = true;
    }
    r.check(rejected, "one-criticality was decided for a functor with non-inclusion maps");
  }
  return r;
}

namespace {

/// Target cell of alpha on edge e as a set of vertices of target.graph_at(w(e)).
std::optional<std::set<std::size_t>> alpha_edge(const PWeightedGraph& x, const PersistentGraph& target,
                                                const std::vector<std::size_t>& alpha, std::size_t e) {
  const auto [a, b] = x.graph().edges()[e];
  const std::size_t we = x.edge_weight(e);
  const std::size_t ia = target.map_at(x.vertex_weight(a), we).vertex_map[alpha[a]];
  const std::size_t ib = target.map_at(x.vertex_weight(b), we).vertex_map[alpha[b]];
  if (ia != ib && !target.graph_at(we).has_edge(ia, ib)) return std::nullopt;
  return cell(ia, ib);
}

struct UniquenessSearch {
  const PWeightedGraph& x;
  const PersistentGraph& target;
  const std::vector<std::size_t>& alpha;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (level u, vertex x of the full graph)
  std::vector<std::vector<std::optional<std::size_t>>> beta;  // [u][x]
  std::vector<std::vector<std::size_t>> solutions_flat;
  std::size_t solutions = 0;
  std::size_t nodes = 0;
  std::size_t node_limit = 2000000;
  bool exhausted = false;

  bool consistent(std::size_t u, std::size_t v) {
    const Poset& p = x.poset();
    const std::size_t value = *beta[u][v];
    if (x.vertex_weight(v) == u && value != alpha[v]) return false;
    for (const auto& [key, map] : target.cover_maps())
      if (key.second == u && p.leq(x.vertex_weight(v), key.first) && map.vertex_map[*beta[key.first][v]] != value)
        return false;
    const ReflexiveGraph& g = x.graph();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!p.leq(x.edge_weight(e), u)) continue;
      const auto [a, b] = g.edges()[e];
      if (a != v && b != v) continue;
      if (!beta[u][a] || !beta[u][b]) continue;
      const std::size_t ia = *beta[u][a], ib = *beta[u][b];
      if (ia != ib && !target.graph_at(u).has_edge(ia, ib)) return false;
      if (x.edge_weight(e) == u && cell(ia, ib) != *alpha_edge(x, target, alpha, e)) return false;
    }
    return true;
  }

  void run(std::size_t k) {
    if (exhausted) return;
    if (++nodes > node_limit) {
      exhausted = true;
      return;
    }
    if (k == slots.size()) {
      ++solutions;
      std::vector<std::size_t> flat;
      for (const auto& level : beta)
        for (const auto& value : level)
          if (value) flat.push_back(*value);
      solutions_flat.push_back(std::move(flat));
      return;
    }
    const auto [u, v] = slots[k];
    for (std::size_t c = 0; c < target.graph_at(u).vertex_count(); ++c) {
      beta[u][v] = c;
      if (consistent(u, v)) run(k + 1);
      beta[u][v].reset();
    }
  }
};

}  // namespace

bool is_weight_preserving_morphism(const PWeightedGraph& x, const PersistentGraph& target,
                                   const std::vector<std::size_t>& alpha) {
  if (!(x.poset() == target.poset()) || alpha.size() != x.graph().vertex_count()) return false;
  for (std::size_t v = 0; v < alpha.size(); ++v)
    if (alpha[v] >= target.graph_at(x.vertex_weight(v)).vertex_count()) return false;
  for (std::size_t e = 0; e < x.graph().edge_count(); ++e)
    if (!alpha_edge(x, target, alpha, e)) return false;
  return true;
}

VerificationReport check_adjunction_phi_psi(const PWeightedGraph& x, const PersistentGraph& target,
                                            const std::vector<std::size_t>& alpha, std::size_t cell_limit) {
  VerificationReport r("adjunction-1");
  const std::string tag = instance_tag(x);
  if (!is_weight_preserving_morphism(x, target, alpha)) {
    r.check(false, "alpha is not a weight-preserving morphism (" + tag + ")");
    return r;
  }
  const Poset& p = x.poset();
  const ReflexiveGraph& g = x.graph();
  const PersistentGraph source = phi(x);

  // alpha-bar restricted to X_u: x -> target(w(x) <= u)(alpha(x)).
  std::vector<std::vector<std::optional<std::size_t>>> bar(p.size(), std::vector<std::optional<std::size_t>>(g.vertex_count()));
  std::vector<GraphMorphism> level_maps(p.size());
  for (std::size_t u = 0; u < p.size(); ++u) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (p.leq(x.vertex_weight(v), u)) {
        bar[u][v] = target.map_at(x.vertex_weight(v), u).vertex_map[alpha[v]];
        level_maps[u].vertex_map.push_back(*bar[u][v]);
      }
    r.check(is_graph_morphism(source.graph_at(u), target.graph_at(u), level_maps[u]),
            "alpha-bar at " + p.name(u) + " is not a graph morphism (" + tag + ")");
  }
  for (const auto& [key, map] : target.cover_maps()) {
    const auto [u, v] = key;
    bool natural = true;
    for (std::size_t y = 0; y < g.vertex_count(); ++y)
      if (bar[u][y]) natural = natural && map.vertex_map[*bar[u][y]] == *bar[v][y];
    r.check(natural, "alpha-bar is not natural on " + p.name(u) + " < " + p.name(v) + " (" + tag + ")");
  }

  // Psi(alpha-bar) o pi against alpha, through the tagged unions.
  const TaggedUnion psi_source = psi_tagged(source);
  const TaggedUnion psi_target = psi_tagged(target);
  std::vector<std::vector<std::optional<std::size_t>>> index(p.size());
  for (std::size_t u = 0; u < p.size(); ++u) index[u] = sublevel_index(x, u);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t u = x.vertex_weight(v);
    const std::size_t pi = psi_source.copy_of.at({u, *index[u][v]});
    r.check(psi_source.weighted.vertex_weight(pi) == u, "pi does not preserve the weight of " + g.vertices()[v]);
    const auto [level, local] = psi_source.origin[pi];
    const std::size_t via_bar = psi_target.copy_of.at({level, level_maps[level].vertex_map[local]});
    const std::size_t direct = psi_target.copy_of.at({u, alpha[v]});
    r.check(via_bar == direct, "triangle fails on vertex " + g.vertices()[v] + " (" + tag + ")");
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edges()[e];
    const std::size_t u = x.edge_weight(e);
    const std::size_t pa = psi_source.copy_of.at({u, *index[u][a]});
    const std::size_t pb = psi_source.copy_of.at({u, *index[u][b]});
    const auto edge = psi_source.weighted.graph().edge_index(pa, pb);
    r.check(edge && psi_source.weighted.edge_weight(*edge) == u, "pi does not send an edge to an edge of its weight");
    std::set<std::size_t> via_bar, direct;
    for (auto end : {pa, pb}) {
      const auto [level, local] = psi_source.origin[end];
      via_bar.insert(psi_target.copy_of.at({level, level_maps[level].vertex_map[local]}));
    }
    const auto spanned = alpha_edge(x, target, alpha, e);
    for (auto c : *spanned) direct.insert(psi_target.copy_of.at({u, c}));
    r.check(via_bar == direct,
            "triangle fails on edge " + g.vertices()[a] + " " + g.vertices()[b] + " (" + tag + ")");
  }

  if (g.cell_count() > cell_limit) {
    ++r.skipped;
    return r;
  }
  UniquenessSearch search{x, target, alpha, {}, {}, {}};
  search.beta.assign(p.size(), std::vector<std::optional<std::size_t>>(g.vertex_count()));
  for (auto u : p.linear_extension())
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (p.leq(x.vertex_weight(v), u)) search.slots.emplace_back(u, v);
  search.run(0);
  if (search.exhausted) {
    ++r.skipped;
    return r;
  }
  std::vector<std::size_t> expected;
  for (std::size_t u = 0; u < p.size(); ++u)
    for (const auto& value : bar[u])
      if (value) expected.push_back(*value);
  r.check(search.solutions == 1, "found " + std::to_string(search.solutions) +
                                     " families making the triangle commute, expected 1 (" + tag + ")");
  r.check(std::find(search.solutions_flat.begin(), search.solutions_flat.end(), expected) != search.solutions_flat.end(),
          "alpha-bar is not among the enumerated families (" + tag + ")");
  return r;
}

namespace {

std::optional<std::vector<std::size_t>> random_alpha(Rng& rng, const PWeightedGraph& x, const PersistentGraph& target) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<std::size_t> alpha;
    for (std::size_t v = 0; v < x.graph().vertex_count(); ++v) {
      const std::size_t n = target.graph_at(x.vertex_weight(v)).vertex_count();
      if (n == 0) return std::nullopt;
      alpha.push_back(uniform_index(rng, n));
    }
    if (is_weight_preserving_morphism(x, target, alpha)) return alpha;
  }
  return std::nullopt;
}

PersistentGraph constant_functor(const Poset& p, const ReflexiveGraph& g) {
  return PersistentGraph::from_inclusions(p, std::vector<ReflexiveGraph>(p.size(), g));
}

}  // namespace

VerificationReport verify_adjunction_phi_psi(const Poset& p, std::size_t trials, std::uint64_t seed) {
  VerificationReport r("adjunction-1");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PWeightedGraph x = random_weighted_graph(rng, p, 4);
    // The quotient map of phi(X) itself is always a valid alpha.
    const QuotientFunctor q = random_quotient_functor(rng, x);
    std::vector<std::size_t> natural;
    for (std::size_t v = 0; v < x.graph().vertex_count(); ++v) {
      const std::size_t u = x.vertex_weight(v);
      natural.push_back(q.q[u][*sublevel_index(x, u)[v]]);
    }
    r.merge(check_adjunction_phi_psi(x, q.functor, natural));

    const PWeightedGraph other = random_weighted_graph(rng, p, 4);
    const QuotientFunctor unrelated = random_quotient_functor(rng, other);
    if (auto alpha = random_alpha(rng, x, unrelated.functor))
      r.merge(check_adjunction_phi_psi(x, unrelated.functor, *alpha));
    else
      ++r.skipped;

    const PersistentGraph constant = constant_functor(p, random_weighted_graph(rng, p, 3).graph());
    if (auto alpha = random_alpha(rng, x, constant))
      r.merge(check_adjunction_phi_psi(x, constant, *alpha));
    else
      ++r.skipped;
  }
  return r;
}

VerificationReport check_psi_identity(const PersistentGraph& f) {
  VerificationReport r("adjunction-2");
  const Poset& p = f.poset();
  const TaggedUnion t = psi_tagged(f);
  const PersistentGraph ft = phi(t.weighted);
  const TaggedUnion t2 = psi_tagged(ft);
  const ReflexiveGraph& tg = t.weighted.graph();
  const ReflexiveGraph& t2g = t2.weighted.graph();

  // eta_f at v: x -> (x, v) inside Phi(Psi f)(v).
  std::vector<GraphMorphism> eta(p.size());
  bool eta_defined = true;
  for (std::size_t v = 0; v < p.size() && eta_defined; ++v) {
    for (std::size_t x = 0; x < f.graph_at(v).vertex_count(); ++x) {
      auto y = ft.graph_at(v).find_vertex(tg.vertices()[t.copy_of.at({v, x})]);
      if (!y) {
        eta_defined = false;
        break;
      }
      eta[v].vertex_map.push_back(*y);
    }
    if (eta_defined)
      r.check(is_graph_morphism(f.graph_at(v), ft.graph_at(v), eta[v]),
              "eta at " + p.name(v) + " is not a graph morphism");
  }
  r.check(eta_defined, "(x, v) missing from Phi(Psi f)(v)");
  if (!eta_defined) return r;

  // Psi(eta): (x, v) -> ((x, v), v).
  GraphMorphism psi_eta;
  for (std::size_t c = 0; c < tg.vertex_count(); ++c) {
    const auto [v, x] = t.origin[c];
    const std::size_t image = t2.copy_of.at({v, eta[v].vertex_map[x]});
    r.check(t2.weighted.vertex_weight(image) == t.weighted.vertex_weight(c), "Psi(eta) changes a weight");
    psi_eta.vertex_map.push_back(image);
  }
  r.check(is_graph_morphism(tg, t2g, psi_eta), "Psi(eta) is not a graph morphism");

  // eps on Psi(Phi(Psi f)): ((x, v), w) -> (x, v).
  GraphMorphism eps;
  for (std::size_t d = 0; d < t2g.vertex_count(); ++d) {
    const auto [w, y] = t2.origin[d];
    const std::size_t c = *tg.find_vertex(ft.graph_at(w).vertices()[y]);
    r.check(p.leq(t.weighted.vertex_weight(c), t2.weighted.vertex_weight(d)), "eps raises a weight");
    eps.vertex_map.push_back(c);
  }
  r.check(is_graph_morphism(t2g, tg, eps), "eps is not a graph morphism");

  for (std::size_t c = 0; c < tg.vertex_count(); ++c)
    r.check(eps.vertex_map[psi_eta.vertex_map[c]] == c, "eps o Psi(eta) moves vertex " + tg.vertices()[c]);
  for (auto [a, b] : tg.edges()) {
    const auto ia = eps.vertex_map[psi_eta.vertex_map[a]], ib = eps.vertex_map[psi_eta.vertex_map[b]];
    r.check(std::minmax(ia, ib) == std::minmax(a, b), "eps o Psi(eta) moves edge " + tg.vertices()[a] + " " + tg.vertices()[b]);
  }
  return r;
}

VerificationReport check_phi_identity(const PWeightedGraph& w) {
  VerificationReport r("adjunction-2");
  const Poset& p = w.poset();
  const PersistentGraph f = phi(w);
  const TaggedUnion t = psi_tagged(f);
  const PersistentGraph ft = phi(t.weighted);
  const ReflexiveGraph& tg = t.weighted.graph();
  const std::string tag = instance_tag(w);

  // eps on Psi(Phi w): (x, u) -> x, with w(x) <= u.
  for (std::size_t c = 0; c < tg.vertex_count(); ++c) {
    const auto [u, x] = t.origin[c];
    const std::size_t original = *w.graph().find_vertex(f.graph_at(u).vertices()[x]);
    r.check(p.leq(w.vertex_weight(original), t.weighted.vertex_weight(c)), "eps raises a weight (" + tag + ")");
  }

  std::vector<GraphMorphism> phi_eps(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    const ReflexiveGraph& level = f.graph_at(v);
    const ReflexiveGraph& big = ft.graph_at(v);
    GraphMorphism eta;
    for (std::size_t x = 0; x < level.vertex_count(); ++x)
      eta.vertex_map.push_back(*big.find_vertex(tg.vertices()[t.copy_of.at({v, x})]));
    r.check(is_graph_morphism(level, big, eta), "eta at " + p.name(v) + " is not a graph morphism (" + tag + ")");
    bool defined = true;
    for (const auto& name : big.vertices()) {
      const auto [u, x] = t.origin[*tg.find_vertex(name)];
      auto y = level.find_vertex(f.graph_at(u).vertices()[x]);
      if (!y) {
        defined = false;
        break;
      }
      phi_eps[v].vertex_map.push_back(*y);
    }
    r.check(defined, "Phi(eps) at " + p.name(v) + " leaves the sublevel (" + tag + ")");
    if (!defined) return r;
    r.check(is_graph_morphism(big, level, phi_eps[v]), "Phi(eps) at " + p.name(v) + " is not a graph morphism");
    for (std::size_t x = 0; x < level.vertex_count(); ++x)
      r.check(phi_eps[v].vertex_map[eta.vertex_map[x]] == x,
              "Phi(eps) o eta moves " + level.vertices()[x] + " at " + p.name(v) + " (" + tag + ")");
    for (auto [a, b] : level.edges()) {
      const auto ia = phi_eps[v].vertex_map[eta.vertex_map[a]], ib = phi_eps[v].vertex_map[eta.vertex_map[b]];
      r.check(std::minmax(ia, ib) == std::minmax(a, b), "Phi(eps) o eta moves an edge at " + p.name(v));
    }
  }
  for (const auto& [key, incl] : ft.cover_maps()) {
    const auto [u, v] = key;
    const auto& down = f.cover_maps().at(key);
    bool natural = true;
    for (std::size_t y = 0; y < incl.vertex_map.size(); ++y)
      natural = natural && phi_eps[v].vertex_map[incl.vertex_map[y]] == down.vertex_map[phi_eps[u].vertex_map[y]];
    r.check(natural, "Phi(eps) is not natural on " + p.name(u) + " < " + p.name(v) + " (" + tag + ")");
  }
  return r;
}

VerificationReport verify_adjunction_psi_phi(const Poset& p, std::size_t trials, std::uint64_t seed) {
  VerificationReport r("adjunction-2");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PWeightedGraph w = random_weighted_graph(rng, p);
    r.merge(check_phi_identity(w));
    r.merge(check_psi_identity(shuffled_inclusion_functor(rng, w)));
    r.merge(check_psi_identity(random_inclusion_functor(rng, p)));
  }
  return r;
}

ExhaustiveReports verify_exhaustive(std::size_t max_poset_size, std::size_t max_vertices) {
  ExhaustiveReports out;
  for (std::size_t n = 1; n <= max_poset_size; ++n)
    for (const Poset& p : all_posets(n)) {
      const auto graphs = exhaustive_weighted_graphs(p, max_vertices);
      std::vector<PersistentGraph> targets;
      for (const auto& w : graphs) {
        out.equivalence.merge(check_equivalence(w));
        out.adjunction_psi_phi.merge(check_phi_identity(w));
        targets.push_back(phi(w));
        out.adjunction_psi_phi.merge(check_psi_identity(targets.back()));
      }
      for (const auto& x : graphs)
        for (const auto& target : targets) {
          const std::size_t n_vertices = x.graph().vertex_count();
          std::vector<std::size_t> alpha(n_vertices, 0);
          bool possible = true;
          for (std::size_t v = 0; v < n_vertices; ++v)
            possible = possible && target.graph_at(x.vertex_weight(v)).vertex_count() > 0;
          if (!possible) continue;
          // Odometer over all vertex assignments.
          while (true) {
            if (is_weight_preserving_morphism(x, target, alpha))
              out.adjunction_phi_psi.merge(check_adjunction_phi_psi(x, target, alpha));
            std::size_t k = 0;
            while (k < n_vertices && ++alpha[k] == target.graph_at(x.vertex_weight(k)).vertex_count()) alpha[k++] = 0;
            if (k == n_vertices) break;
          }
        }
    }
  return out;
}

VerificationReport verify_flagness(std::size_t trials, std::uint64_t seed, std::size_t max_size) {
  VerificationReport r("flagness");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Poset p = random_poset(rng, 1 + uniform_index(rng, max_size));
    r.check(is_flag(order_complex(p)), "order complex of a " + std::to_string(p.size()) + "-element poset is not flag");
    const SimplicialComplex s = random_complex(rng, max_size, 3);
    r.check(is_flag(barycentric_subdivision(s)),
            "subdivision of a complex with " + std::to_string(s.face_count()) + " faces is not flag");
  }
  return r;
}

}  // namespace ppers
