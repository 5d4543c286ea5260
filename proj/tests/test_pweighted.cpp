#include "ppers/error.hpp"
#include "ppers/io.hpp"
#include "ppers/pweighted.hpp"
#include "ppers/random.hpp"
#include "ppers/verify.hpp"

#include <doctest.h>

#include <set>

using namespace ppers;

namespace {

const Poset chain3 = *named_poset("chain3");

PWeightedGraph triangle_example() {
  return parse_weighted_graph(
      "vertex: a 1\nvertex: b 1\nvertex: c 2\nedge: a b 1\nedge: a c 2\nedge: b c 3\n", &chain3);
}

std::set<std::string> vertex_names(const ReflexiveGraph& g) { return {g.vertices().begin(), g.vertices().end()}; }

}  // namespace

TEST_CASE("weighted graph validation") {
  ReflexiveGraph edge({"a", "b"}, {{0, 1}});
  CHECK_THROWS_AS(PWeightedGraph(edge, chain3, {0, 2}, {1}), Error);
  CHECK_NOTHROW(PWeightedGraph(edge, chain3, {0, 1}, {1}));
  CHECK_THROWS_AS(PWeightedGraph(edge, chain3, {0}, {1}), Error);
  CHECK_THROWS_AS(PWeightedGraph(edge, chain3, {0, 7}, {1}), Error);
}

TEST_CASE("sublevel graphs") {
  auto w = triangle_example();
  CHECK(sublevel_graph(w, "3") == w.graph());
  auto g2 = sublevel_graph(w, "2");
  CHECK(vertex_names(g2) == std::set<std::string>{"a", "b", "c"});
  CHECK(g2.edge_count() == 2);
  CHECK_FALSE(g2.has_edge(*g2.find_vertex("b"), *g2.find_vertex("c")));

  auto high = parse_weighted_graph("vertex: a 2\n", &chain3);
  CHECK(sublevel_graph(high, "1").cell_count() == 0);
  CHECK_THROWS_AS(sublevel_graph(w, "9"), Error);
}

TEST_CASE("sublevels grow along the order") {
  Rng rng(21);
  auto diamond = *named_poset("diamond");
  for (int t = 0; t < 50; ++t) {
    auto w = random_weighted_graph(rng, diamond);
    for (std::size_t u = 0; u < diamond.size(); ++u)
      for (std::size_t v = 0; v < diamond.size(); ++v)
        if (diamond.leq(u, v)) {
          auto gu = sublevel_graph(w, u), gv = sublevel_graph(w, v);
          for (const auto& x : gu.vertices()) CHECK(gv.find_vertex(x).has_value());
          for (auto [a, b] : gu.edges())
            CHECK(gv.has_edge(*gv.find_vertex(gu.vertices()[a]), *gv.find_vertex(gu.vertices()[b])));
        }
  }
}

TEST_CASE("phi") {
  auto w = triangle_example();
  auto f = phi(w);
  CHECK(f.graph_at(0).cell_count() == 3);
  CHECK(f.graph_at(1).cell_count() == 5);
  CHECK(f.graph_at(2).cell_count() == 6);
  CHECK(f.is_inclusion_functor());
  CHECK(is_one_critical(f));
  auto table = critical_values(f);
  REQUIRE(table);
  CHECK(table->birth.at({"a", "c"}) == 1);
  CHECK(table->birth.at({"b", "c"}) == 2);

  auto null = phi(PWeightedGraph(ReflexiveGraph(), chain3, {}, {}));
  for (std::size_t v = 0; v < 3; ++v) CHECK(null.graph_at(v).cell_count() == 0);

  auto diamond = *named_poset("diamond");
  auto point = phi(PWeightedGraph(ReflexiveGraph({"x"}, {}), diamond, {*diamond.bottom()}, {}));
  for (std::size_t v = 0; v < diamond.size(); ++v) CHECK(point.graph_at(v).vertex_count() == 1);
}

TEST_CASE("persistent graph functoriality is checked") {
  auto two = Poset::chain({"1", "2"});
  ReflexiveGraph a({"a"}, {}), ab({"a", "b"}, {});
  CHECK_NOTHROW(PersistentGraph(two, {a, ab}, {{{0, 1}, GraphMorphism{{1}}}}));
  CHECK_THROWS_AS(PersistentGraph(two, {a, ab}, {}), Error);
  CHECK_THROWS_AS(PersistentGraph(two, {a, ab}, {{{0, 1}, GraphMorphism{{5}}}}), Error);

  // Two cover paths bottom -> top through different middles must agree.
  auto diamond = *named_poset("diamond");
  ReflexiveGraph one({"p"}, {}), pair({"p", "q"}, {});
  PersistentGraph::CoverMaps maps;
  for (auto [u, v] : diamond.covers()) maps[{u, v}] = GraphMorphism{{0}};
  std::vector<ReflexiveGraph> graphs{one, one, one, pair};
  CHECK_NOTHROW(PersistentGraph(diamond, graphs, maps));
  maps[{*diamond.find("right"), *diamond.find("top")}] = GraphMorphism{{1}};
  CHECK_THROWS_AS(PersistentGraph(diamond, graphs, maps), Error);
}

TEST_CASE("psi") {
  auto two = Poset::chain({"1", "2"});
  ReflexiveGraph point({"x"}, {});
  auto constant = PersistentGraph::from_inclusions(two, {point, point});
  auto u = psi(constant);
  CHECK(u.graph().vertex_count() == 2);
  CHECK(u.graph().edge_count() == 0);
  CHECK(u.weighted_cells() == std::map<Cell, std::size_t>{{{"x@1"}, 0}, {{"x@2"}, 1}});

  CHECK(psi(PersistentGraph::from_inclusions(two, {ReflexiveGraph(), ReflexiveGraph()})).cell_count() == 0);

  auto grow = PersistentGraph::from_inclusions(two, {ReflexiveGraph({"a"}, {}), ReflexiveGraph({"a", "b"}, {{0, 1}})});
  auto g = psi(grow);
  CHECK(g.weighted_cells() ==
        std::map<Cell, std::size_t>{{{"a@1"}, 0}, {{"a@2"}, 1}, {{"b@2"}, 1}, {{"a@2", "b@2"}, 1}});
}

TEST_CASE("one-criticality") {
  auto anti = Poset::antichain({"u", "v"});
  ReflexiveGraph edge({"x", "y"}, {{0, 1}});
  auto twice = PersistentGraph::from_inclusions(anti, {edge, edge});
  CHECK_FALSE(is_one_critical(twice));
  CHECK_THROWS_AS(from_persistent(twice), Error);

  auto collapse = PersistentGraph(Poset::chain({"1", "2"}), {ReflexiveGraph({"a", "b"}, {}), ReflexiveGraph({"c"}, {})},
                                  {{{0, 1}, GraphMorphism{{0, 0}}}});
  CHECK_THROWS_AS(is_one_critical(collapse), Error);

  Rng rng(22);
  for (int t = 0; t < 20; ++t) CHECK(is_one_critical(random_inclusion_functor(rng, chain3)));
}

TEST_CASE("from_persistent") {
  auto w = triangle_example();
  CHECK(same_weighted_graph(from_persistent(phi(w)), w));

  auto diamond = *named_poset("diamond");
  ReflexiveGraph g({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto constant = PersistentGraph::from_inclusions(diamond, std::vector<ReflexiveGraph>(4, g));
  for (const auto& [cell, weight] : from_persistent(constant).weighted_cells()) CHECK(weight == *diamond.bottom());

  auto step = PersistentGraph::from_inclusions(
      chain3, {ReflexiveGraph({"a", "b", "c"}, {{0, 1}}), ReflexiveGraph({"a", "b", "c"}, {{0, 1}, {1, 2}}),
               ReflexiveGraph({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}})});
  auto cells = from_persistent(step).weighted_cells();
  CHECK(cells.at({"a", "b"}) == 0);
  CHECK(cells.at({"b", "c"}) == 1);
  CHECK(cells.at({"a", "c"}) == 2);
}

TEST_CASE("to_inclusion_functor renames injective functors") {
  auto two = Poset::chain({"1", "2"});
  PersistentGraph f(two, {ReflexiveGraph({"p"}, {}), ReflexiveGraph({"q", "r"}, {{0, 1}})}, {{{0, 1}, GraphMorphism{{1}}}});
  auto g = to_inclusion_functor(f);
  CHECK(g.is_inclusion_functor());
  CHECK(g.graph_at(0).vertices() == std::vector<std::string>{"p"});
  CHECK(vertex_names(g.graph_at(1)) == std::set<std::string>{"p", "q"});
}

TEST_CASE("equivalence verifier") {
  CHECK(verify_equivalence(chain3, 50, 0).ok());
  CHECK(verify_equivalence(*named_poset("diamond"), 50, 0).ok());
  CHECK(verify_equivalence(*named_poset("point"), 10, 0).ok());
  CHECK(check_equivalence(triangle_example()).ok());
}

TEST_CASE("first adjunction") {
  auto two = Poset::chain({"1", "2"});
  auto edge = PWeightedGraph(ReflexiveGraph({"x", "y"}, {{0, 1}}), two, {0, 0}, {1});
  auto target = PersistentGraph::from_inclusions(two, {ReflexiveGraph({"a", "b"}, {}), ReflexiveGraph({"a", "b"}, {{0, 1}})});
  CHECK(is_weight_preserving_morphism(edge, target, {0, 1}));
  auto r = check_adjunction_phi_psi(edge, target, {0, 1});
  CHECK(r.ok());
  CHECK(r.skipped == 0);

  auto constant = PersistentGraph::from_inclusions(two, {ReflexiveGraph({"a"}, {}), ReflexiveGraph({"a"}, {})});
  CHECK(check_adjunction_phi_psi(edge, constant, {0, 0}).ok());

  CHECK(check_adjunction_phi_psi(PWeightedGraph(ReflexiveGraph(), two, {}, {}), target, {}).ok());
  CHECK_FALSE(is_weight_preserving_morphism(
      edge, PersistentGraph::from_inclusions(two, {ReflexiveGraph({"a", "b"}, {}), ReflexiveGraph({"a", "b"}, {})}),
      {0, 1}));

  CHECK(verify_adjunction_phi_psi(chain3, 30, 1).ok());
  CHECK(verify_adjunction_phi_psi(*named_poset("diamond"), 30, 1).ok());
}

TEST_CASE("second adjunction") {
  auto point = *named_poset("point");
  CHECK(check_phi_identity(PWeightedGraph(ReflexiveGraph({"x"}, {}), point, {0}, {})).ok());
  auto w = triangle_example();
  CHECK(check_phi_identity(w).ok());
  CHECK(check_psi_identity(phi(w)).ok());
  CHECK(verify_adjunction_psi_phi(*named_poset("diamond"), 30, 2).ok());
}

TEST_CASE("exhaustive small instances") {
  auto r = verify_exhaustive(3, 2);
  CHECK(r.equivalence.ok());
  CHECK(r.adjunction_phi_psi.ok());
  CHECK(r.adjunction_psi_phi.ok());
  CHECK(r.adjunction_phi_psi.skipped == 0);
}
