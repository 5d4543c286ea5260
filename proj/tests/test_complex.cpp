#include "oracle.hpp"

#include "ppers/complex.hpp"
#include "ppers/error.hpp"
#include "ppers/io.hpp"
#include "ppers/random.hpp"

#include <doctest.h>

using namespace ppers;

namespace {

SimplicialComplex named(std::vector<std::vector<std::string>> faces) {
  return SimplicialComplex::from_named_faces(faces);
}

std::size_t count_dim(const SimplicialComplex& s, int d) { return s.faces(d).size(); }

}  // namespace

TEST_CASE("complex construction closes downward") {
  auto t = named({{"a", "b", "c"}});
  CHECK(t.face_count() == 7);
  CHECK(t.dimension() == 2);
  CHECK(t.contains({0, 1}));
  SimplicialComplex empty;
  CHECK(empty.dimension() == -1);
  CHECK(empty.face_count() == 0);
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a"}, {{0, 3}}), Error);
}

TEST_CASE("graph construction") {
  ReflexiveGraph g({"a", "b", "c"}, {{2, 0}, {0, 1}});
  CHECK(g.edges() == std::vector<ReflexiveGraph::Edge>{{0, 1}, {0, 2}});
  CHECK(g.has_edge(2, 0));
  CHECK_THROWS_AS(ReflexiveGraph({"a"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(ReflexiveGraph({"a", "b"}, {{0, 1}, {1, 0}}), Error);
  ReflexiveGraph null;
  CHECK(null.cell_count() == 0);
}

TEST_CASE("order complex") {
  auto chain = order_complex(Poset::chain({"a", "b", "c"}));
  CHECK(chain.face_count() == 7);
  auto anti = order_complex(Poset::antichain({"a", "b"}));
  CHECK(oracle::faces_of(anti) == oracle::Faces{{"a"}, {"b"}});
  auto v = order_complex(*named_poset("v"));
  CHECK(oracle::faces_of(v) == oracle::Faces{{"a"}, {"b"}, {"c"}, {"a", "c"}, {"b", "c"}});
}

TEST_CASE("order complex faces are the chains") {
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    auto p = random_poset(rng, 1 + uniform_index(rng, 7));
    auto o = order_complex(p);
    CHECK(oracle::faces_of(o) == oracle::chains(p));
    CHECK(is_flag(o));
  }
}

TEST_CASE("face poset") {
  auto edge = face_poset(named({{"a", "b"}}));
  CHECK(edge.size() == 3);
  CHECK(edge.top().has_value());
  CHECK(edge.name(*edge.top()) == "a|b");
  auto two = face_poset(named({{"a"}, {"b"}}));
  CHECK(two.size() == 2);
  CHECK(two.covers().empty());
  auto tri = face_poset(named({{"a", "b", "c"}}));
  CHECK(tri.size() == 7);
  CHECK(tri.minimal_elements().size() == 3);
  CHECK(face_poset(SimplicialComplex()).size() == 0);
}

TEST_CASE("barycentric subdivision") {
  auto edge = barycentric_subdivision(named({{"a", "b"}}));
  CHECK(count_dim(edge, 0) == 3);
  CHECK(count_dim(edge, 1) == 2);
  CHECK(edge.find_vertex("a|b").has_value());
  auto tri = barycentric_subdivision(named({{"a", "b", "c"}}));
  CHECK(count_dim(tri, 0) == 7);
  CHECK(count_dim(tri, 1) == 12);
  CHECK(count_dim(tri, 2) == 6);
  auto hollow = barycentric_subdivision(*named_complex("hollow-triangle"));
  CHECK(count_dim(hollow, 0) == 6);
  CHECK(count_dim(hollow, 1) == 6);
  CHECK(hollow.dimension() == 1);
}

TEST_CASE("subdivision matches chains of faces") {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    auto s = random_complex(rng, 6, 3);
    auto b = barycentric_subdivision(s);
    CHECK(oracle::faces_of(b) == oracle::subdivision(oracle::faces_of(s)));
    CHECK(is_flag(b));
  }
}

TEST_CASE("k skeleton") {
  auto tri = named({{"a", "b", "c"}});
  CHECK(k_skeleton(tri, 1) == *named_complex("hollow-triangle"));
  CHECK(k_skeleton(tri, 5) == tri);
  auto tet = named({{"a", "b", "c", "d"}});
  CHECK(k_skeleton(tet, 2).face_count() == 14);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto s = random_complex(rng, 7, 3);
    for (int k = 0; k < 3; ++k) CHECK(k_skeleton(k_skeleton(s, k), k) == k_skeleton(s, k));
  }
}

TEST_CASE("one skeleton") {
  auto k3 = one_skeleton(named({{"a", "b", "c"}}));
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(one_skeleton(named({{"a"}, {"b"}})).edge_count() == 0);
  auto two = one_skeleton(named({{"a", "b", "c"}, {"b", "c", "d"}}));
  CHECK(two.vertex_count() == 4);
  CHECK(two.edge_count() == 5);
}

TEST_CASE("clique complex") {
  auto hollow = *named_complex("hollow-triangle");
  auto filled = clique_complex(one_skeleton(hollow));
  auto expected = oracle::faces_of(hollow);
  expected.insert({"a", "b", "c"});
  CHECK(oracle::faces_of(filled) == expected);

  auto path = ReflexiveGraph::from_named_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(clique_complex(path).face_count() == 5);

  auto k4_minus = ReflexiveGraph::from_named_edges(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  auto cl = clique_complex(k4_minus);
  CHECK(count_dim(cl, 2) == 2);
  CHECK(cl.dimension() == 2);
}

TEST_CASE("clique complex against subset enumeration") {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = uniform_index(rng, 10);
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back("u" + std::to_string(i));
    std::vector<ReflexiveGraph::Edge> es;
    std::set<std::pair<std::string, std::string>> named_edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (coin(rng, 0.6)) {
          es.emplace_back(a, b);
          named_edges.insert({vs[a], vs[b]});
        }
    ReflexiveGraph g(vs, es);
    CHECK(oracle::faces_of(clique_complex(g)) == oracle::cliques(vs, named_edges));
    const int cap = static_cast<int>(uniform_index(rng, 4));
    CHECK(oracle::faces_of(clique_complex(g, cap)) ==
          oracle::cliques(vs, named_edges, static_cast<std::size_t>(cap) + 1));
    CHECK(one_skeleton(clique_complex(g)) == g);
    CHECK(clique_complex(g, 1) == as_complex(g));
  }
}

TEST_CASE("flag predicate") {
  CHECK_FALSE(is_flag(*named_complex("hollow-triangle")));
  CHECK(is_flag(*named_complex("triangle")));
  CHECK(is_flag(*named_complex("octahedron")));
  CHECK_FALSE(is_flag(*named_complex("tetrahedron-boundary")));
  CHECK(is_flag(SimplicialComplex()));
}

TEST_CASE("induced order map") {
  auto diamond = *named_poset("diamond");
  auto id = induced_order_map({diamond, diamond, {0, 1, 2, 3}});
  CHECK(is_simplicial_map(id));
  for (const auto& f : id.source.all_faces()) CHECK(id.image(f) == f);

  auto chain = Poset::chain({"lo", "m", "hi"});
  auto collapse = induced_order_map({diamond, chain, {0, 1, 1, 2}});
  CHECK(is_simplicial_map(collapse));
  std::size_t through_mid = 0;
  for (const auto& f : collapse.source.all_faces()) {
    auto names = collapse.source.face_names(f);
    bool mid = std::find(names.begin(), names.end(), "left") != names.end() ||
               std::find(names.begin(), names.end(), "right") != names.end();
    if (!mid) continue;
    ++through_mid;
    auto image = collapse.target.face_names(collapse.image(f));
    CHECK(std::find(image.begin(), image.end(), "m") != image.end());
  }
  CHECK(through_mid == 8);

  CHECK_THROWS_AS(induced_order_map({Poset::chain({"a", "b"}), Poset::antichain({"x", "y"}), {0, 1}}), Error);

  auto sub = Poset::chain({"a", "b"});
  auto big = Poset::chain({"a", "b", "c"});
  auto inc = induced_order_map({sub, big, {0, 1}});
  CHECK(is_simplicial_map(inc));
  CHECK(inc.image({0, 1}) == Simplex{0, 1});
}

TEST_CASE("graph morphisms") {
  auto path = ReflexiveGraph::from_named_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto edge = ReflexiveGraph::from_named_edges({"x", "y"}, {{"x", "y"}});
  CHECK(is_graph_morphism(path, edge, {{0, 1, 1}}));
  CHECK(is_graph_morphism(path, edge, {{0, 1, 0}}));
  auto two = ReflexiveGraph({"x", "y"}, {});
  CHECK_FALSE(is_graph_morphism(path, two, {{0, 1, 1}}));
  auto clique_map = induced_clique_map(clique_complex(path), clique_complex(edge), {{0, 1, 1}});
  CHECK(is_simplicial_map(clique_map));
}
