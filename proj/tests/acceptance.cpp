// Acceptance run: one PASS/FAIL line per criterion, each against its time limit.

#include "oracle.hpp"

#include "ppers/homology.hpp"
#include "ppers/io.hpp"
#include "ppers/persistence.hpp"
#include "ppers/pweighted.hpp"
#include "ppers/random.hpp"
#include "ppers/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ppers;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

bool run_criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= limit_s;
  const bool ok = o.pass && in_time;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, limit_s);
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " (" << timing << ")\n";
  if (!in_time) std::cout << "    over the time limit\n";
  for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
  return ok;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// [1] ------------------------------------------------------------------------

/// Rebuilds leq from the closed-set family alone: x <= y iff every closed set
/// containing y contains x.
bool order_from_closed_sets(const FiniteSpace& space, const Poset& p) {
  const std::size_t n = space.elements.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool below = true;
      for (auto c : space.closed_sets)
        if ((c >> y & 1) && !(c >> x & 1)) below = false;
      if (below != p.leq(x, y)) return false;
    }
  return true;
}

bool closed_sets_are_lower_sets(const FiniteSpace& space, const Poset& p) {
  std::set<std::uint64_t> expected;
  const std::size_t n = p.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool lower = true;
    for (std::size_t y = 0; y < n && lower; ++y)
      for (std::size_t x = 0; x < n; ++x)
        if ((m >> y & 1) && p.leq(x, y) && !(m >> x & 1)) lower = false;
    if (lower) expected.insert(m);
  }
  return std::set<std::uint64_t>(space.closed_sets.begin(), space.closed_sets.end()) == expected;
}

Outcome alexandrov_round_trip() {
  Outcome o;
  std::size_t checked = 0;
  auto round_trip = [&](const Poset& p, const std::string& tag) {
    const FiniteSpace space = alexandrov_space(p);
    const Preorder back = specialization_preorder(space);
    o.check(back.elements() == p.elements() && back.relation() == p.relation(), "leq not recovered: " + tag);
    o.check(order_from_closed_sets(space, p), "closed sets do not determine leq: " + tag);
    o.check(closed_sets_are_lower_sets(space, p), "closed sets differ from lower sets: " + tag);
    ++checked;
  };
  const std::vector<std::size_t> counts{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto all = all_posets(n);
    o.check(all.size() == counts[n], "poset count for n=" + std::to_string(n) + " is " + std::to_string(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) round_trip(all[i], "n=" + std::to_string(n) + " #" + std::to_string(i));
  }
  Rng rng(1);
  for (int t = 0; t < 200; ++t) round_trip(random_poset(rng, 1 + uniform_index(rng, 8)), "random #" + std::to_string(t));
  o.detail = std::to_string(checked) + " posets (88 exhaustive up to iso, 200 random), counts 1,1,2,5,16,63";
  return o;
}

// [2] ------------------------------------------------------------------------

Outcome flagness() {
  Outcome o;
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Poset p = random_poset(rng, 1 + uniform_index(rng, 7));
    const auto faces = oracle::faces_of(order_complex(p));
    o.check(faces == oracle::chains(p), "order complex faces are not the chains, poset #" + std::to_string(t));
    o.check(faces == oracle::cliques_by_extension(oracle::vertices_of(faces), oracle::edges_of(faces)),
            "order complex not flag, poset #" + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    const SimplicialComplex s = random_complex(rng, 7, 3);
    const auto faces = oracle::faces_of(barycentric_subdivision(s));
    o.check(faces == oracle::subdivision(oracle::faces_of(s)), "subdivision faces differ, complex #" + std::to_string(t));
    o.check(faces == oracle::cliques_by_extension(oracle::vertices_of(faces), oracle::edges_of(faces)),
            "subdivision not flag, complex #" + std::to_string(t));
  }
  o.detail = "100 order complexes (<=7 elements), 100 subdivisions (<=7 vertices), flag by clique enumeration";
  return o;
}

// [3] ------------------------------------------------------------------------

Outcome subdivision_invariance() {
  Outcome o;
  std::vector<std::pair<std::string, SimplicialComplex>> cases;
  for (const char* name : {"triangle", "hollow-triangle", "tetrahedron-boundary", "octahedron"})
    cases.emplace_back(name, *named_complex(name));
  Rng rng(3);
  for (int t = 0; t < 20; ++t) cases.emplace_back("random #" + std::to_string(t), random_complex(rng, 8, 3));
  std::size_t largest = 0;
  for (const auto& [name, s] : cases) {
    const int top = std::max(s.dimension(), 0);
    const auto sub = oracle::subdivision(oracle::faces_of(s));
    largest = std::max(largest, sub.size());
    for (std::uint32_t p : {2u, 3u}) {
      const FieldConfig field(p);
      const std::string tag = name + " GF(" + std::to_string(p) + ")";
      const auto lib = betti_numbers(s, top, field).betti;
      const auto lib_sub = graph_homology(one_skeleton(barycentric_subdivision(s)), top, field).betti;
      o.check(lib == lib_sub, "Betti " + join(lib) + " vs subdivision " + join(lib_sub) + ": " + tag);
      o.check(lib == oracle::betti(oracle::faces_of(s), top, p), "library Betti differ from oracle: " + tag);
      o.check(lib_sub == oracle::betti(sub, top, p), "subdivision Betti differ from oracle: " + tag);
      o.check(verify_subdivision_invariance(s, field).ok(), "verifier reports failure: " + tag);
    }
  }
  o.detail = "24 complexes x GF(2), GF(3); largest subdivision " + std::to_string(largest) + " faces";
  return o;
}

// [4] ------------------------------------------------------------------------

std::map<Cell, std::size_t> sublevel_cells(const std::map<Cell, std::size_t>& cells, const Poset& p, std::size_t v) {
  std::map<Cell, std::size_t> out;
  for (const auto& [c, w] : cells)
    if (p.leq(w, v)) out[c] = w;
  return out;
}

std::set<Cell> cells_of_graph(const ReflexiveGraph& g) {
  std::set<Cell> out;
  for (const auto& v : g.vertices()) out.insert({v});
  for (auto [a, b] : g.edges()) {
    Cell c{g.vertices()[a], g.vertices()[b]};
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

/// phi by direct filtering and from_persistent o phi = id, compared on named cells.
void oracle_equivalence(Outcome& o, const PWeightedGraph& w, const std::string& tag) {
  const auto cells = w.weighted_cells();
  const PersistentGraph f = phi(w);
  for (std::size_t v = 0; v < w.poset().size(); ++v) {
    std::set<Cell> expected;
    for (const auto& [c, x] : sublevel_cells(cells, w.poset(), v)) expected.insert(c);
    o.check(cells_of_graph(f.graph_at(v)) == expected, "phi level " + w.poset().name(v) + " wrong: " + tag);
  }
  o.check(from_persistent(f).weighted_cells() == cells, "from_persistent(phi(W)) != W: " + tag);
}

std::vector<std::pair<std::string, Poset>> shapes() {
  Rng rng(5);
  return {{"chain3", *named_poset("chain3")}, {"diamond", *named_poset("diamond")}, {"random5", random_poset(rng, 5)}};
}

Outcome equivalence() {
  Outcome o;
  const ExhaustiveReports ex = verify_exhaustive(3, 2);
  o.check(ex.equivalence.ok(), "exhaustive equivalence: " +
                                   (ex.equivalence.failures.empty() ? "" : ex.equivalence.failures.front()));
  std::size_t exhaustive = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (const auto& w : exhaustive_weighted_graphs(p, 2)) {
        oracle_equivalence(o, w, "exhaustive n=" + std::to_string(n));
        ++exhaustive;
      }
  std::size_t checks = ex.equivalence.passed;
  for (const auto& [name, p] : shapes()) {
    const VerificationReport r = verify_equivalence(p, 100, 4);
    o.check(r.ok(), name + ": " + (r.failures.empty() ? "" : r.failures.front()));
    checks += r.passed;
    Rng rng(4);
    for (int t = 0; t < 100; ++t) oracle_equivalence(o, random_weighted_graph(rng, p), name + " #" + std::to_string(t));
  }
  o.detail = std::to_string(exhaustive) + " exhaustive instances + 3x100 random; " + std::to_string(checks) +
             " verifier checks";
  return o;
}

// [5] ------------------------------------------------------------------------

Outcome adjunctions() {
  Outcome o;
  const ExhaustiveReports ex = verify_exhaustive(3, 2);
  std::size_t passed = 0, skipped = 0;
  for (const VerificationReport* r : {&ex.adjunction_phi_psi, &ex.adjunction_psi_phi}) {
    o.check(r->ok(), "exhaustive " + r->name + ": " + (r->failures.empty() ? "" : r->failures.front()));
    passed += r->passed;
    skipped += r->skipped;
  }
  o.check(ex.adjunction_phi_psi.skipped == 0, "exhaustive uniqueness enumeration incomplete");
  for (const auto& [name, p] : shapes()) {
    const VerificationReport a = verify_adjunction_phi_psi(p, 100, 5);
    const VerificationReport b = verify_adjunction_psi_phi(p, 100, 5);
    o.check(a.ok(), "adjunction-1 " + name + ": " + (a.failures.empty() ? "" : a.failures.front()));
    o.check(b.ok(), "adjunction-2 " + name + ": " + (b.failures.empty() ? "" : b.failures.front()));
    passed += a.passed + b.passed;
    skipped += a.skipped + b.skipped;
  }
  o.detail = std::to_string(passed) + " cell-level checks; uniqueness enumerated on every source with <=8 cells, " +
             std::to_string(skipped) + " larger sources checked without it";
  return o;
}

// [6] ------------------------------------------------------------------------

bool injective_maps(const PersistentGraph& f) {
  for (const auto& [key, map] : f.cover_maps()) {
    std::set<std::size_t> image(map.vertex_map.begin(), map.vertex_map.end());
    if (image.size() != map.vertex_map.size()) return false;
  }
  return true;
}

/// Order complex of the T0 quotient, by brute force, with classes named by
/// their sorted members.
struct QuotientComplex {
  oracle::Faces faces;
  std::vector<std::string> class_of;  // point -> class name
};

QuotientComplex quotient_complex(const Preorder& x) {
  QuotientComplex out;
  const std::size_t n = x.size();
  std::vector<std::string> names;
  std::vector<std::size_t> representative;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::string> members;
    for (std::size_t b = 0; b < n; ++b)
      if (x.leq(a, b) && x.leq(b, a)) members.push_back(x.name(b));
    std::sort(members.begin(), members.end());
    std::string name;
    for (const auto& m : members) name += m + "~";
    out.class_of.push_back(name);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(name);
      representative.push_back(a);
    }
  }
  const std::size_t k = names.size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    bool chain = true;
    oracle::Face f;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(m >> i & 1)) continue;
      for (std::size_t j = 0; j < k; ++j)
        if ((m >> j & 1) && !x.leq(representative[i], representative[j]) && !x.leq(representative[j], representative[i]))
          chain = false;
      f.push_back(names[i]);
    }
    if (!chain) continue;
    std::sort(f.begin(), f.end());
    out.faces.insert(f);
  }
  return out;
}

Outcome finite_space_filtrations() {
  Outcome o;
  Rng rng(6);
  std::size_t accepted = 0, rejected = 0, attempts = 0, comparisons = 0;
  while (accepted < 50 && attempts < 10000) {
    ++attempts;
    const SpaceFiltration tau = random_space_filtration(rng, 1 + uniform_index(rng, 4), 8);
    validate(tau);
    const PersistentGraph theta = space_filtration_to_graph(tau);
    if (!injective_maps(theta)) {
      ++rejected;
      continue;
    }
    ++accepted;
    const std::string tag = "instance #" + std::to_string(accepted);
    const PWeightedGraph w = from_persistent(to_inclusion_functor(theta));
    const ChainFiltration f = weight_filtration(w, Direction::ascending, 2);
    const auto grades = chain_grades(tau.levels);
    const auto order = tau.levels.linear_extension();
    std::vector<QuotientComplex> q;
    for (auto v : order) q.push_back(quotient_complex(tau.spaces[v]));
    for (std::uint32_t p : {2u, 3u}) {
      const Barcode b = barcode(f, 2, FieldConfig(p));
      const RankInvariant direct = order_complex_rank_invariant(tau, 2, FieldConfig(p));
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i; j < order.size(); ++j) {
          const std::size_t u = order[i], v = order[j];
          const auto point_map = space_map(tau, u, v);
          std::map<std::string, std::string> class_map;
          for (std::size_t x = 0; x < point_map.size(); ++x) class_map[q[i].class_of[x]] = q[j].class_of[point_map[x]];
          const auto ti = f.threshold_at(grades[u]), tj = f.threshold_at(grades[v]);
          for (int d = 0; d <= 2; ++d) {
            const std::size_t from_barcode = ti ? b.alive_over(d, *ti, *tj) : 0;
            const std::size_t expected = oracle::map_rank(q[i].faces, q[j].faces, class_map, d, p);
            o.check(from_barcode == expected, "H" + std::to_string(d) + " rank " + tau.levels.name(u) + "->" +
                                                  tau.levels.name(v) + ": barcode " + std::to_string(from_barcode) +
                                                  ", order complex " + std::to_string(expected) + " (" + tag + ")");
            o.check(direct.at(d, u, v) == expected, "library order-complex rank differs from oracle (" + tag + ")");
            ++comparisons;
          }
        }
    }
  }
  o.check(accepted == 50, "only " + std::to_string(accepted) + " injective instances generated");
  o.detail = std::to_string(accepted) + " injective filtrations (" + std::to_string(rejected) +
             " draws with merging quotients rejected), " + std::to_string(comparisons) + " rank comparisons, GF(2) and GF(3)";
  return o;
}

// [7] ------------------------------------------------------------------------

std::map<oracle::Face, Decimal> birth_grades(const ChainFiltration& f) {
  std::map<oracle::Face, Decimal> out;
  const auto& s = f.complex();
  for (int d = 0; d <= s.dimension(); ++d)
    for (std::size_t k = 0; k < s.faces(d).size(); ++k) {
      auto names = s.face_names(s.faces(d)[k]);
      std::sort(names.begin(), names.end());
      out[names] = f.grades()[f.birth(d, k)];
    }
  return out;
}

Outcome rips_as_weight_filtration() {
  Outcome o;
  Rng rng(7);
  std::size_t faces = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + uniform_index(rng, 7);
    const MetricData m = random_metric(rng, n);
    std::set<Decimal> values{Decimal{}};
    for (const auto& d : m.distance) values.insert(d);
    const std::vector<Decimal> eps(values.begin(), values.end());
    const ChainFiltration vr = vietoris_rips(m, eps, static_cast<int>(n));
    const ChainFiltration wf = weight_filtration(distance_weighted_graph(m), Direction::ascending, static_cast<int>(n));
    const auto a = birth_grades(vr), b = birth_grades(wf);
    const std::string tag = "metric #" + std::to_string(t);
    o.check(a == b, "birth grades differ: " + tag);
    // Brute force: a point set enters at its largest pairwise distance.
    std::map<oracle::Face, Decimal> expected;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      oracle::Face f;
      Decimal diameter{};
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = 0; j < i; ++j)
          if ((mask >> j & 1) && m.d(i, j) > diameter) diameter = m.d(i, j);
        f.push_back(m.points[i]);
      }
      std::sort(f.begin(), f.end());
      expected[f] = diameter;
    }
    o.check(a == expected, "Vietoris-Rips differs from brute force: " + tag);
    faces += a.size();
  }
  o.detail = "50 metrics (<=7 points), " + std::to_string(faces) + " faces matched with identical birth grades";
  return o;
}

// [8] ------------------------------------------------------------------------

Outcome known_betti() {
  Outcome o;
  using B = std::vector<std::size_t>;
  const FieldConfig f(2);
  const auto hollow = betti_numbers(*named_complex("hollow-triangle"), 1, f).betti;
  const auto tet = betti_numbers(*named_complex("tetrahedron-boundary"), 2, f).betti;
  const auto octa = graph_homology(one_skeleton(*named_complex("octahedron")), 2, f).betti;
  const auto c4 = graph_homology(
      ReflexiveGraph::from_named_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}), 1, f).betti;
  o.check(hollow == B{1, 1}, "hollow triangle " + join(hollow));
  o.check(tet == B{1, 0, 1}, "tetrahedron boundary " + join(tet));
  o.check(octa == B{1, 0, 1}, "octahedron " + join(octa));
  o.check(c4 == B{1, 1}, "4-cycle " + join(c4));
  o.detail = "hollow triangle " + join(hollow) + ", tetrahedron boundary " + join(tet) + ", octahedron " + join(octa) +
             ", 4-cycle " + join(c4);
  return o;
}

// [9] ------------------------------------------------------------------------

struct CorpusEntry {
  std::string name;
  ChainFiltration filtration;
  int max_degree;
};

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, ChainFiltration f, int d) { out.push_back({std::move(name), std::move(f), d}); };
  const auto triangle = parse_weighted_graph("edge: a b 1\nedge: a c 2\nedge: b c 3\n");
  add("triangle asc", weight_filtration(triangle, Direction::ascending, 1), 1);
  add("triangle desc", weight_filtration(triangle, Direction::descending, 1), 1);
  add("4-cycle", weight_filtration(parse_weighted_graph("edge: a b 1\nedge: b c 1\nedge: c d 1\nedge: a d 2\n"),
                                   Direction::ascending, 1), 1);
  MetricData square{{"p", "q", "r", "s"}, {}};
  const Decimal diag = *Decimal::parse("1.41421356");
  square.distance = {0, 1, diag, 1, 1, 0, 1, diag, diag, 1, 0, 1, 1, diag, 1, 0};
  add("unit square", vietoris_rips(square, {1, *Decimal::parse("1.4"), *Decimal::parse("1.5")}, 1), 1);
  add("empty", weight_filtration(parse_weighted_graph(""), Direction::ascending, 1), 1);

  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::string> names;
    for (std::size_t i = 0, n = 1 + uniform_index(rng, 5); i < n; ++i) names.push_back(std::to_string(i + 1));
    const auto w = random_weighted_graph(rng, Poset::chain(names), 7);
    add("random weights #" + std::to_string(t) + " asc", weight_filtration(w, Direction::ascending, 2), 2);
    add("random weights #" + std::to_string(t) + " desc", weight_filtration(w, Direction::descending, 2), 2);
  }
  for (int t = 0; t < 15; ++t) {
    const auto m = random_metric(rng, 2 + uniform_index(rng, 6));
    std::set<Decimal> values;
    for (const auto& d : m.distance) values.insert(d);
    add("random rips #" + std::to_string(t), vietoris_rips(m, {values.begin(), values.end()}, 2), 2);
  }
  const auto net = parse_edge_list(read_file(std::string(PPERS_DATA_DIR) + "/synthetic20.csv"));
  const auto cmp = compare_filtrations(net, std::nullopt, std::nullopt, 1, FieldConfig(2));
  add("synthetic20 weights", cmp.weight_filtration, 1);
  add("synthetic20 metric", cmp.metric_filtration, 1);
  add("synthetic20 metric coarse", with_thresholds(cmp.metric_filtration, {1, 2, 3, 4, 5, 6, 8, 10}), 1);
  return out;
}

Outcome barcode_consistency() {
  Outcome o;
  std::size_t levels_checked = 0, pairs_checked = 0;
  const auto entries = corpus();
  for (const auto& e : entries) {
    const ChainFiltration& f = e.filtration;
    const std::size_t n = f.threshold_count();
    std::vector<oracle::Faces> level;
    for (std::size_t i = 0; i < n; ++i) level.push_back(oracle::level(f, i));
    const bool small = level.empty() || level.back().size() < 400;
    for (std::uint32_t p : small ? std::vector<std::uint32_t>{2, 3} : std::vector<std::uint32_t>{2}) {
      const Barcode b = barcode(f, e.max_degree, FieldConfig(p));
      const std::string tag = e.name + " GF(" + std::to_string(p) + ")";
      for (std::size_t i = 0; i < n; ++i) {
        const auto betti = oracle::betti(level[i], e.max_degree, p);
        for (int d = 0; d <= e.max_degree; ++d) {
          const std::size_t expected = static_cast<std::size_t>(d) < betti.size() ? betti[static_cast<std::size_t>(d)] : 0;
          o.check(b.alive_at(d, i) == expected, "count at threshold " + std::to_string(i) + " H" + std::to_string(d) +
                                                    ": " + std::to_string(b.alive_at(d, i)) + " vs Betti " +
                                                    std::to_string(expected) + " (" + tag + ")");
        }
        ++levels_checked;
      }
      // Inclusion ranks: every pair on small filtrations, a fixed stride on large ones.
      const std::size_t stride = n <= 24 ? 1 : n / 12;
      for (std::size_t i = 0; i < n; i += stride)
        for (std::size_t j = i + 1; j < n; j += stride)
          for (int d = 0; d <= e.max_degree; ++d) {
            const std::size_t expected = oracle::inclusion_rank(level[i], level[j], d, p);
            o.check(b.alive_over(d, i, j) == expected, "rank " + std::to_string(i) + "->" + std::to_string(j) + " H" +
                                                           std::to_string(d) + " (" + tag + ")");
            ++pairs_checked;
          }
    }
  }
  o.detail = std::to_string(entries.size()) + " filtrations, " + std::to_string(levels_checked) +
             " threshold Betti checks, " + std::to_string(pairs_checked) + " inclusion-rank checks";
  return o;
}

// [10] -----------------------------------------------------------------------

Outcome determinism() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / ("ppers_acceptance_" + std::to_string(std::random_device{}()));
  const std::string input = std::string(PPERS_DATA_DIR) + "/synthetic20.csv";
  for (const char* run : {"a", "b"}) {
    const std::string cmd = std::string("\"") + PPERS_CLI_PATH + "\" compare \"" + input + "\" --seed 0 --format json,csv --out \"" +
                            (root / run).string() + "\" > /dev/null 2>&1";
    o.check(std::system(cmd.c_str()) == 0, std::string("compare run ") + run + " failed");
  }
  std::size_t files = 0;
  if (fs::exists(root / "a"))
    for (const auto& entry : fs::directory_iterator(root / "a")) {
      const fs::path other = root / "b" / entry.path().filename();
      o.check(fs::exists(other) && read_file(entry.path().string()) == read_file(other.string()),
              entry.path().filename().string() + " differs between runs");
      ++files;
    }
  o.check(files >= 5, "expected at least 5 output files, found " + std::to_string(files));
  fs::remove_all(root);
  o.detail = std::to_string(files) + " output files byte-identical across two processes";
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "Alexandrov round trip", 10, alexandrov_round_trip);
  ok &= run_criterion(2, "flagness", 30, flagness);
  ok &= run_criterion(3, "subdivision invariance", 60, subdivision_invariance);
  ok &= run_criterion(4, "equivalence", 30, equivalence);
  ok &= run_criterion(5, "adjunctions", 60, adjunctions);
  ok &= run_criterion(6, "finite-space filtrations", 120, finite_space_filtrations);
  ok &= run_criterion(7, "Vietoris-Rips as weight filtration", 30, rips_as_weight_filtration);
  ok &= run_criterion(8, "known Betti numbers", 10, known_betti);
  ok &= run_criterion(9, "barcode consistency", 60, barcode_consistency);
  ok &= run_criterion(10, "determinism of compare", 30, determinism);
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << "\n";
  return ok ? 0 : 1;
}
