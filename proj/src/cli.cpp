#include "ppers/cli.hpp"

#include "ppers/error.hpp"
#include "ppers/homology.hpp"
#include "ppers/io.hpp"
#include "ppers/kernels.hpp"
#include "ppers/persistence.hpp"
#include "ppers/random.hpp"
#include "ppers/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <set>

namespace ppers {

namespace {

struct RunConfig {
  std::string input;
  std::string poset;
  std::string complex;
  std::uint32_t field = 2;
  int max_dim = -1;
  std::string direction = "asc";
  std::string thresholds;
  std::string epsilons;
  std::size_t trials = 50;
  std::size_t max_size = 3;
  std::uint64_t seed = 0;
  std::string out = ".";
  std::vector<std::string> formats{"json"};
  std::vector<std::string> suites;
  bool all = false;
  bool keep_zero_length = false;
  std::string isa;
};

std::string join_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

void prepare_out(const RunConfig& c) { std::filesystem::create_directories(c.out); }

bool wants(const RunConfig& c, const std::string& format) {
  return std::find(c.formats.begin(), c.formats.end(), format) != c.formats.end();
}

std::string show(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

Poset load_poset(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_poset(read_file(spec));
  if (auto p = named_poset(spec)) return *p;
  throw Error("no poset file or built-in poset named '" + spec + "'");
}

int cmd_betti(const RunConfig& c, std::ostream& out) {
  const FieldConfig field(c.field);
  std::vector<std::size_t> betti;
  if (!c.complex.empty()) {
    auto s = named_complex(c.complex);
    if (!s) throw Error("unknown built-in complex '" + c.complex + "'");
    betti = betti_numbers(*s, c.max_dim >= 0 ? c.max_dim : std::max(s->dimension(), 0), field).betti;
  } else {
    if (c.input.empty()) throw Error("betti needs an input file or --complex");
    const std::string text = read_file(c.input);
    if (looks_like_graph(text)) {
      const ReflexiveGraph g = parse_graph(text);
      const int top = c.max_dim >= 0 ? c.max_dim : std::max(clique_complex(g).dimension(), 0);
      betti = graph_homology(g, top, field).betti;
    } else {
      const SimplicialComplex s = parse_complex(text);
      betti = betti_numbers(s, c.max_dim >= 0 ? c.max_dim : std::max(s.dimension(), 0), field).betti;
    }
  }
  out << "betti: " << show(betti) << "\n";
  prepare_out(c);
  write_file_atomic(join_path(c.out, "betti.json"), betti_json(betti));
  return kExitOk;
}

Direction parse_direction(const std::string& d) {
  if (d == "asc" || d == "ascending") return Direction::ascending;
  if (d == "desc" || d == "descending") return Direction::descending;
  throw Error("direction must be asc or desc");
}

void write_barcode(const RunConfig& c, const std::string& stem, const Barcode& b, const std::string& title) {
  if (wants(c, "json")) write_file_atomic(join_path(c.out, stem + ".json"), barcode_json(b));
  if (wants(c, "csv")) write_file_atomic(join_path(c.out, stem + ".csv"), barcode_csv(b));
  if (wants(c, "svg")) write_file_atomic(join_path(c.out, stem + ".svg"), barcode_svg(b, title));
}

void summarize(std::ostream& out, const std::string& label, const Barcode& b, int max_dim) {
  for (const auto& s : barcode_stats(b, max_dim))
    out << label << "H" << s.dim << ": " << s.intervals << " intervals (" << s.infinite << " infinite)\n";
}

int cmd_barcode(const RunConfig& c, std::ostream& out) {
  if (c.input.empty()) throw Error("barcode needs an input file");
  const FieldConfig field(c.field);
  const int max_dim = c.max_dim >= 0 ? c.max_dim : 1;
  const Direction dir = parse_direction(c.direction);
  const std::string text = read_file(c.input);
  PWeightedGraph w;
  if (!looks_like_graph(text)) {
    w = network_graph(parse_edge_list(text), dir);
  } else {
    std::optional<Poset> p;
    if (!c.poset.empty()) p = load_poset(c.poset);
    w = parse_weighted_graph(text, p ? &*p : nullptr);
  }
  if (!w.poset().is_chain())
    throw Error("weights are not totally ordered; use the rank-invariant command for general posets");
  ChainFiltration f = weight_filtration(w, dir, max_dim);
  if (!c.thresholds.empty()) f = with_thresholds(f, parse_decimal_list(c.thresholds));
  Barcode b = barcode(f, max_dim, field);
  if (!c.keep_zero_length) b = b.reported();
  prepare_out(c);
  write_barcode(c, "barcode", b, "weight filtration (" + c.direction + ")");
  summarize(out, "", b, max_dim);
  return kExitOk;
}

int cmd_rank_invariant(const RunConfig& c, std::ostream& out) {
  if (c.input.empty()) throw Error("rank-invariant needs a weighted graph file");
  const FieldConfig field(c.field);
  const int max_dim = c.max_dim >= 0 ? c.max_dim : 1;
  std::optional<Poset> p;
  if (!c.poset.empty()) p = load_poset(c.poset);
  const PWeightedGraph w = parse_weighted_graph(read_file(c.input), p ? &*p : nullptr);
  const RankInvariant r = rank_invariant(phi(w), max_dim, field);
  prepare_out(c);
  write_file_atomic(join_path(c.out, "rank_invariant.json"), rank_invariant_json(r));
  for (const auto& e : r.entries)
    out << "H" << e.dim << " " << r.poset.name(e.u) << " <= " << r.poset.name(e.v) << ": " << e.rank << "\n";
  return kExitOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.input.empty()) throw Error("compare needs an edge list");
  const FieldConfig field(c.field);
  const int max_dim = c.max_dim >= 0 ? c.max_dim : 1;
  std::optional<std::vector<Decimal>> eps, thresholds;
  if (!c.epsilons.empty()) eps = parse_decimal_list(c.epsilons);
  if (!c.thresholds.empty()) thresholds = parse_decimal_list(c.thresholds);
  const EdgeList edges = parse_edge_list(read_file(c.input));
  const Comparison cmp = compare_filtrations(edges, eps, thresholds, max_dim, field);
  for (const auto& w : cmp.warnings) err << "warning: " << w << "\n";
  const Barcode wb = c.keep_zero_length ? cmp.weight_barcode : cmp.weight_barcode.reported();
  const Barcode mb = c.keep_zero_length ? cmp.metric_barcode : cmp.metric_barcode.reported();

  prepare_out(c);
  RunConfig files = c;
  files.formats = {"json", "svg"};
  if (wants(c, "csv")) files.formats.push_back("csv");
  write_barcode(files, "weight_barcode", wb, "weight filtration (descending)");
  write_barcode(files, "metric_barcode", mb, "Vietoris-Rips on shortest paths");

  std::string stats = "{\n";
  stats += "  \"seed\": " + std::to_string(c.seed) + ",\n";
  stats += "  \"field\": " + std::to_string(c.field) + ",\n";
  stats += "  \"max_dim\": " + std::to_string(max_dim) + ",\n";
  stats += "  \"weight\": {\"thresholds\": " + std::to_string(cmp.weight_filtration.threshold_count()) +
           ", \"stats\": " + stats_json(cmp.weight_stats) + "},\n";
  stats += "  \"metric\": {\"points\": " + std::to_string(cmp.metric_filtration.complex().vertex_count()) +
           ", \"epsilons\": " + std::to_string(cmp.metric_filtration.threshold_count()) +
           ", \"stats\": " + stats_json(cmp.metric_stats) + "},\n";
  stats += "  \"warnings\": [";
  for (std::size_t i = 0; i < cmp.warnings.size(); ++i)
    stats += (i ? ", " : "") + nlohmann::json(cmp.warnings[i]).dump();
  stats += "]\n}\n";
  write_file_atomic(join_path(c.out, "stats.json"), stats);
  summarize(out, "weight ", wb, max_dim);
  summarize(out, "metric ", mb, max_dim);
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  static const std::vector<std::string> known{"equivalence", "adjunction-1", "adjunction-2",
                                              "exhaustive",  "subdivision",  "flagness"};
  std::vector<std::string> suites = c.all ? known : c.suites;
  if (suites.empty()) throw Error("choose a suite (equivalence, adjunction-1, adjunction-2, exhaustive, "
                                  "subdivision, flagness) or --all");
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw Error("unknown suite '" + s + "'");

  std::vector<std::pair<std::string, Poset>> posets;
  if (!c.poset.empty()) {
    posets.emplace_back(c.poset, load_poset(c.poset));
  } else {
    posets.emplace_back("chain3", *named_poset("chain3"));
    posets.emplace_back("diamond", *named_poset("diamond"));
    Rng rng(c.seed);
    posets.emplace_back("random5", random_poset(rng, 5));
  }
  const FieldConfig field(c.field);

  bool ok = true;
  auto report = [&](const std::string& label, const VerificationReport& r) {
    ok = ok && r.ok();
    out << label << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.passed << " passed, " << r.failed
        << " failed, " << r.skipped << " skipped)\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  };
  for (const auto& suite : suites) {
    if (suite == "equivalence" || suite == "adjunction-1" || suite == "adjunction-2") {
      for (const auto& [name, p] : posets) {
        VerificationReport r = suite == "equivalence"    ? verify_equivalence(p, c.trials, c.seed)
                               : suite == "adjunction-1" ? verify_adjunction_phi_psi(p, c.trials, c.seed)
                                                         : verify_adjunction_psi_phi(p, c.trials, c.seed);
        report(suite + " [" + name + "]", r);
      }
    } else if (suite == "exhaustive") {
      const ExhaustiveReports r = verify_exhaustive(c.max_size);
      report("exhaustive equivalence", r.equivalence);
      report("exhaustive adjunction-1", r.adjunction_phi_psi);
      report("exhaustive adjunction-2", r.adjunction_psi_phi);
    } else if (suite == "subdivision") {
      VerificationReport r("subdivision");
      if (!c.complex.empty()) {
        auto s = named_complex(c.complex);
        if (!s) throw Error("unknown built-in complex '" + c.complex + "'");
        r.merge(verify_subdivision_invariance(*s, field));
      } else {
        for (const auto& name : named_complex_list()) r.merge(verify_subdivision_invariance(*named_complex(name), field));
        Rng rng(c.seed);
        for (std::size_t t = 0; t < c.trials; ++t) r.merge(verify_subdivision_invariance(random_complex(rng, 8, 3), field));
      }
      report("subdivision", r);
    } else {
      report("flagness", verify_flagness(c.trials, c.seed));
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistent homology of finite spaces and weighted networks", "ppers"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--isa", c.isa, "Kernel variant: scalar or avx2 (default: best available)");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", c.field, "Prime field characteristic")->capture_default_str();
    sub->add_option("--max-dim", c.max_dim, "Highest homology degree");
    sub->add_option("--out", c.out, "Output directory")->capture_default_str();
  };
  auto* betti = app.add_subcommand("betti", "Betti numbers of a complex or of a graph's clique complex");
  betti->add_option("input", c.input, "Complex file (faces) or graph file (vertex:/edge: lines)");
  betti->add_option("--complex", c.complex, "Built-in complex instead of a file");
  common(betti);

  auto* bc = app.add_subcommand("barcode", "Barcode of a weight filtration");
  bc->add_option("input", c.input, "Edge list (CSV) or weighted graph file (vertex:/edge: lines)")->required();
  bc->add_option("--poset", c.poset, "Poset file or built-in poset for weighted graph files");
  bc->add_option("--direction", c.direction, "asc or desc")->capture_default_str();
  bc->add_option("--thresholds", c.thresholds, "Explicit grades, comma separated");
  bc->add_option("--format", c.formats, "json,csv,svg")->delimiter(',');
  bc->add_flag("--keep-zero-length", c.keep_zero_length, "Report intervals with birth = death");
  common(bc);

  auto* rk = app.add_subcommand("rank-invariant", "Rank invariant over a general poset");
  rk->add_option("input", c.input, "Weighted graph file")->required();
  rk->add_option("--poset", c.poset, "Poset file or built-in poset (default: decimal weights)");
  common(rk);

  auto* cmp = app.add_subcommand("compare", "Weight filtration against Vietoris-Rips on shortest paths");
  cmp->add_option("input", c.input, "Edge list (.csv)")->required();
  cmp->add_option("--epsilons", c.epsilons, "Vietoris-Rips scales, comma separated");
  cmp->add_option("--thresholds", c.thresholds, "Weight grades, comma separated");
  cmp->add_option("--format", c.formats, "Add csv to also write CSV barcodes")->delimiter(',');
  cmp->add_option("--seed", c.seed, "Recorded in stats.json")->capture_default_str();
  cmp->add_flag("--keep-zero-length", c.keep_zero_length, "Report intervals with birth = death");
  common(cmp);

  auto* ver = app.add_subcommand("verify", "Run property verifiers");
  ver->add_option("suites", c.suites, "equivalence adjunction-1 adjunction-2 exhaustive subdivision flagness");
  ver->add_flag("--all", c.all, "Run every suite");
  ver->add_option("--poset", c.poset, "Poset file or built-in poset (default: chain3, diamond, random5)");
  ver->add_option("--complex", c.complex, "Built-in complex for the subdivision suite");
  ver->add_option("--max-size", c.max_size, "Largest poset size for the exhaustive suite")->capture_default_str();
  ver->add_option("--trials", c.trials, "Random instances per suite")->capture_default_str();
  ver->add_option("--seed", c.seed, "Seed for all randomness")->capture_default_str();
  ver->add_option("--field", c.field, "Prime field characteristic")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    for (const auto& f : c.formats)
      if (f != "json" && f != "csv" && f != "svg") throw Error("unknown format '" + f + "'");
    if (!c.isa.empty()) {
      if (c.isa == "scalar") kernels::force_isa(kernels::Isa::scalar);
      else if (c.isa == "avx2") kernels::force_isa(kernels::Isa::avx2);
      else throw Error("--isa must be scalar or avx2");
    }
    if (betti->parsed()) return cmd_betti(c, out);
    if (bc->parsed()) return cmd_barcode(c, out);
    if (rk->parsed()) return cmd_rank_invariant(c, out);
    if (cmp->parsed()) return cmd_compare(c, out, err);
    return cmd_verify(c, out);
  } catch (const ParseError& e) {
    err << "error: " << (c.input.empty() ? "" : c.input + ": ") << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace ppers
