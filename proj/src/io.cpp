#include "ppers/io.hpp"

#include "ppers/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ppers {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

/// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (!line.empty()) out.push_back({number, std::move(line)});
    start = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

/// Splits "key: rest" and returns the key, or nullopt when there is no colon.
std::optional<std::string> keyword(const std::string& line, std::string& rest) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) return std::nullopt;
  rest = line.substr(colon + 1);
  return trim(line.substr(0, colon));
}

void add_unique(std::vector<std::string>& list, std::set<std::string>& seen, const std::string& name) {
  if (seen.insert(name).second) list.push_back(name);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

Poset parse_poset(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("poset file has no 'elements:' line", 1);
  std::string rest;
  if (keyword(lines[0].text, rest) != "elements") throw ParseError("expected 'elements: ...'", lines[0].number);
  std::vector<std::string> elements = tokens(rest);
  std::set<std::string> known(elements.begin(), elements.end());
  if (known.size() != elements.size()) throw ParseError("duplicate element", lines[0].number);
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (keyword(lines[i].text, rest) != "cover") throw ParseError("expected 'cover: a b'", lines[i].number);
    auto t = tokens(rest);
    if (t.size() != 2) throw ParseError("'cover:' takes exactly two elements", lines[i].number);
    for (const auto& name : t)
      if (!known.count(name)) throw ParseError("unknown element '" + name + "'", lines[i].number);
    covers.emplace_back(t[0], t[1]);
  }
  return poset_from_covers(std::move(elements), covers);
}

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<std::vector<std::string>> faces;
  for (const auto& line : content_lines(text)) {
    if (line.text.find(':') != std::string::npos)
      throw ParseError("unexpected ':' in a face line", line.number);
    faces.push_back(tokens(line.text));
  }
  return SimplicialComplex::from_named_faces(faces);
}

bool looks_like_graph(std::string_view text) {
  for (const auto& line : content_lines(text)) {
    std::string rest;
    auto key = keyword(line.text, rest);
    return key == "edge" || key == "vertex";
  }
  return false;
}

ReflexiveGraph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const auto& line : content_lines(text)) {
    std::string rest;
    auto key = keyword(line.text, rest);
    auto t = tokens(rest);
    if (key == "vertex" && t.size() == 1) {
      add_unique(vertices, seen, t[0]);
    } else if (key == "edge" && t.size() == 2) {
      if (t[0] == t[1]) throw ParseError("self-loops are implicit; drop this edge", line.number);
      if (!seen_edges.insert(std::minmax(t[0], t[1])).second) throw ParseError("duplicate edge", line.number);
      add_unique(vertices, seen, t[0]);
      add_unique(vertices, seen, t[1]);
      edges.emplace_back(t[0], t[1]);
    } else {
      throw ParseError("expected 'vertex: u' or 'edge: u v'", line.number);
    }
  }
  return ReflexiveGraph::from_named_edges(std::move(vertices), edges);
}

PWeightedGraph parse_weighted_graph(std::string_view text, const Poset* poset) {
  struct Row {
    std::size_t line;
    std::vector<std::string> names;
    std::string weight;
  };
  std::vector<Row> vertex_rows, edge_rows;
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  for (const auto& line : content_lines(text)) {
    std::string rest;
    auto key = keyword(line.text, rest);
    auto t = tokens(rest);
    if (key == "vertex" && t.size() == 2) {
      vertex_rows.push_back({line.number, {t[0]}, t[1]});
      add_unique(vertices, seen, t[0]);
    } else if (key == "edge" && t.size() == 3) {
      if (t[0] == t[1]) throw ParseError("self-loops are implicit; drop this edge", line.number);
      edge_rows.push_back({line.number, {t[0], t[1]}, t[2]});
      add_unique(vertices, seen, t[0]);
      add_unique(vertices, seen, t[1]);
    } else {
      throw ParseError("expected 'vertex: u w' or 'edge: u v w'", line.number);
    }
  }

  Poset p;
  std::map<std::string, std::size_t> element;
  auto weight_of = [&](const Row& r) {
    auto it = element.find(r.weight);
    if (it == element.end()) throw ParseError("unknown poset element '" + r.weight + "'", r.line);
    return it->second;
  };
  if (poset) {
    p = *poset;
    for (std::size_t i = 0; i < p.size(); ++i) element[p.name(i)] = i;
  } else {
    std::set<Decimal> values;
    for (auto* rows : {&vertex_rows, &edge_rows})
      for (auto& r : *rows) {
        auto d = Decimal::parse(r.weight);
        if (!d) throw ParseError("weight '" + r.weight + "' is not a decimal number", r.line);
        r.weight = d->to_string();
        values.insert(*d);
      }
    std::vector<std::string> names;
    for (const auto& v : values) names.push_back(v.to_string());
    p = Poset::chain(names);
    for (std::size_t i = 0; i < p.size(); ++i) element[p.name(i)] = i;
  }

  std::vector<std::pair<std::string, std::string>> named;
  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const auto& r : edge_rows) {
    if (!seen_edges.insert(std::minmax(r.names[0], r.names[1])).second) throw ParseError("duplicate edge", r.line);
    named.emplace_back(r.names[0], r.names[1]);
  }
  ReflexiveGraph g = ReflexiveGraph::from_named_edges(vertices, named);
  std::vector<std::size_t> edge_weight(g.edge_count());
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (const auto& r : edge_rows) {
    const auto a = *g.find_vertex(r.names[0]), b = *g.find_vertex(r.names[1]);
    const auto e = *g.edge_index(a, b);
    edge_weight[e] = weight_of(r);
    incident[a].push_back(edge_weight[e]);
    incident[b].push_back(edge_weight[e]);
  }
  std::vector<std::optional<std::size_t>> vertex_weight(g.vertex_count());
  for (const auto& r : vertex_rows) {
    const auto v = *g.find_vertex(r.names[0]);
    if (vertex_weight[v]) throw ParseError("vertex '" + r.names[0] + "' is weighted twice", r.line);
    vertex_weight[v] = weight_of(r);
  }
  std::vector<std::size_t> vw;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!vertex_weight[v]) {
      // Greatest common lower bound of the incident edge weights.
      std::vector<std::size_t> lower;
      for (std::size_t c = 0; c < p.size(); ++c)
        if (std::all_of(incident[v].begin(), incident[v].end(), [&](std::size_t e) { return p.leq(c, e); }))
          lower.push_back(c);
      for (auto c : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](std::size_t d) { return p.leq(d, c); })) vertex_weight[v] = c;
      if (!vertex_weight[v]) throw Error("vertex '" + g.vertices()[v] + "' needs an explicit weight");
    }
    vw.push_back(*vertex_weight[v]);
  }
  return PWeightedGraph(std::move(g), std::move(p), std::move(vw), std::move(edge_weight));
}

EdgeList parse_edge_list(std::string_view text) {
  EdgeList out;
  std::set<std::string> seen;
  std::set<std::pair<std::string, std::string>> seen_edges;
  bool first = true;
  for (const auto& line : content_lines(text)) {
    std::vector<std::string> fields;
    std::string_view rest = line.text;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    const bool header = first && fields.size() == 3 && !Decimal::parse(fields[2]);
    first = false;
    if (header) continue;
    for (const auto& f : fields)
      if (f.empty()) throw ParseError("empty field", line.number);
    if (fields.size() == 1) {
      add_unique(out.vertices, seen, fields[0]);
      continue;
    }
    if (fields.size() != 3) throw ParseError("expected 'u,v,w' or a single vertex", line.number);
    auto w = Decimal::parse(fields[2]);
    if (!w) throw ParseError("weight '" + fields[2] + "' is not a decimal number", line.number);
    if (fields[0] == fields[1]) throw ParseError("self-loop '" + fields[0] + "'", line.number);
    if (!seen_edges.insert(std::minmax(fields[0], fields[1])).second)
      throw ParseError("duplicate edge " + fields[0] + "," + fields[1], line.number);
    add_unique(out.vertices, seen, fields[0]);
    add_unique(out.vertices, seen, fields[1]);
    out.edges.push_back({fields[0], fields[1], *w});
  }
  return out;
}

std::vector<Decimal> parse_decimal_list(std::string_view text) {
  std::vector<Decimal> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string field = trim(rest.substr(0, comma));
    auto d = Decimal::parse(field);
    if (!d) throw Error("'" + field + "' is not a decimal number");
    out.push_back(*d);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp + "'");
    out << content;
    if (!out.flush()) throw Error("cannot write '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move '" + tmp + "' to '" + path + "': " + ec.message());
}

std::string barcode_json(const Barcode& b) {
  std::string out = "[";
  for (std::size_t i = 0; i < b.intervals.size(); ++i) {
    const auto& x = b.intervals[i];
    out += i ? ",\n " : "\n ";
    out += "{\"dim\": " + std::to_string(x.dim) + ", \"birth\": " + x.birth_grade.to_string() +
           ", \"death\": " + (x.death_grade ? x.death_grade->to_string() : "null") + "}";
  }
  return out + (b.intervals.empty() ? "]\n" : "\n]\n");
}

Barcode parse_barcode_json(std::string_view text) {
  Barcode out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("barcode JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error("barcode JSON must be an array");
  auto number = [](const nlohmann::json& v) {
    if (!v.is_number()) throw Error("barcode JSON: expected a number");
    auto d = Decimal::parse(v.dump());
    if (!d) throw Error("barcode JSON: unreadable number " + v.dump());
    return *d;
  };
  for (const auto& item : j) {
    Interval x;
    x.dim = item.at("dim").get<int>();
    x.birth_grade = number(item.at("birth"));
    if (!item.at("death").is_null()) x.death_grade = number(item.at("death"));
    out.intervals.push_back(x);
  }
  return out;
}

std::string barcode_csv(const Barcode& b) {
  std::string out = "dim,birth,death\n";
  for (const auto& x : b.intervals)
    out += std::to_string(x.dim) + "," + x.birth_grade.to_string() + "," +
           (x.death_grade ? x.death_grade->to_string() : "") + "\n";
  return out;
}

std::string barcode_svg(const Barcode& b, const std::string& title) {
  constexpr double size = 600, margin = 60, span = size - 2 * margin;
  std::vector<double> values;
  for (const auto& x : b.intervals) {
    values.push_back(x.birth_grade.to_double());
    if (x.death_grade) values.push_back(x.death_grade->to_double());
  }
  double lo = 0, hi = 1;
  if (!values.empty()) {
    lo = *std::min_element(values.begin(), values.end());
    hi = *std::max_element(values.begin(), values.end());
    if (hi == lo) hi = lo + 1;
  }
  // Room above the data for infinite deaths.
  const double inf_value = hi + (hi - lo) * 0.1;
  const double top = inf_value + (hi - lo) * 0.05;
  auto sx = [&](double v) { return margin + (v - lo) / (top - lo) * span; };
  auto sy = [&](double v) { return size - margin - (v - lo) / (top - lo) * span; };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  std::string escaped;
  for (char c : title) {
    if (c == '<') escaped += "&lt;";
    else if (c == '>') escaped += "&gt;";
    else if (c == '&') escaped += "&amp;";
    else escaped += c;
  }
  out += "<text x=\"300\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" + escaped +
         "</text>\n";
  out += "<rect x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) + "\" width=\"" + fmt(span) + "\" height=\"" +
         fmt(span) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fmt(sx(lo)) + "\" y1=\"" + fmt(sy(lo)) + "\" x2=\"" + fmt(sx(top)) + "\" y2=\"" +
         fmt(sy(top)) + "\" stroke=\"gray\"/>\n";
  out += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(sy(inf_value)) + "\" x2=\"" + fmt(size - margin) +
         "\" y2=\"" + fmt(sy(inf_value)) + "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  out += "<text x=\"" + fmt(margin - 8) + "\" y=\"" + fmt(sy(inf_value) + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">inf</text>\n";
  out += "<text x=\"300\" y=\"585\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">birth</text>\n";
  out += "<text x=\"20\" y=\"300\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 20 300)\">death</text>\n";
  out += "<text x=\"" + fmt(margin) + "\" y=\"" + fmt(size - margin + 16) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(lo) + "</text>\n";
  out += "<text x=\"" + fmt(size - margin) + "\" y=\"" + fmt(size - margin + 16) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(hi) + "</text>\n";
  for (const auto& x : b.intervals) {
    const double bx = x.birth_grade.to_double();
    const double dy = x.death_grade ? x.death_grade->to_double() : inf_value;
    out += "<circle cx=\"" + fmt(sx(bx)) + "\" cy=\"" + fmt(sy(dy)) + "\" r=\"4\" fill=\"" +
           colors[std::min(x.dim, 3)] + "\" fill-opacity=\"0.7\"/>\n";
  }
  int legend = 0;
  std::set<int> dims;
  for (const auto& x : b.intervals) dims.insert(x.dim);
  for (int d : dims) {
    const double y = margin + 16 + 16 * legend++;
    out += "<circle cx=\"" + fmt(size - margin - 50) + "\" cy=\"" + fmt(y - 4) + "\" r=\"4\" fill=\"" +
           colors[std::min(d, 3)] + "\"/>\n";
    out += "<text x=\"" + fmt(size - margin - 40) + "\" y=\"" + fmt(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">H" + std::to_string(d) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string betti_json(const std::vector<std::size_t>& betti) {
  std::string out = "{\"betti\": [";
  for (std::size_t i = 0; i < betti.size(); ++i) out += (i ? ", " : "") + std::to_string(betti[i]);
  return out + "]}\n";
}

std::string rank_invariant_json(const RankInvariant& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    out += i ? ",\n " : "\n ";
    out += "{\"dim\": " + std::to_string(e.dim) + ", \"u\": " + quoted(r.poset.name(e.u)) +
           ", \"v\": " + quoted(r.poset.name(e.v)) + ", \"rank\": " + std::to_string(e.rank) + "}";
  }
  return out + (r.entries.empty() ? "]\n" : "\n]\n");
}

std::string stats_json(const std::vector<DegreeStats>& stats) {
  std::string out = "[";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const auto& s = stats[i];
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "{\"dim\": %d, \"intervals\": %zu, \"infinite\": %zu, \"mean_persistence\": %.10g, "
                  "\"max_persistence\": %.10g}",
                  s.dim, s.intervals, s.infinite, s.mean_persistence, s.max_persistence);
    out += (i ? ", " : "") + std::string(buf);
  }
  return out + "]";
}

std::optional<Poset> named_poset(const std::string& name) {
  auto build = [](std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> covers) {
    return poset_from_covers(std::move(elements), covers);
  };
  if (name == "chain3") return Poset::chain({"1", "2", "3"});
  if (name == "diamond") return build({"bottom", "left", "right", "top"},
                                      {{"bottom", "left"}, {"bottom", "right"}, {"left", "top"}, {"right", "top"}});
  if (name == "antichain2") return Poset::antichain({"u", "v"});
  if (name == "v") return build({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  if (name == "pseudo-circle")
    return build({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  if (name == "point") return Poset::chain({"0"});
  return std::nullopt;
}

std::optional<SimplicialComplex> named_complex(const std::string& name) {
  using Faces = std::vector<std::vector<std::string>>;
  if (name == "triangle") return SimplicialComplex::from_named_faces(Faces{{"a", "b", "c"}});
  if (name == "hollow-triangle")
    return SimplicialComplex::from_named_faces(Faces{{"a", "b"}, {"a", "c"}, {"b", "c"}});
  if (name == "tetrahedron-boundary")
    return SimplicialComplex::from_named_faces(Faces{{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  if (name == "octahedron") {
    Faces faces;
    for (const char* x : {"n", "s"})
      for (const char* y : {"e", "w"})
        for (const char* z : {"f", "k"}) faces.push_back({x, y, z});
    return SimplicialComplex::from_named_faces(faces);
  }
  if (name == "point") return SimplicialComplex::from_named_faces(Faces{{"a"}});
  if (name == "empty") return SimplicialComplex{};
  return std::nullopt;
}

std::vector<std::string> named_complex_list() {
  return {"triangle", "hollow-triangle", "tetrahedron-boundary", "octahedron", "point", "empty"};
}

}  // namespace ppers
