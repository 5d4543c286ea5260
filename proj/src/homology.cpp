#include "ppers/homology.hpp"

#include "ppers/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ppers {

namespace {

Simplex without(const Simplex& s, std::size_t i) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != i) out.push_back(s[k]);
  return out;
}

void check_boundary_squares_to_zero(const SimplicialComplex& s, const ChainComplexData& cc, int n) {
  const FieldConfig& f = cc.field;
  const ColumnMatrix& outer = cc.boundary[static_cast<std::size_t>(n - 1)];
  const ColumnMatrix& inner = cc.boundary[static_cast<std::size_t>(n)];
  const auto& faces = cc.basis[static_cast<std::size_t>(n)];
  for (std::size_t j = 0; j < faces.size(); ++j) {
    std::map<std::size_t, std::uint32_t> acc;
    for (std::size_t i = 0; i < faces[j].size(); ++i) {
      const auto row = *s.index_of(without(faces[j], i));
      const std::uint32_t a = inner.at(row, j);
      const auto& facet = cc.basis[static_cast<std::size_t>(n - 1)][row];
      for (std::size_t k = 0; k < facet.size(); ++k) {
        const auto row2 = *s.index_of(without(facet, k));
        acc[row2] = f.add(acc[row2], f.mul(a, outer.at(row2, row)));
      }
    }
    for (auto [row2, value] : acc)
      if (value) throw Error("boundary of a boundary is nonzero in degree " + std::to_string(n));
  }
}

}  // namespace

ChainComplexData chain_complex(const SimplicialComplex& s, int max_degree, FieldConfig field) {
  if (max_degree < 0) throw Error("max degree must be non-negative");
  ChainComplexData cc{field, {}, {}};
  const int top = max_degree + 1;
  for (int n = 0; n <= top; ++n) cc.basis.push_back(s.faces(n));
  cc.boundary.emplace_back(0, cc.basis[0].size(), field);
  for (int n = 1; n <= top; ++n) {
    const auto& cols = cc.basis[static_cast<std::size_t>(n)];
    ColumnMatrix d(cc.basis[static_cast<std::size_t>(n - 1)].size(), cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        auto row = s.index_of(without(cols[j], i));
        if (!row) throw Error("complex is missing a facet; closure is incomplete");
        d.set(*row, j, field.from_int(i % 2 ? -1 : 1));
      }
    cc.boundary.push_back(std::move(d));
  }
  for (int n = 2; n <= top; ++n) check_boundary_squares_to_zero(s, cc, n);
  return cc;
}

std::vector<std::vector<std::uint32_t>> homology_basis(const ChainComplexData& cc, int n) {
  if (n < 0 || n + 1 >= static_cast<int>(cc.boundary.size())) throw Error("degree outside the chain complex");
  const auto cycles = kernel_basis(cc.boundary[static_cast<std::size_t>(n)]);
  const ColumnMatrix& next = cc.boundary[static_cast<std::size_t>(n + 1)];
  ColumnMatrix m = next;
  for (const auto& z : cycles) m.append_column(z);
  Reduction red = reduce_columns(m);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t k = 0; k < cycles.size(); ++k)
    if (red.low[next.cols() + k]) out.push_back(cycles[k]);
  return out;
}

HomologySummary betti_numbers(const SimplicialComplex& s, int max_degree, FieldConfig field,
                              bool with_representatives) {
  HomologySummary out;
  if (s.empty()) return out;
  const int top = std::min(max_degree, s.dimension());
  if (top < 0) return out;
  ChainComplexData cc = chain_complex(s, top, field);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int n = 1; n <= top + 1; ++n) ranks[static_cast<std::size_t>(n)] = rank(cc.boundary[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= top; ++n) {
    const auto k = static_cast<std::size_t>(n);
    out.betti.push_back(cc.basis[k].size() - ranks[k] - ranks[k + 1]);
  }
  if (with_representatives) {
    for (int n = 0; n <= top; ++n) {
      std::vector<Chain> chains;
      for (const auto& z : homology_basis(cc, n)) {
        Chain c;
        for (std::size_t i = 0; i < z.size(); ++i)
          if (z[i]) c.emplace_back(cc.basis[static_cast<std::size_t>(n)][i], z[i]);
        chains.push_back(std::move(c));
      }
      out.representatives.push_back(std::move(chains));
    }
  }
  return out;
}

HomologySummary graph_homology(const ReflexiveGraph& g, int max_degree, FieldConfig field) {
  if (max_degree < 0) throw Error("max degree must be non-negative");
  return betti_numbers(clique_complex(g, max_degree + 1), max_degree, field);
}

ColumnMatrix chain_map(const SimplicialMap& f, int n, FieldConfig field) {
  const auto& source_faces = f.source.faces(n);
  const auto& target_faces = f.target.faces(n);
  ColumnMatrix m(target_faces.size(), source_faces.size(), field);
  for (std::size_t j = 0; j < source_faces.size(); ++j) {
    Simplex image;
    for (auto v : source_faces[j]) image.push_back(f.vertex_map.at(v));
    std::size_t inversions = 0;
    bool collapsed = false;
    for (std::size_t a = 0; a < image.size() && !collapsed; ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b) {
        if (image[a] == image[b]) {
          collapsed = true;
          break;
        }
        inversions += image[a] > image[b];
      }
    if (collapsed) continue;
    std::sort(image.begin(), image.end());
    auto row = f.target.index_of(image);
    if (!row) throw Error("vertex map does not send faces to faces");
    m.set(*row, j, field.from_int(inversions % 2 ? -1 : 1));
  }
  return m;
}

InducedMap induced_map_on_homology(const SimplicialMap& f, int n, FieldConfig field) {
  if (n < 0) throw Error("degree must be non-negative");
  const ChainComplexData source = chain_complex(f.source, n, field);
  const ChainComplexData target = chain_complex(f.target, n, field);
  const auto source_basis = homology_basis(source, n);
  const auto target_basis = homology_basis(target, n);
  const ColumnMatrix& target_boundaries = target.boundary[static_cast<std::size_t>(n + 1)];

  ColumnMatrix a = target_boundaries;
  for (const auto& h : target_basis) a.append_column(h);
  LinearSolver solver(std::move(a));
  const ColumnMatrix fn = chain_map(f, n, field);

  ColumnMatrix matrix(target_basis.size(), 0, field);
  for (const auto& h : source_basis) {
    ColumnMatrix hc(h.size(), 0, field);
    hc.append_column(h);
    const auto image = fn.multiply(hc).column(0);
    auto x = solver.solve(image);
    if (!x) throw Error("image of a cycle is not a cycle; map is not simplicial");
    std::vector<std::uint32_t> coords(x->begin() + static_cast<std::ptrdiff_t>(target_boundaries.cols()), x->end());
    matrix.append_column(coords);
  }
  const std::size_t r = rank(matrix);
  return {std::move(matrix), r};
}

VerificationReport verify_subdivision_invariance(const SimplicialComplex& s, FieldConfig field) {
  VerificationReport report{"subdivision"};
  const int top = std::max(s.dimension(), 0);
  const auto direct = betti_numbers(s, top, field).betti;
  const auto via_graph = graph_homology(one_skeleton(barycentric_subdivision(s)), top, field).betti;
  auto show = [](const std::vector<std::size_t>& b) {
    std::string out = "(";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? ", " : "") + std::to_string(b[i]);
    return out + ")";
  };
  report.check(direct == via_graph, "betti " + show(direct) + " != subdivided graph betti " + show(via_graph) +
                                        " over GF(" + std::to_string(field.characteristic()) + ")");
  return report;
}

std::size_t connected_components(const ReflexiveGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace ppers
