#pragma once

#include "ppers/complex.hpp"
#include "ppers/linalg.hpp"
#include "ppers/report.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ppers {

/// Boundary matrices of a simplicial complex over GF(p).
struct ChainComplexData {
  FieldConfig field;
  /// basis[n] lists the n-faces in the complex's sorted order, n = 0..max_degree+1.
  std::vector<std::vector<Simplex>> basis;
  /// boundary[n] : C_n -> C_{n-1}; boundary[0] has zero rows.
  std::vector<ColumnMatrix> boundary;
};

/// Sparse chain: (face, coefficient) pairs.
using Chain = std::vector<std::pair<Simplex, std::uint32_t>>;

struct HomologySummary {
  /// betti[n] for n = 0..min(max_degree, dim); empty for the empty complex.
  std::vector<std::size_t> betti;
  /// One cycle per homology generator, per degree (filled on request).
  std::vector<std::vector<Chain>> representatives;
};

struct InducedMap {
  /// rows: basis of H_n(target), cols: basis of H_n(source).
  ColumnMatrix matrix;
  std::size_t rank = 0;
};

/// Sign convention: column [p0..pn] has (-1)^i on the facet omitting p_i.
/// Checks boundary[n-1] * boundary[n] == 0 and throws `Error` otherwise.
ChainComplexData chain_complex(const SimplicialComplex& s, int max_degree, FieldConfig field);

HomologySummary betti_numbers(const SimplicialComplex& s, int max_degree, FieldConfig field,
                              bool with_representatives = false);

/// Betti numbers of the clique complex Cl(G), capped at max_degree + 1.
HomologySummary graph_homology(const ReflexiveGraph& g, int max_degree, FieldConfig field);

/// Cycles whose classes form a basis of H_n(s).
std::vector<std::vector<std::uint32_t>> homology_basis(const ChainComplexData& cc, int n);

/// Chain map on C_n: a face goes to sign * f(face) when f is injective on it,
/// and to zero when vertices collapse.
ColumnMatrix chain_map(const SimplicialMap& f, int n, FieldConfig field);

/// Matrix of f_* : H_n(source) -> H_n(target) in the bases of homology_basis.
InducedMap induced_map_on_homology(const SimplicialMap& f, int n, FieldConfig field);

/// Compares betti_numbers(s) with the graph homology of the 1-skeleton of the
/// barycentric subdivision, degree by degree.
VerificationReport verify_subdivision_invariance(const SimplicialComplex& s, FieldConfig field);

/// Connected components of the 1-skeleton, by traversal.
std::size_t connected_components(const ReflexiveGraph& g);

}  // namespace ppers
