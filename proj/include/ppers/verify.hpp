#pragma once

// Executable checks of the categorical statements relating weighted graphs
// and persistent graphs. Failures are collected in reports, never thrown.

#include "ppers/poset.hpp"
#include "ppers/pweighted.hpp"
#include "ppers/report.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ppers {

/// from_persistent(phi(w)) == w and phi of that equals phi(w).
VerificationReport check_equivalence(const PWeightedGraph& w);
/// For an inclusion functor: phi(from_persistent(f)) matches f level by level
/// when f is one-critical, and from_persistent rejects it otherwise.
VerificationReport check_one_critical_functor(const PersistentGraph& f);
VerificationReport verify_equivalence(const Poset& p, std::size_t trials, std::uint64_t seed);

/// A weight-preserving alpha : X -> Psi(target), given on vertices: alpha[x]
/// is a vertex of target.graph_at(w(x)). An edge xy goes to the cell of
/// target.graph_at(w(xy)) spanned by the images of alpha(x) and alpha(y).
/// True when every such cell exists.
bool is_weight_preserving_morphism(const PWeightedGraph& x, const PersistentGraph& target,
                                   const std::vector<std::size_t>& alpha);

/// Builds alpha-bar, checks that it is a natural family of graph morphisms
/// with Psi(alpha-bar) o pi = alpha cell by cell, and, for sources with at
/// most `cell_limit` cells, that no other family does the same.
VerificationReport check_adjunction_phi_psi(const PWeightedGraph& x, const PersistentGraph& target,
                                            const std::vector<std::size_t>& alpha, std::size_t cell_limit = 8);
VerificationReport verify_adjunction_phi_psi(const Poset& p, std::size_t trials, std::uint64_t seed);

/// eps_{Psi f} o Psi(eta_f) = id on Psi(f), for an inclusion functor f.
VerificationReport check_psi_identity(const PersistentGraph& f);
/// Phi(eps_w) o eta_{Phi w} = id on Phi(w), level by level.
VerificationReport check_phi_identity(const PWeightedGraph& w);
VerificationReport verify_adjunction_psi_phi(const Poset& p, std::size_t trials, std::uint64_t seed);

struct ExhaustiveReports {
  VerificationReport equivalence{"equivalence"};
  VerificationReport adjunction_phi_psi{"adjunction-1"};
  VerificationReport adjunction_psi_phi{"adjunction-2"};
};

/// Every weighted graph with at most `max_vertices` vertices over every poset
/// with at most `max_poset_size` elements; for the first adjunction, every
/// alpha into phi of every such graph.
ExhaustiveReports verify_exhaustive(std::size_t max_poset_size = 3, std::size_t max_vertices = 2);

/// order_complex of random posets and barycentric subdivisions of random
/// complexes are flag.
VerificationReport verify_flagness(std::size_t trials, std::uint64_t seed, std::size_t max_size = 7);

}  // namespace ppers
