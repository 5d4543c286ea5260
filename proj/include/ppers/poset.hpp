#pragma once

// Finite preorders, posets and finite topological spaces.
//
// A finite space is carried by its specialization preorder: x <= y iff the
// minimal closed set containing x lies inside the one containing y. Closed
// sets of the Alexandrov topology are then exactly the lower sets, so the
// order alone determines the topology. `FiniteSpace` exists for the places
// where the closed-set family itself is the input.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ppers {

/// Reflexive, transitive relation on a finite list of named elements. The
/// relation is a dense n x n boolean matrix indexed by element position.
class Preorder {
 public:
  Preorder() = default;

  /// Validates reflexivity and transitivity of `leq` (row-major n x n).
  Preorder(std::vector<std::string> elements, std::vector<std::uint8_t> leq);

  /// Reflexive-transitive closure of the given (index) pairs.
  static Preorder closure(std::vector<std::string> elements,
                          std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws `Error` for unknown names.
  std::size_t index_of(const std::string& name) const;

  bool leq(std::size_t x, std::size_t y) const { return leq_[x * elements_.size() + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y) && !leq(y, x); }
  bool equivalent(std::size_t x, std::size_t y) const { return leq(x, y) && leq(y, x); }

  const std::vector<std::uint8_t>& relation() const { return leq_; }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 protected:
  std::vector<std::string> elements_;
  std::vector<std::uint8_t> leq_;
};

/// Antisymmetric preorder. Every finite T0 space is one of these.
class Poset : public Preorder {
 public:
  Poset() = default;
  Poset(std::vector<std::string> elements, std::vector<std::uint8_t> leq);
  explicit Poset(Preorder order);

  /// Pairs (x, y) with x < y and nothing strictly between them.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Elements sorted so that x < y implies x comes first; ties by index.
  std::vector<std::size_t> linear_extension() const;
  std::vector<std::size_t> minimal_elements() const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  bool is_chain() const;

  /// The same elements under the reversed order.
  Poset opposite() const;

  static Poset chain(std::vector<std::string> elements);
  static Poset antichain(std::vector<std::string> elements);
};

struct MonotoneMap {
  Poset source;
  Poset target;
  std::vector<std::size_t> assignment;
};

/// Preorder together with the family of closed sets it was read from.
/// Subsets are bit masks over element positions, so at most 64 points.
struct FiniteSpace {
  std::vector<std::string> elements;
  std::vector<std::uint64_t> closed_sets;
};

struct KolmogorovQuotient {
  Poset poset;
  /// Element of the preorder -> class index in `poset`.
  std::vector<std::size_t> assignment;
};

bool is_t0(const Preorder& x);

/// Collapses x ~ y <=> x <= y <= x. Classes are listed in order of their
/// first member and named by their lexicographically least member.
KolmogorovQuotient kolmogorov_quotient(const Preorder& x);

/// {x : x <= v}, sorted by index. A closed set of the Alexandrov topology.
std::vector<std::size_t> downset(const Preorder& p, std::size_t v);
std::vector<std::size_t> downset(const Preorder& p, const std::string& v);
std::vector<std::size_t> upset(const Preorder& p, std::size_t v);

/// Throws `Error` when the covers contain a cycle or name unknown elements.
Poset poset_from_covers(std::vector<std::string> elements,
                        std::span<const std::pair<std::string, std::string>> cover_pairs);

/// Throws `Error` if the assignment is not total on the source.
bool is_monotone(const MonotoneMap& f);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// All lower sets of `p` (its Alexandrov closed sets), as bit masks.
FiniteSpace alexandrov_space(const Preorder& p);

/// x <= y iff U_x is contained in U_y, where U_x is the intersection of all
/// closed sets containing x.
Preorder specialization_preorder(const FiniteSpace& space);

}  // namespace ppers
