#include "ppers/poset.hpp"

#include "ppers/error.hpp"

#include <algorithm>
#include <numeric>

namespace ppers {

Preorder::Preorder(std::vector<std::string> elements, std::vector<std::uint8_t> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  const std::size_t n = elements_.size();
  if (leq_.size() != n * n) throw Error("relation matrix has wrong size");
  for (auto& b : leq_) b = b ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!this->leq(i, i)) throw Error("relation is not reflexive at '" + elements_[i] + "'");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (elements_[i] == elements_[j]) throw Error("duplicate element '" + elements_[i] + "'");
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!this->leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (this->leq(y, z) && !this->leq(x, z)) {
          throw Error("relation is not transitive: " + elements_[x] + " <= " + elements_[y] +
                      " <= " + elements_[z]);
        }
      }
    }
}

Preorder Preorder::closure(std::vector<std::string> elements,
                           std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t n = elements.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error("relation pair out of range");
    leq[a * n + b] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) leq[i * n + j] |= leq[k * n + j];
    }
  return Preorder(std::move(elements), std::move(leq));
}

std::optional<std::size_t> Preorder::find(const std::string& name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Preorder::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown element '" + name + "'");
}

Poset::Poset(std::vector<std::string> elements, std::vector<std::uint8_t> leq)
    : Poset(Preorder(std::move(elements), std::move(leq))) {}

Poset::Poset(Preorder order) : Preorder(std::move(order)) {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (leq(x, y) && leq(y, x))
        throw Error("relation is not antisymmetric: '" + name(x) + "' and '" + name(y) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      bool between = false;
      for (std::size_t z = 0; z < n && !between; ++z) between = less(x, z) && less(z, y);
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  // Sorting by the size of the downset respects the order; ties keep index order.
  std::vector<std::size_t> below(size(), 0), order(size());
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y) below[x] += leq(y, x);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < size() && minimal; ++y) minimal = !less(y, x);
    if (minimal) out.push_back(x);
  }
  return out;
}

std::optional<std::size_t> Poset::bottom() const {
  for (std::size_t x = 0; x < size(); ++x) {
    bool all = true;
    for (std::size_t y = 0; y < size() && all; ++y) all = leq(x, y);
    if (all) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t x = 0; x < size(); ++x) {
    bool all = true;
    for (std::size_t y = 0; y < size() && all; ++y) all = leq(y, x);
    if (all) return x;
  }
  return std::nullopt;
}

bool Poset::is_chain() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (!leq(x, y) && !leq(y, x)) return false;
  return true;
}

Poset Poset::opposite() const {
  const std::size_t n = size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = leq(y, x);
  return Poset(elements_, std::move(rel));
}

Poset Poset::chain(std::vector<std::string> elements) {
  const std::size_t n = elements.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = x <= y;
  return Poset(std::move(elements), std::move(rel));
}

Poset Poset::antichain(std::vector<std::string> elements) {
  const std::size_t n = elements.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t x = 0; x < n; ++x) rel[x * n + x] = 1;
  return Poset(std::move(elements), std::move(rel));
}

bool is_t0(const Preorder& x) {
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (x.equivalent(a, b)) return false;
  return true;
}

KolmogorovQuotient kolmogorov_quotient(const Preorder& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> representative;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    if (cls[a] != n) continue;
    const std::size_t c = representative.size();
    representative.push_back(a);
    names.push_back(x.name(a));
    for (std::size_t b = a; b < n; ++b) {
      if (x.equivalent(a, b)) {
        cls[b] = c;
        names[c] = std::min(names[c], x.name(b));
      }
    }
  }
  const std::size_t m = representative.size();
  std::vector<std::uint8_t> rel(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = x.leq(representative[i], representative[j]);
  return {Poset(std::move(names), std::move(rel)), std::move(cls)};
}

std::vector<std::size_t> downset(const Preorder& p, std::size_t v) {
  if (v >= p.size()) throw Error("element index out of range");
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.leq(x, v)) out.push_back(x);
  return out;
}

std::vector<std::size_t> downset(const Preorder& p, const std::string& v) {
  return downset(p, p.index_of(v));
}

std::vector<std::size_t> upset(const Preorder& p, std::size_t v) {
  if (v >= p.size()) throw Error("element index out of range");
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.leq(v, x)) out.push_back(x);
  return out;
}

Poset poset_from_covers(std::vector<std::string> elements,
                        std::span<const std::pair<std::string, std::string>> cover_pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto index = [&](const std::string& name) {
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw Error("unknown element '" + name + "' in cover");
    return static_cast<std::size_t>(it - elements.begin());
  };
  for (const auto& [a, b] : cover_pairs) {
    if (a == b) throw Error("cover relation has a cycle at '" + a + "'");
    pairs.emplace_back(index(a), index(b));
  }
  Preorder closed = Preorder::closure(std::move(elements), pairs);
  if (!is_t0(closed)) throw Error("cover relation has a cycle; input is not a poset");
  return Poset(std::move(closed));
}

bool is_monotone(const MonotoneMap& f) {
  if (f.assignment.size() != f.source.size()) throw Error("monotone map is not total on its source");
  for (auto y : f.assignment)
    if (y >= f.target.size()) throw Error("monotone map points outside its target");
  for (std::size_t x = 0; x < f.source.size(); ++x)
    for (std::size_t y = 0; y < f.source.size(); ++y)
      if (f.source.leq(x, y) && !f.target.leq(f.assignment[x], f.assignment[y])) return false;
  return true;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target != g.source) throw Error("cannot compose: target and source differ");
  MonotoneMap out{f.source, g.target, {}};
  out.assignment.reserve(f.assignment.size());
  for (auto y : f.assignment) out.assignment.push_back(g.assignment.at(y));
  return out;
}

FiniteSpace alexandrov_space(const Preorder& p) {
  const std::size_t n = p.size();
  if (n > 64) throw Error("closed-set enumeration supports at most 64 points");
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(y, x)) below[x] |= std::uint64_t{1} << y;

  // Each lower set is a union of principal downsets; grow the family until closed.
  std::vector<std::uint64_t> sets{0};
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t count = sets.size();
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t s = sets[i] | below[x];
      sets.push_back(s);
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  }
  return {p.elements(), std::move(sets)};
}

Preorder specialization_preorder(const FiniteSpace& space) {
  const std::size_t n = space.elements.size();
  if (n > 64) throw Error("closed-set families support at most 64 points");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> closure(n, all);
  for (auto s : space.closed_sets)
    for (std::size_t x = 0; x < n; ++x)
      if (s >> x & 1) closure[x] &= s;
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = (closure[x] & ~closure[y]) == 0;
  return Preorder(space.elements, std::move(rel));
}

}  // namespace ppers
