#pragma once

// Exact dense linear algebra over a prime field GF(p).
//
// Matrices are stored column by column. Over GF(2) a column is a packed bit
// vector; otherwise it is a vector of 32-bit residues. Column operations go
// through the SIMD kernels.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ppers {

/// Prime field GF(p). Throws `Error` unless p is a prime <= kernels::kMaxModulus.
class FieldConfig {
 public:
  explicit FieldConfig(std::uint32_t characteristic = 2);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return a * b % p_; }
  std::uint32_t neg(std::uint32_t a) const { return (p_ - a) % p_; }
  std::uint32_t inv(std::uint32_t a) const;
  /// Residue of a signed integer.
  std::uint32_t from_int(long long v) const;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

class ColumnMatrix {
 public:
  ColumnMatrix(std::size_t rows, std::size_t cols, FieldConfig field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldConfig& field() const { return field_; }

  std::uint32_t at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint32_t value);

  bool column_is_zero(std::size_t c) const;
  /// Largest row index with a nonzero entry.
  std::optional<std::size_t> low(std::size_t c) const;
  /// column(dst) += scalar * column(src)
  void add_scaled_column(std::size_t dst, std::size_t src, std::uint32_t scalar);
  /// column(dst) += scalar * other.column(src); same row count and field.
  void add_scaled_column_from(std::size_t dst, const ColumnMatrix& other, std::size_t src,
                              std::uint32_t scalar);
  std::vector<std::uint32_t> column(std::size_t c) const;
  void append_column(const std::vector<std::uint32_t>& values);

  static ColumnMatrix identity(std::size_t n, FieldConfig field);
  ColumnMatrix multiply(const ColumnMatrix& rhs) const;

 private:
  bool binary() const { return field_.characteristic() == 2; }

  std::size_t rows_;
  std::size_t cols_;
  FieldConfig field_;
  std::size_t stride_;  // words (GF(2)) or entries (GF(p)) per column
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> entries_;
};

struct Reduction {
  /// low(j) of the reduced column j, nullopt when it reduced to zero.
  std::vector<std::optional<std::size_t>> low;
  std::size_t rank = 0;
};

/// Left-to-right column reduction R = M V with distinct column lows. When
/// `v` is given it must be the cols x cols identity and receives V.
/// `skip` marks columns already known to reduce to zero.
Reduction reduce_columns(ColumnMatrix& m, ColumnMatrix* v = nullptr,
                         const std::vector<bool>* skip = nullptr);

std::size_t rank(ColumnMatrix m);

/// Solves A x = b for x by reducing A once.
class LinearSolver {
 public:
  explicit LinearSolver(ColumnMatrix a);
  std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& b) const;
  std::size_t rank() const { return reduction_.rank; }

 private:
  ColumnMatrix reduced_;
  ColumnMatrix transform_;
  Reduction reduction_;
  std::vector<std::optional<std::size_t>> pivot_col_;  // row -> column with that low
};

/// Basis of the null space of `m`, one vector per free column.
std::vector<std::vector<std::uint32_t>> kernel_basis(const ColumnMatrix& m);

}  // namespace ppers
