#include "ppers/linalg.hpp"

#include "ppers/error.hpp"
#include "ppers/kernels.hpp"

#include <span>
#include <string>

namespace ppers {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldConfig::FieldConfig(std::uint32_t characteristic) : p_(characteristic) {
  if (!is_prime(p_)) throw Error("field characteristic " + std::to_string(p_) + " is not prime");
  if (p_ > kernels::kMaxModulus)
    throw Error("field characteristic " + std::to_string(p_) + " exceeds " +
                std::to_string(kernels::kMaxModulus));
}

std::uint32_t FieldConfig::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error("division by zero in GF(p)");
  // a^(p-2) by square and multiply
  std::uint64_t result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t FieldConfig::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

ColumnMatrix::ColumnMatrix(std::size_t rows, std::size_t cols, FieldConfig field)
    : rows_(rows), cols_(cols), field_(field) {
  if (binary()) {
    stride_ = (rows + 63) / 64;
    bits_.assign(stride_ * cols, 0);
  } else {
    stride_ = rows;
    entries_.assign(stride_ * cols, 0);
  }
}

std::uint32_t ColumnMatrix::at(std::size_t r, std::size_t c) const {
  if (binary()) return static_cast<std::uint32_t>(bits_[c * stride_ + r / 64] >> (r % 64) & 1);
  return entries_[c * stride_ + r];
}

void ColumnMatrix::set(std::size_t r, std::size_t c, std::uint32_t value) {
  if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
  value %= field_.characteristic();
  if (binary()) {
    auto& w = bits_[c * stride_ + r / 64];
    const std::uint64_t bit = std::uint64_t{1} << (r % 64);
    w = value ? (w | bit) : (w & ~bit);
  } else {
    entries_[c * stride_ + r] = value;
  }
}

bool ColumnMatrix::column_is_zero(std::size_t c) const { return !low(c).has_value(); }

std::optional<std::size_t> ColumnMatrix::low(std::size_t c) const {
  if (binary()) {
    for (std::size_t w = stride_; w-- > 0;) {
      std::uint64_t word = bits_[c * stride_ + w];
      if (word) return w * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(word));
    }
    return std::nullopt;
  }
  for (std::size_t r = rows_; r-- > 0;)
    if (entries_[c * stride_ + r]) return r;
  return std::nullopt;
}

void ColumnMatrix::add_scaled_column(std::size_t dst, std::size_t src, std::uint32_t scalar) {
  add_scaled_column_from(dst, *this, src, scalar);
}

void ColumnMatrix::add_scaled_column_from(std::size_t dst, const ColumnMatrix& other, std::size_t src,
                                          std::uint32_t scalar) {
  if (other.rows_ != rows_ || other.field_ != field_) throw Error("incompatible matrices");
  scalar %= field_.characteristic();
  if (scalar == 0) return;
  if (binary()) {
    kernels::xor_into(std::span(bits_).subspan(dst * stride_, stride_),
                      std::span<const std::uint64_t>(other.bits_).subspan(src * stride_, stride_));
  } else {
    kernels::axpy_mod(std::span(entries_).subspan(dst * stride_, stride_),
                      std::span<const std::uint32_t>(other.entries_).subspan(src * stride_, stride_), scalar,
                      field_.characteristic());
  }
}

std::vector<std::uint32_t> ColumnMatrix::column(std::size_t c) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void ColumnMatrix::append_column(const std::vector<std::uint32_t>& values) {
  if (values.size() != rows_) throw Error("column has wrong length");
  ++cols_;
  if (binary()) {
    bits_.resize(stride_ * cols_, 0);
  } else {
    entries_.resize(stride_ * cols_, 0);
  }
  for (std::size_t r = 0; r < rows_; ++r)
    if (values[r]) set(r, cols_ - 1, values[r]);
}

ColumnMatrix ColumnMatrix::identity(std::size_t n, FieldConfig field) {
  ColumnMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ColumnMatrix ColumnMatrix::multiply(const ColumnMatrix& rhs) const {
  if (rhs.rows_ != cols_ || rhs.field_ != field_) throw Error("incompatible matrix product");
  ColumnMatrix out(rows_, rhs.cols_, field_);
  for (std::size_t c = 0; c < rhs.cols_; ++c)
    for (std::size_t k = 0; k < cols_; ++k)
      if (auto s = rhs.at(k, c)) out.add_scaled_column_from(c, *this, k, s);
  return out;
}

Reduction reduce_columns(ColumnMatrix& m, ColumnMatrix* v, const std::vector<bool>* skip) {
  const FieldConfig& f = m.field();
  Reduction out;
  out.low.assign(m.cols(), std::nullopt);
  std::vector<std::optional<std::size_t>> pivot(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (skip && (*skip)[j]) continue;
    while (auto l = m.low(j)) {
      if (auto k = pivot[*l]) {
        const std::uint32_t factor = f.neg(f.mul(m.at(*l, j), f.inv(m.at(*l, *k))));
        m.add_scaled_column(j, *k, factor);
        if (v) v->add_scaled_column(j, *k, factor);
      } else {
        pivot[*l] = j;
        out.low[j] = l;
        ++out.rank;
        break;
      }
    }
  }
  return out;
}

std::size_t rank(ColumnMatrix m) { return reduce_columns(m).rank; }

LinearSolver::LinearSolver(ColumnMatrix a)
    : reduced_(std::move(a)),
      transform_(ColumnMatrix::identity(reduced_.cols(), reduced_.field())),
      reduction_(reduce_columns(reduced_, &transform_)),
      pivot_col_(reduced_.rows()) {
  for (std::size_t j = 0; j < reduction_.low.size(); ++j)
    if (auto l = reduction_.low[j]) pivot_col_[*l] = j;
}

std::optional<std::vector<std::uint32_t>> LinearSolver::solve(const std::vector<std::uint32_t>& b) const {
  const FieldConfig& f = reduced_.field();
  ColumnMatrix r(reduced_.rows(), 0, f);
  r.append_column(b);
  ColumnMatrix x(reduced_.cols(), 1, f);
  // r = b + sum c_k R_k is driven to zero; then b = A (-sum c_k V_k).
  while (auto l = r.low(0)) {
    auto k = pivot_col_[*l];
    if (!k) return std::nullopt;
    const std::uint32_t factor = f.neg(f.mul(r.at(*l, 0), f.inv(reduced_.at(*l, *k))));
    r.add_scaled_column_from(0, reduced_, *k, factor);
    x.add_scaled_column_from(0, transform_, *k, f.neg(factor));
  }
  return x.column(0);
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const ColumnMatrix& m) {
  ColumnMatrix reduced = m;
  ColumnMatrix v = ColumnMatrix::identity(m.cols(), m.field());
  Reduction red = reduce_columns(reduced, &v);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!red.low[j]) out.push_back(v.column(j));
  return out;
}

}  // namespace ppers
