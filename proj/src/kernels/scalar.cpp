#include "ppers/kernels.hpp"

namespace ppers::kernels::scalar {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

bool and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b) {
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = a[i] & b[i];
    any |= dst[i];
  }
  return any != 0;
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t scalar,
              std::uint32_t p) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (dst[i] + scalar * src[i]) % p;
}

}  // namespace ppers::kernels::scalar
