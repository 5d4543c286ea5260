#pragma once

// Data-parallel inner loops used by clique enumeration and elimination over
// GF(p). Each kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The variant is chosen once at startup from CPUID and can be
// overridden with `force_isa` or the PPERS_ISA environment variable
// ("scalar" or "avx2").

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ppers::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
/// Throws `Error` if the ISA is not available on this machine.
void force_isa(Isa isa);

/// Largest supported field characteristic for `axpy_mod`.
inline constexpr std::uint32_t kMaxModulus = 32749;

/// dst ^= src
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
/// dst = a & b; returns true if any bit of the result is set.
bool and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b);
/// dst = (dst + scalar * src) mod p, entries and scalar in [0, p), p <= kMaxModulus.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t scalar,
              std::uint32_t p);

namespace scalar {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t scalar,
              std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
bool and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t scalar,
              std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace ppers::kernels
