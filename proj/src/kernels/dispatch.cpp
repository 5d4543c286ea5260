#include "ppers/error.hpp"
#include "ppers/kernels.hpp"

#include <cstdlib>
#include <string>

namespace ppers::kernels {

namespace {

struct Table {
  Isa isa;
  void (*xor_into)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
  bool (*and_into)(std::span<std::uint64_t>, std::span<const std::uint64_t>, std::span<const std::uint64_t>);
  void (*axpy_mod)(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t, std::uint32_t);
};

constexpr Table kScalar{Isa::scalar, &scalar::xor_into, &scalar::and_into, &scalar::axpy_mod};
#ifdef PPERS_HAVE_AVX2_TU
constexpr Table kAvx2{Isa::avx2, &avx2::xor_into, &avx2::and_into, &avx2::axpy_mod};
#endif

const Table& table_for(Isa isa) {
#ifdef PPERS_HAVE_AVX2_TU
  if (isa == Isa::avx2) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

Isa detect() {
  Isa best = isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  if (const char* env = std::getenv("PPERS_ISA")) {
    std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
  }
  return best;
}

const Table*& current() {
  static const Table* t = &table_for(detect());
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#ifdef PPERS_HAVE_AVX2_TU
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current()->isa; }

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw Error("instruction set '" + std::string(isa_name(isa)) + "' is not available");
  current() = &table_for(isa);
}

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  current()->xor_into(dst, src);
}

bool and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b) {
  return current()->and_into(dst, a, b);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t scalar,
              std::uint32_t p) {
  current()->axpy_mod(dst, src, scalar, p);
}

}  // namespace ppers::kernels
