#include "ppers/error.hpp"
#include "ppers/homology.hpp"
#include "ppers/io.hpp"
#include "ppers/kernels.hpp"
#include "ppers/persistence.hpp"
#include "ppers/random.hpp"

#include <doctest.h>

using namespace ppers;

namespace {

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::force_isa(saved); }
};

std::vector<std::uint64_t> random_words(Rng& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = rng();
  return v;
}

}  // namespace

TEST_CASE("scalar kernels") {
  std::vector<std::uint64_t> a{1, 2, 3}, b{3, 2, 1};
  kernels::scalar::xor_into(a, b);
  CHECK(a == std::vector<std::uint64_t>{2, 0, 2});
  std::vector<std::uint64_t> out(3);
  CHECK(kernels::scalar::and_into(out, a, b));
  CHECK(out == std::vector<std::uint64_t>{2, 0, 0});
  std::vector<std::uint64_t> zero{0, 0, 0};
  CHECK_FALSE(kernels::scalar::and_into(out, a, zero));

  std::vector<std::uint32_t> d{1, 2, 6}, s{6, 5, 1};
  kernels::scalar::axpy_mod(d, s, 3, 7);
  CHECK(d == std::vector<std::uint32_t>{5, 3, 2});
}

TEST_CASE("force_isa rejects unavailable variants") {
  IsaGuard guard;
  kernels::force_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  if (!kernels::isa_available(kernels::Isa::avx2)) CHECK_THROWS_AS(kernels::force_isa(kernels::Isa::avx2), Error);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernels match scalar on random buffers") {
  if (!kernels::isa_available(kernels::Isa::avx2)) return;
  Rng rng(42);
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 257}) {
    auto a = random_words(rng, n), b = random_words(rng, n);
    auto x1 = a, x2 = a;
    kernels::scalar::xor_into(x1, b);
    kernels::avx2::xor_into(x2, b);
    CHECK(x1 == x2);

    std::vector<std::uint64_t> o1(n), o2(n);
    if (n && coin(rng)) b.assign(n, 0);
    CHECK(kernels::scalar::and_into(o1, a, b) == kernels::avx2::and_into(o2, a, b));
    CHECK(o1 == o2);

    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 32749u}) {
      std::vector<std::uint32_t> d(n), s(n);
      for (auto& v : d) v = static_cast<std::uint32_t>(uniform_index(rng, p));
      for (auto& v : s) v = static_cast<std::uint32_t>(uniform_index(rng, p));
      const auto c = static_cast<std::uint32_t>(uniform_index(rng, p));
      auto d1 = d, d2 = d;
      kernels::scalar::axpy_mod(d1, s, c, p);
      kernels::avx2::axpy_mod(d2, s, c, p);
      CHECK(d1 == d2);
    }
  }
}

TEST_CASE("homology and barcodes agree across kernel variants") {
  if (!kernels::isa_available(kernels::Isa::avx2)) return;
  IsaGuard guard;
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    auto s = random_complex(rng, 8, 3);
    auto m = random_metric(rng, 7);
    std::vector<Decimal> eps{0};
    for (auto d : m.distance)
      if (d > eps.back()) eps.push_back(d);
    std::sort(eps.begin(), eps.end());
    eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
    for (std::uint32_t p : {2u, 3u, 7u}) {
      FieldConfig field(p);
      kernels::force_isa(kernels::Isa::scalar);
      auto b1 = betti_numbers(s, 3, field).betti;
      auto c1 = barcode(vietoris_rips(m, eps, 2), 2, field);
      auto k1 = clique_complex(one_skeleton(s));
      kernels::force_isa(kernels::Isa::avx2);
      CHECK(b1 == betti_numbers(s, 3, field).betti);
      CHECK(c1.intervals == barcode(vietoris_rips(m, eps, 2), 2, field).intervals);
      CHECK(k1 == clique_complex(one_skeleton(s)));
    }
  }
}
#endif
