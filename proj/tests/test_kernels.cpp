#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "seamflow/kernels.hpp"

using namespace seamflow;

namespace {

std::vector<double> random_vec(size_t n, std::mt19937_64& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = (static_cast<double>(rng() >> 11) * 0x1p-53) * 2.0 - 1.0;
  return v;
}

std::vector<kern::Isa> available_isas() {
  std::vector<kern::Isa> out{kern::Isa::Scalar};
  if (kern::detail::isa_supported(kern::Isa::Avx2)) out.push_back(kern::Isa::Avx2);
  if (kern::detail::isa_supported(kern::Isa::Avx512)) out.push_back(kern::Isa::Avx512);
  return out;
}

double max_rel_err(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double denom = std::max({std::abs(a[i]), std::abs(b[i]), 1e-30});
    worst = std::max(worst, std::abs(a[i] - b[i]) / denom);
  }
  return worst;
}

}  // namespace

TEST_CASE("gemm variants agree with the scalar reference") {
  std::mt19937_64 rng(31337);
  const auto isas = available_isas();
  // Sizes chosen to cover full tiles plus row/column/k tails.
  const int sizes[][3] = {{1, 1, 1},   {3, 5, 7},    {4, 16, 32},  {5, 17, 3},
                          {8, 8, 8},   {13, 19, 29}, {32, 40, 50}, {64, 33, 1},
                          {2, 256, 50}};
  for (auto [m, n, k] : sizes) {
    for (bool ta : {false, true}) {
      for (bool tb : {false, true}) {
        auto a = random_vec(static_cast<size_t>(m) * k, rng);
        auto b = random_vec(static_cast<size_t>(k) * n, rng);
        auto c0 = random_vec(static_cast<size_t>(m) * n, rng);
        const int lda = ta ? m : k;
        const int ldb = tb ? k : n;
        for (double alpha : {1.0, -0.7}) {
          for (double beta : {0.0, 0.3}) {
            std::vector<std::vector<double>> results;
            for (auto isa : isas) {
              auto c = c0;
              kern::detail::table(isa).gemm(ta, tb, m, n, k, alpha, a.data(), lda,
                                            b.data(), ldb, beta, c.data(), n);
              results.push_back(std::move(c));
            }
            for (size_t v = 1; v < results.size(); ++v) {
              if (!ta && !tb) {
                // NN keeps the per-element fma order; bit-identical.
                CHECK(results[v] == results[0]);
              } else {
                CHECK(max_rel_err(results[v], results[0]) < 1e-12);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("gemm TN is bit-identical across variants") {
  std::mt19937_64 rng(99);
  const auto isas = available_isas();
  int m = 37, n = 41, k = 23;
  auto a = random_vec(static_cast<size_t>(k) * m, rng);
  auto b = random_vec(static_cast<size_t>(k) * n, rng);
  std::vector<std::vector<double>> results;
  for (auto isa : isas) {
    std::vector<double> c(static_cast<size_t>(m) * n, 0.0);
    kern::detail::table(isa).gemm(true, false, m, n, k, 1.0, a.data(), m, b.data(), n,
                                  0.0, c.data(), n);
    results.push_back(std::move(c));
  }
  for (size_t v = 1; v < results.size(); ++v) CHECK(results[v] == results[0]);
}

TEST_CASE("elementwise kernels agree across variants") {
  std::mt19937_64 rng(7);
  const auto isas = available_isas();
  for (int n : {1, 4, 7, 64, 257, 1023}) {
    auto x = random_vec(n, rng);
    auto y = random_vec(n, rng);
    for (auto isa : isas) {
      const auto& t = kern::detail::table(isa);
      const auto& ref = kern::detail::table(kern::Isa::Scalar);

      std::vector<double> z1(n), z2(n);
      t.add(n, x.data(), y.data(), z1.data());
      ref.add(n, x.data(), y.data(), z2.data());
      CHECK(z1 == z2);

      t.mul(n, x.data(), y.data(), z1.data());
      ref.mul(n, x.data(), y.data(), z2.data());
      CHECK(z1 == z2);

      z1 = y;
      z2 = y;
      t.axpy(n, 1.7, x.data(), z1.data());
      ref.axpy(n, 1.7, x.data(), z2.data());
      CHECK(z1 == z2);

      CHECK(t.dot(n, x.data(), y.data()) ==
            doctest::Approx(ref.dot(n, x.data(), y.data())).epsilon(1e-13));
      CHECK(t.sum(n, x.data()) == doctest::Approx(ref.sum(n, x.data())).epsilon(1e-13));
    }
  }
}

TEST_CASE("runtime dispatch picks a supported ISA") {
  auto isa = kern::active_isa();
  CHECK(kern::detail::isa_supported(isa));
  // Smoke: the dispatched gemm produces the reference result.
  std::mt19937_64 rng(1);
  int m = 5, n = 9, k = 11;
  auto a = random_vec(static_cast<size_t>(m) * k, rng);
  auto b = random_vec(static_cast<size_t>(k) * n, rng);
  std::vector<double> c(static_cast<size_t>(m) * n, 0.0), cref = c;
  kern::dgemm(false, false, m, n, k, 1.0, a.data(), k, b.data(), n, 0.0, c.data(), n);
  kern::detail::table(kern::Isa::Scalar)
      .gemm(false, false, m, n, k, 1.0, a.data(), k, b.data(), n, 0.0, cref.data(), n);
  CHECK(c == cref);
}
