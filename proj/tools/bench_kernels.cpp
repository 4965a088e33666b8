// Quick gemm throughput check for the kernel variants. Not part of the test
// suite; used to size training schedules.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "seamflow/kernels.hpp"

using namespace seamflow;
using Clock = std::chrono::steady_clock;

static void bench(kern::Isa isa, int m, int n, int k, int reps) {
  std::mt19937_64 rng(42);
  std::vector<double> a(static_cast<size_t>(m) * k), b(static_cast<size_t>(k) * n),
      c(static_cast<size_t>(m) * n, 0.0);
  for (auto& x : a) x = static_cast<double>(rng() >> 11) * 0x1p-53;
  for (auto& x : b) x = static_cast<double>(rng() >> 11) * 0x1p-53;
  const auto& t = kern::detail::table(isa);
  t.gemm(false, false, m, n, k, 1.0, a.data(), k, b.data(), n, 0.0, c.data(), n);  // warm
  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r)
    t.gemm(false, false, m, n, k, 1.0, a.data(), k, b.data(), n, 0.0, c.data(), n);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  double gflops = 2.0 * m * n * k * reps / secs / 1e9;
  std::printf("%-7s %5dx%-5dx%-5d  %7.2f GFLOP/s\n", kern::isa_name(isa), m, n, k, gflops);
}

int main() {
  std::printf("active ISA: %s\n", kern::isa_name(kern::active_isa()));
  const int shapes[][3] = {{2560, 256, 256}, {2560, 256, 50}, {256, 2560, 256},
                           {128, 128, 128},  {12, 40, 40},    {16641, 256, 256}};
  for (auto isa : {kern::Isa::Scalar, kern::Isa::Avx2, kern::Isa::Avx512}) {
    if (!kern::detail::isa_supported(isa)) continue;
    for (auto [m, n, k] : shapes) {
      long flops = 2L * m * n * k;
      int reps = static_cast<int>(std::max(1L, 2'000'000'000L / flops));
      if (isa == kern::Isa::Scalar) reps = std::max(1, reps / 8);
      bench(isa, m, n, k, reps);
    }
  }
  return 0;
}
