#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "boxmin/kernels.hpp"
#include "boxmin/sampling.hpp"

namespace k = boxmin::kernels;

TEST(Kernels, ShellCounts) {
  for (int dim = 1; dim <= 4; ++dim) {
    for (int rho = 0; rho <= 4; ++rho) {
      long long count = 0;
      bool on_shell = true;
      k::for_each_in_shell(dim, rho, [&](std::span<const int> n) {
        ++count;
        int m = 0;
        for (int v : n) m = std::max(m, std::abs(v));
        on_shell = on_shell && m == rho;
      });
      const long long expected = rho == 0 ? 1
                                          : static_cast<long long>(std::pow(2 * rho + 1, dim) - std::pow(2 * rho - 1, dim));
      EXPECT_EQ(count, expected);
      EXPECT_TRUE(on_shell);
    }
  }
}

TEST(Kernels, LatticeSumBitIdenticalToSerial) {
  auto f = [](std::span<const int> n) {
    double s = 0.1;
    for (int v : n) s += std::sin(0.37 * v) / (1.0 + v * v);
    return s;
  };
  for (int workers : {1, 2, 4}) {
    k::set_worker_count(workers);
    EXPECT_EQ(k::lattice_sum<double>(3, 12, f), k::lattice_sum_serial<double>(3, 12, f));
  }
  k::set_worker_count(0);
}

TEST(Kernels, SweepMatchesSerial) {
  auto body = [](std::uint64_t a, std::uint64_t b, double& acc) {
    for (std::uint64_t i = a; i < b; ++i) acc += 1.0 / static_cast<double>(i + 1);
  };
  auto merge = [](double& a, const double& b) { a += b; };
  for (int workers : {1, 3}) {
    k::set_worker_count(workers);
    EXPECT_EQ(k::sweep(100'003, 0.0, body, merge, 1000), k::sweep_serial(100'003, 0.0, body, merge, 1000));
  }
  k::set_worker_count(0);
  EXPECT_EQ(k::sweep(0, 0.0, body, merge), 0.0);
}

TEST(Sampling, QuasiRandomIsRandomAccessAndSeeded) {
  const boxmin::QuasiRandom q(3, 42);
  std::vector<double> block(30);
  q.fill(10, 10, block);
  for (int i = 0; i < 10; ++i) {
    const auto p = q.point(10 + static_cast<std::uint64_t>(i));
    for (int d = 0; d < 3; ++d) {
      EXPECT_EQ(block[static_cast<size_t>(3 * i + d)], p[static_cast<size_t>(d)]);
      EXPECT_GE(p[static_cast<size_t>(d)], 0.0);
      EXPECT_LT(p[static_cast<size_t>(d)], 1.0);
    }
  }
  const boxmin::QuasiRandom other(3, 43);
  EXPECT_NE(q.point(5), other.point(5));
}

TEST(Sampling, ShellPointsLieOutsideTheBox) {
  const boxmin::QuasiRandom q(4, 1);
  std::vector<double> out(3);
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto u = q.point(i);
    boxmin::shell_point(u, 6.0, out);
    double m = 0.0;
    for (double v : out) m = std::max(m, std::abs(v));
    EXPECT_GE(m, 1.0);
    EXPECT_LE(m, 6.0 + 1e-12);
  }
}

TEST(Sampling, TensorGridCorners) {
  std::vector<double> out(2);
  boxmin::tensor_grid_point(0, 5, -1.0, 1.0, out);
  EXPECT_EQ(out, (std::vector<double>{-1.0, -1.0}));
  boxmin::tensor_grid_point(24, 5, -1.0, 1.0, out);
  EXPECT_EQ(out, (std::vector<double>{1.0, 1.0}));
  boxmin::tensor_grid_point(1, 5, -1.0, 1.0, out);
  EXPECT_EQ(out, (std::vector<double>{-1.0, -0.5}));
}
