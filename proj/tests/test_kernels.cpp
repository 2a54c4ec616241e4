#include <gtest/gtest.h>

#include "bidisk/kernels.hpp"
#include "oracles.hpp"

using namespace bidisk;

TEST(Kernels, TorusSpectrumSerialEqualsParallel) {
  std::mt19937_64 rng(29);
  const auto p = oracle::random_stable(2, 2, 1, false, rng);
  const auto a = torus_inverse_spectrum(p, 64, Exec::Serial);
  const auto b = torus_inverse_spectrum(p, 64, Exec::Parallel);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a, b);
}

TEST(Kernels, TorusSpectrumSeparableValue) {
  const auto f = torus_inverse_spectrum(oracle::separable_p(), 4, Exec::Serial);
  // z = w = 1: 1 / (0.5 * 0.6)^2
  EXPECT_NEAR(f[0][0].real(), 1.0 / (0.25 * 0.36), 1e-12);
  // z = -1, w = 1 sits at a = 2, b = 0
  EXPECT_NEAR(f[0][2 * 4].real(), 1.0 / (2.25 * 0.36), 1e-12);
}

TEST(Kernels, SweepsSeparable) {
  const auto s = stability_sweeps(oracle::separable_p(), 64, Exec::Serial);
  EXPECT_NEAR(s.zSweep, 2.0, 1e-10);
  EXPECT_NEAR(s.wSweep, 2.5, 1e-10);
  const auto t = stability_sweeps(oracle::separable_p(), 64, Exec::Parallel);
  EXPECT_EQ(s.zSweep, t.zSweep);
  EXPECT_EQ(s.wSweep, t.wSweep);
}

TEST(Kernels, SweepsRandomBitwise) {
  std::mt19937_64 rng(31);
  const auto p = oracle::random_stable(2, 2, 2, false, rng);
  const auto s = stability_sweeps(p, 128, Exec::Serial);
  const auto t = stability_sweeps(p, 128, Exec::Parallel);
  EXPECT_EQ(s.zSweep, t.zSweep);
  EXPECT_EQ(s.wSweep, t.wSweep);
  EXPECT_GT(std::min(s.zSweep, s.wSweep), 1.0);
}

TEST(Kernels, SweepsDegenerate) {
  MatrixPolynomial2D p(2, 1, 1);
  p(0, 0)(0, 0) = 1.0;
  try {
    stability_sweeps(p, 64, Exec::Parallel);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateDeterminant);
  }
}

TEST(Kernels, SymbolSupNorm) {
  std::map<Index2, Mat> g;
  g[{0, 0}] = oracle::scalar(0.5);
  EXPECT_DOUBLE_EQ(symbol_sup_norm(g, 64, Exec::Serial), 0.5);
  g[{1, -1}] = oracle::scalar(0.25);
  g[{-2, 1}] = oracle::scalar(cd(0.0, 0.1));
  EXPECT_NEAR(symbol_sup_norm(g, 64, Exec::Serial), 0.85, 1e-12);
  EXPECT_EQ(symbol_sup_norm(g, 64, Exec::Serial), symbol_sup_norm(g, 64, Exec::Parallel));
}
