#include <gtest/gtest.h>

#include <numbers>

#include "bidisk/ar1d.hpp"
#include "bidisk/spectral_factor.hpp"
#include "oracles.hpp"

using namespace bidisk;
using oracle::scalar;

namespace {

TrigMatrixPolynomial cosine() { return TrigMatrixPolynomial(1, {scalar(1.25), scalar(-0.5)}); }

// blocks of B(z) B(1/conj z)^* for B = sum B_k z^k
TrigMatrixPolynomial left_product(const MatrixPolynomial& b) {
  const int n = b.degree();
  std::vector<Mat> a;
  for (int k = 0; k <= n; ++k) {
    Mat acc = Mat::Zero(b.dim(), b.dim());
    for (int i = k; i <= n; ++i) acc += b[i] * b[i - k].adjoint();
    a.push_back(acc);
  }
  return TrigMatrixPolynomial(b.dim(), a);
}

double left_residual(const TrigMatrixPolynomial& a, const MatrixPolynomial& m) {
  double worst = 0.0;
  for (int t = 0; t < 256; ++t) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * t / 256);
    const Mat v = m.eval(z);
    worst = std::max(worst, (v * v.adjoint() - a.eval(z)).norm());
  }
  return worst;
}

}  // namespace

TEST(TrigPolynomial, RejectsNonHermitianA0) {
  Mat a0(2, 2);
  a0 << 1.0, 0.5, 0.0, 1.0;
  try {
    TrigMatrixPolynomial(2, {a0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
}

TEST(TrigPolynomial, CircleExtrema) {
  EXPECT_NEAR(cosine().min_eig_on_circle(), 0.25, 1e-12);
  EXPECT_NEAR(cosine().sup_norm_on_circle(), 2.25, 1e-12);
}

TEST(LeftFactor, Identity) {
  const auto f = left_stable_factor(TrigMatrixPolynomial(2, {Mat::Identity(2, 2)}));
  EXPECT_LT((f.poly[0] - Mat::Identity(2, 2)).norm(), 1e-15);
}

TEST(LeftFactor, Cosine) {
  const auto f = left_stable_factor(cosine());
  ASSERT_EQ(f.poly.degree(), 1);
  EXPECT_NEAR(std::abs(f.poly[0](0, 0) - 1.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(f.poly[1](0, 0) + 0.5), 0.0, 1e-8);
  EXPECT_LE(f.residual, 1e-8);
}

TEST(LeftFactor, RecoversYuleWalkerFactor) {
  const auto r = solve_yule_walker_left(BlockToeplitz1D(1, {scalar(1.0), scalar(0.5)})).poly();
  const auto f = left_stable_factor(left_product(r));
  for (int k = 0; k <= 1; ++k) EXPECT_LT((f.poly[k] - r[k]).norm(), 1e-7);
}

TEST(LeftFactor, MatrixResidualAndNormalization) {
  std::mt19937_64 rng(17);
  Mat b0 = Mat::Identity(2, 2), b1 = 0.3 * oracle::random_unitary(2, rng);
  const auto a = left_product(MatrixPolynomial({b0, b1}));
  const auto f = left_stable_factor(a);
  EXPECT_LE(f.residual, 1e-8);
  EXPECT_LT(left_residual(a, f.poly), 1e-8);
  EXPECT_EQ(f.poly[0](0, 1), cd(0.0));
  EXPECT_GT(f.poly[0](0, 0).real(), 0.0);
  EXPECT_EQ(f.poly[0](1, 1).imag(), 0.0);
  EXPECT_TRUE(stability_check_1d(f.poly).stable);
}

TEST(RightFactor, CosineAndIdentity) {
  const auto f = right_stable_factor(cosine());
  EXPECT_NEAR(std::abs(f.poly[0](0, 0) - 1.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(f.poly[1](0, 0) + 0.5), 0.0, 1e-8);
  const auto i = right_stable_factor(TrigMatrixPolynomial(2, {Mat::Identity(2, 2)}));
  EXPECT_LT((i.poly[0] - Mat::Identity(2, 2)).norm(), 1e-15);
}

TEST(RightFactor, MatrixResidual) {
  std::mt19937_64 rng(19);
  const Mat b1 = 0.4 * oracle::random_unitary(2, rng);
  // N(1/conj z)^* N(z) with N = I + b1 z
  const TrigMatrixPolynomial a(2, {Mat::Identity(2, 2) + b1.adjoint() * b1, b1});
  const auto f = right_stable_factor(a);
  double worst = 0.0;
  for (int t = 0; t < 256; ++t) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * t / 256);
    const Mat v = f.poly.eval(z);
    worst = std::max(worst, (v.adjoint() * v - a.eval(z)).norm());
  }
  EXPECT_LT(worst, 1e-8);
  EXPECT_EQ(f.poly[0](0, 1), cd(0.0));
  EXPECT_TRUE(stability_check_1d(f.poly).stable);
}

TEST(LeftFactor, NotPositiveOnCircle) {
  try {
    left_stable_factor(TrigMatrixPolynomial(1, {scalar(1.0), scalar(0.5)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveOnCircle);
  }
}

TEST(LeftFactor, NoConvergenceNearTheBoundary) {
  // |1 - 0.999 z|^2 has a root close to the circle; a short Bauer run cannot settle.
  SpectralOptions opt;
  opt.bauerSize = 8;
  opt.tol = 1e-12;
  const TrigMatrixPolynomial a(1, {scalar(1.0 + 0.999 * 0.999), scalar(-0.999)});
  try {
    left_stable_factor(a, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
  }
}

TEST(LeftFactor, BlockNormalization) {
  std::mt19937_64 rng(23);
  const Mat b0 = oracle::random_pd(2, rng);
  const Mat b1 = 0.2 * oracle::random_unitary(2, rng) * b0;
  const auto a = left_product(MatrixPolynomial({b0, b1}));
  SpectralOptions opt;
  opt.normBlock = 2;
  const auto f = left_stable_factor(a, opt);
  EXPECT_LT((f.poly[0] - f.poly[0].adjoint()).norm(), 1e-12);
  EXPECT_LT(left_residual(a, f.poly), 1e-8);
}
