#include <gtest/gtest.h>

#include "bidisk/ar2d.hpp"
#include "bidisk/completion.hpp"
#include "oracles.hpp"

using namespace bidisk;
using oracle::scalar;

namespace {

ExtendOptions fast() {
  ExtendOptions o;
  o.fftN = 256;
  o.gridN = 256;
  return o;
}

DesignOptions with_corner(double c) {
  DesignOptions o;
  o.cornerNm = scalar(c);
  return o;
}

CorrelationGrid perturbed_q_grid() {
  auto g = grid_from_polynomial(oracle::q_p(), 2, 2);
  g.set_symmetric({1, 0}, g.at({1, 0}) + scalar(0.05));
  return g;
}

}  // namespace

TEST(BuildPhi, SeparableShapes) {
  const auto phi = build_phi(oracle::separable_grid(2, 1));
  EXPECT_EQ(phi.phi.rows(), 2);
  EXPECT_EQ(phi.phi1.cols(), 2);
  EXPECT_NEAR(phi.phi1(0, 0).real(), oracle::separable_c(-1, 0), 1e-15);
}

TEST(CheckConditions, Identity) {
  const auto r = check_conditions(oracle::identity_grid());
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.commResidual, 0.0);
}

TEST(CheckConditions, GridFromQ) {
  const auto r = check_conditions(grid_from_polynomial(oracle::q_p(), 1, 1));
  EXPECT_TRUE(r.feasible);
  EXPECT_LE(r.commResidual, 1e-9);
  EXPECT_TRUE(r.pd1);
  EXPECT_TRUE(r.pd2);
}

TEST(CheckConditions, PerturbedIsInfeasible) {
  const auto r = check_conditions(perturbed_q_grid());
  EXPECT_FALSE(r.feasible);
  EXPECT_GT(r.commResidual, 1e-3);
}

TEST(Stability2D, Examples) {
  const auto i = stability_check_2d(MatrixPolynomial2D::identity(2), 64);
  EXPECT_TRUE(i.pass);
  EXPECT_EQ(i.minModulus, kInf);

  const auto s = stability_check_2d(oracle::separable_p(), 512);
  EXPECT_TRUE(s.pass);
  EXPECT_NEAR(s.zSweep, 2.0, 1e-10);
  EXPECT_NEAR(s.wSweep, 2.5, 1e-10);
  EXPECT_NEAR(s.minModulus, 2.0, 1e-10);

  MatrixPolynomial2D t(1, 1, 1);
  t(0, 0) = scalar(1.0);
  t(1, 1) = scalar(-1.0);
  const auto f = stability_check_2d(t, 64, 1e-12);
  EXPECT_FALSE(f.pass);
  EXPECT_NEAR(f.minModulus, 1.0, 1e-12);
}

TEST(Design, Identity) {
  const auto d = design_filters(oracle::identity_grid(2, 1, 1));
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 1; ++j) {
      const Mat want = (i == 0 && j == 0) ? Mat(Mat::Identity(2, 2)) : Mat(Mat::Zero(2, 2));
      EXPECT_LT((d.p(i, j) - want).norm(), 1e-14);
      EXPECT_LT((d.r(i, j) - want).norm(), 1e-14);
    }
  }
}

TEST(Design, SeparableWithClosedFormCorner) {
  const auto d = design_filters(oracle::separable_grid(), with_corner(0.2 / 0.63));
  const auto p = normalize_by_p00(d.p);
  EXPECT_LT(oracle::max_coeff_diff(p, oracle::separable_p()), 1e-8);
  EXPECT_GT(d.p(0, 0)(0, 0).real(), 0.0);
  EXPECT_GT(d.r(0, 0)(0, 0).real(), 0.0);
  EXPECT_TRUE(d.stabilityP.pass);
  EXPECT_TRUE(d.stabilityR.pass);
  EXPECT_LE(d.structureLeft, 1e-9);
  EXPECT_LE(d.structureRight, 1e-9);
}

TEST(Design, SeparableDefaultCornerIsUniqueChoice) {
  const auto d = design_filters(oracle::separable_grid());
  EXPECT_NEAR(d.cornerNm(0, 0).real(), 0.33125 / 0.63, 1e-12);
  EXPECT_LT(std::abs(d.p(1, 1)(0, 0)), 1e-12);
}

TEST(Design, RecoversQ) {
  const auto d = design_filters(grid_from_polynomial(oracle::q_p(), 1, 1));
  EXPECT_LT(oracle::max_coeff_diff(normalize_by_p00(d.p), oracle::q_p()), 1e-7);
}

TEST(Design, InfeasibleThrows) {
  try {
    design_filters(perturbed_q_grid());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
}

TEST(Design, AnyCompatibleCornerWorks) {
  const auto d = design_filters(oracle::separable_grid(), with_corner(0.9));
  EXPECT_LE(d.structureLeft, 1e-9);
  EXPECT_TRUE(d.stabilityP.pass);
}

TEST(Design, IncompatibleCornerIsNotPd) {
  try {
    design_filters(oracle::separable_grid(), with_corner(1.58));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPD) << e.what();
  }
}

TEST(Design, TwoSidedIdentity) {
  const auto d = design_filters(grid_from_polynomial(oracle::q_p(), 1, 1));
  double worst = 0.0;
  for (int a = 0; a < 64; ++a) {
    for (int b = 0; b < 64; ++b) {
      const cd z = std::polar(1.0, 2.0 * std::numbers::pi * a / 64);
      const cd w = std::polar(1.0, 2.0 * std::numbers::pi * b / 64);
      const Mat p = d.p.eval(z, w), r = d.r.eval(z, w);
      const Mat x = p.adjoint().inverse() * p.inverse();
      const Mat y = r.inverse() * r.adjoint().inverse();
      worst = std::max(worst, (x - y).norm());
    }
  }
  EXPECT_LT(worst, 1e-7);
}

TEST(Extend2D, Identity) {
  const auto c = extend_covariance_2d(MatrixPolynomial2D::identity(1), IndexRect(-2, 2, -2, 2), fast());
  for (const auto& [k, v] : c) EXPECT_NEAR(std::abs(v(0, 0) - (k == Index2{0, 0} ? 1.0 : 0.0)), 0.0, 1e-14);
}

TEST(Extend2D, SeparableClosedForm) {
  const auto c = extend_covariance_2d(oracle::separable_p(), IndexRect(-3, 3, -3, 3));
  double worst = 0.0;
  for (const auto& [k, v] : c) worst = std::max(worst, std::abs(v(0, 0) - oracle::separable_c(k.i, k.j)));
  EXPECT_LT(worst, 1e-9);
}

TEST(Extend2D, MatchesDirectQuadrature) {
  std::mt19937_64 rng(37);
  const auto p = oracle::random_stable(2, 1, 2, false, rng);
  const auto c = extend_covariance_2d(p, IndexRect(-2, 2, -2, 2), fast());
  const auto q = oracle::quadrature_coefficients(p, -2, 2, 256);
  double worst = 0.0;
  for (const auto& [k, v] : c) worst = std::max(worst, (v - q.at(k)).cwiseAbs().maxCoeff());
  EXPECT_LT(worst, 1e-12);
}

TEST(Extend2D, RefusesUnstable) {
  MatrixPolynomial2D t(1, 1, 1);
  t(0, 0) = scalar(1.0);
  t(1, 0) = scalar(-1.5);
  try {
    extend_covariance_2d(t, IndexRect(0, 1, 0, 1), fast());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unstable);
  }
}

TEST(Extend2D, RoundTripReproducesBand) {
  const auto g = grid_from_polynomial(oracle::q_p(), 1, 1);
  const auto d = design_filters(g);
  const auto c = extend_covariance_2d(d.p, IndexRect(-1, 1, -1, 1));
  for (const auto& [k, v] : g.entries()) EXPECT_LT((c.at(k) - v).cwiseAbs().maxCoeff(), 1e-7) << to_string(k);
}

TEST(InverseFormula, Identity) {
  const auto i = MatrixPolynomial2D::identity(1);
  EXPECT_LE(inverse_formula_check(i, i, 0), 1e-12);
  EXPECT_LE(inverse_formula_check(i, i, 2), 1e-12);
}

TEST(InverseFormula, SeparableAndQ) {
  const auto s = design_filters(oracle::separable_grid(), with_corner(0.2 / 0.63));
  EXPECT_LE(inverse_formula_check(s.p, s.r, 0), 1e-7);
  const auto q = design_filters(grid_from_polynomial(oracle::q_p(), 1, 1));
  EXPECT_LE(inverse_formula_check(q.p, q.r, 1), 1e-6);
  EXPECT_LE(inverse_formula_check(q.p, q.r, 2), 1e-6);
}

TEST(NestedFactor, Examples) {
  const auto i = MatrixPolynomial2D::identity(1);
  EXPECT_LE(nested_factor_check(i, i, 0), 1e-12);
  const auto s = design_filters(oracle::separable_grid(), with_corner(0.2 / 0.63));
  EXPECT_LE(nested_factor_check(s.p, s.r, 0), 1e-6);
  const auto q = design_filters(grid_from_polynomial(oracle::q_p(), 1, 1));
  EXPECT_LE(nested_factor_check(q.p, q.r, 1), 1e-6);
}

TEST(NormalizeByP00, LeadingCoefficientIsIdentity) {
  std::mt19937_64 rng(41);
  auto p = oracle::random_stable(2, 1, 1, false, rng);
  const auto q = normalize_by_p00(p.times_right(oracle::random_pd(2, rng)));
  EXPECT_LT((q(0, 0) - Mat::Identity(2, 2)).norm(), 1e-12);
}
