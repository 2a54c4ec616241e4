#include <gtest/gtest.h>

#include "bidisk/covariance.hpp"
#include "oracles.hpp"

using namespace bidisk;

TEST(IndexRect, PositionIsLexicographicFirstMajor) {
  const IndexRect r(-1, 1, 0, 2);
  EXPECT_EQ(r.size(), 9u);
  EXPECT_EQ(r.position({-1, 0}), 0u);
  EXPECT_EQ(r.position({-1, 2}), 2u);
  EXPECT_EQ(r.position({0, 0}), 3u);
  EXPECT_EQ(r.position({1, 1}), 7u);
  for (std::size_t p = 0; p < r.size(); ++p) EXPECT_EQ(r.position(r.at(p)), p);
  EXPECT_THROW(r.position({2, 0}), Error);
}

TEST(IndexList, WithoutKeepsOrder) {
  const IndexList full = IndexRect(0, 1, 0, 1);
  const IndexList s = full.without({{0, 0}, {1, 1}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (Index2{0, 1}));
  EXPECT_EQ(s[1], (Index2{1, 0}));
  try {
    s.position({0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingIndex);
  }
}

TEST(CorrelationGrid, BandExcludesCorners) {
  CorrelationGrid g(1, 2, 1);
  EXPECT_TRUE(g.in_band({2, 0}));
  EXPECT_TRUE(g.in_band({-1, 1}));
  EXPECT_FALSE(g.in_band({2, 1}));
  EXPECT_TRUE(g.is_corner({-2, 1}));
  EXPECT_FALSE(g.in_band({3, 0}));
  EXPECT_THROW(g.at({0, 0}), Error);
}

TEST(ValidateGrid, IdentityIsValid) {
  const auto rep = validate_grid(oracle::identity_grid());
  EXPECT_TRUE(rep.valid(1e-10));
  EXPECT_EQ(rep.symmetryViolation, 0.0);
  EXPECT_DOUBLE_EQ(rep.c00MinEig, 1.0);
}

TEST(ValidateGrid, SymmetryViolationMagnitude) {
  auto g = oracle::identity_grid();
  g.set({1, 0}, oracle::scalar(0.5));
  g.set({-1, 0}, oracle::scalar(0.4));
  const auto rep = validate_grid(g);
  EXPECT_NEAR(rep.symmetryViolation, 0.1, 1e-15);
  ASSERT_TRUE(rep.worstSymmetryIndex.has_value());
  EXPECT_FALSE(rep.valid(1e-10));
}

TEST(ValidateGrid, SeparableIsValid) {
  EXPECT_TRUE(validate_grid(oracle::separable_grid()).valid(1e-10));
}

TEST(ValidateGrid, MissingAndExtra) {
  auto g = oracle::identity_grid();
  g.erase({0, 1});
  g.set({1, 1}, oracle::scalar(0.0));
  const auto rep = validate_grid(g);
  ASSERT_EQ(rep.missing.size(), 1u);
  EXPECT_EQ(rep.missing[0], (Index2{0, 1}));
  ASSERT_EQ(rep.extra.size(), 1u);
  EXPECT_EQ(rep.extra[0], (Index2{1, 1}));
}

TEST(ValidateGrid, IndefiniteC00) {
  auto g = oracle::identity_grid();
  g.set({0, 0}, oracle::scalar(-1.0));
  const auto rep = validate_grid(g);
  EXPECT_FALSE(rep.c00PositiveDefinite);
  EXPECT_LT(rep.c00MinEig, 0.0);
}

TEST(CorrelationGrid, SetRejectsWrongShape) {
  auto g = oracle::identity_grid();
  EXPECT_THROW(g.set({1, 0}, Mat::Zero(2, 2)), Error);
}

TEST(DoublyToeplitz, IdentityGivesIdentity) {
  const auto g = oracle::identity_grid();
  const IndexRect r(0, 0, 0, 1);
  const auto b = build_doubly_toeplitz(g, r, r);
  EXPECT_TRUE(b.data().isApprox(Mat::Identity(2, 2)));
}

TEST(DoublyToeplitz, SeparableCornerBlock) {
  // c_{-1,-1} is a corner, so the grid carries its corners here
  const auto g = bidisk::CorrelationGrid::from_function(
      1, 1, 1, [](Index2 k) { return oracle::scalar(oracle::separable_c(k.i, k.j)); }, true);
  const IndexRect r(0, 1, 0, 1);
  const auto b = build_doubly_toeplitz(g, r, r);
  ASSERT_EQ(b.data().rows(), 4);
  EXPECT_NEAR(b.block({0, 0}, {1, 1})(0, 0).real(), 0.2 / 0.63, 1e-15);
  EXPECT_NEAR(b.block({0, 0}, {1, 1})(0, 0).real(), 0.317460317460, 1e-12);
  EXPECT_NEAR(b.block({1, 0}, {0, 1})(0, 0).real(), oracle::separable_c(1, -1), 1e-15);
  EXPECT_LT((b.data() - b.data().adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(doubly_toeplitz_deviation(b.data(), r, r, 1), 1e-15);
}

TEST(DoublyToeplitz, CornerIsMissing) {
  const auto g = oracle::separable_grid();
  try {
    build_doubly_toeplitz(g, IndexRect(0, 0, 0, 0), IndexRect(1, 1, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingIndex);
  }
}

TEST(PositiveDefinite, Examples) {
  auto r = is_positive_definite(Mat::Identity(4, 4));
  EXPECT_TRUE(r.positiveDefinite);
  EXPECT_DOUBLE_EQ(r.minEig, 1.0);

  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -0.1;
  r = is_positive_definite(m);
  EXPECT_FALSE(r.positiveDefinite);
  EXPECT_NEAR(r.minEig, -0.1, 1e-15);

  m << 1.0, 0.5, 0.5, 1.0;
  r = is_positive_definite(m);
  EXPECT_TRUE(r.positiveDefinite);
  EXPECT_NEAR(r.minEig, 0.5, 1e-15);
}

TEST(PositiveDefinite, RejectsNonHermitian) {
  Mat m(2, 2);
  m << 1.0, 0.5, 0.1, 1.0;
  try {
    is_positive_definite(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
}

TEST(DoublyToeplitz, DeviationDetectsBrokenShift) {
  const auto g = oracle::separable_grid(2, 2);
  const IndexRect r(0, 1, 0, 1);
  Mat m = build_doubly_toeplitz(g, r, r).data();
  m(0, 1) += 0.1;
  EXPECT_GT(doubly_toeplitz_deviation(m, r, r, 1), 0.05);
}
