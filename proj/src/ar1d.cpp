#include "bidisk/ar1d.hpp"

#include <map>

#include "bidisk/covariance.hpp"
#include "bidisk/linalg.hpp"

namespace bidisk {

BlockToeplitz1D::BlockToeplitz1D(int d, std::vector<Mat> nonNegative)
    : d_(d), n_(static_cast<int>(nonNegative.size()) - 1) {
  if (d <= 0 || nonNegative.empty()) {
    throw Error(ErrorKind::InvalidArgument, "block Toeplitz data needs A_0");
  }
  for (const auto& a : nonNegative) {
    if (a.rows() != d || a.cols() != d) {
      throw Error(ErrorKind::InvalidArgument, "block Toeplitz coefficient is not d x d");
    }
  }
  blocks_.resize(static_cast<std::size_t>(2 * n_ + 1));
  for (int k = 0; k <= n_; ++k) {
    blocks_[static_cast<std::size_t>(n_ + k)] = nonNegative[static_cast<std::size_t>(k)];
    blocks_[static_cast<std::size_t>(n_ - k)] = nonNegative[static_cast<std::size_t>(k)].adjoint();
  }
}

const Mat& BlockToeplitz1D::operator[](int k) const {
  if (k < -n_ || k > n_) throw Error(ErrorKind::MissingIndex, "A_" + std::to_string(k));
  return blocks_[static_cast<std::size_t>(k + n_)];
}

Mat BlockToeplitz1D::toeplitz(int size) const {
  Mat t(size * d_, size * d_);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) t.block(i * d_, j * d_, d_, d_) = (*this)[i - j];
  return t;
}

MatrixPolynomial Ar1Solution::poly() const {
  if (direction == Direction::Left) return MatrixPolynomial(coeffs);
  return MatrixPolynomial(std::vector<Mat>(coeffs.rbegin(), coeffs.rend()));
}

Mat Ar1Solution::eval(cd z) const {
  if (direction == Direction::Left) return poly().eval(z);
  return poly().eval(1.0 / z);
}

namespace {

Mat checked_toeplitz(const BlockToeplitz1D& t, int size) {
  const Mat tm = t.toeplitz(size);
  if (!is_positive_definite(tm).positiveDefinite) {
    throw Error(ErrorKind::NotPD, "block Toeplitz matrix is not positive definite");
  }
  return tm;
}

}  // namespace

Ar1Solution solve_yule_walker_left(const BlockToeplitz1D& t) {
  const int d = t.dim(), n = t.n();
  const Mat tm = checked_toeplitz(t, n + 1);
  Mat rhs = Mat::Zero(tm.rows(), d);
  rhs.topRows(d).setIdentity();
  const Mat x = hpd_solve(tm, rhs);
  Ar1Solution s;
  s.direction = Direction::Left;
  const Mat p0 = x.topRows(d);
  s.normalizer = block_cholesky(0.5 * (p0 + p0.adjoint()));
  const Mat binvAdj = s.normalizer.inverse().adjoint();
  for (int i = 0; i <= n; ++i) {
    s.raw.push_back(x.middleRows(i * d, d));
    s.coeffs.push_back(s.raw.back() * binvAdj);
  }
  return s;
}

Ar1Solution solve_yule_walker_right(const BlockToeplitz1D& t) {
  const int d = t.dim(), n = t.n();
  const Mat tm = checked_toeplitz(t, n + 1);
  Mat rhs = Mat::Zero(tm.rows(), d);
  rhs.bottomRows(d).setIdentity();
  const Mat x = hpd_solve(tm, rhs);
  Ar1Solution s;
  s.direction = Direction::Right;
  const Mat q0 = x.bottomRows(d);
  s.normalizer = block_cholesky_upper(0.5 * (q0 + q0.adjoint()));
  const Mat cinvAdj = s.normalizer.inverse().adjoint();
  for (int i = 0; i <= n; ++i) {
    s.raw.push_back(x.middleRows(i * d, d));
    s.coeffs.push_back(s.raw.back() * cinvAdj);
  }
  return s;
}

std::vector<Mat> extend_covariance_1d(const BlockToeplitz1D& t, int rMax) {
  const int d = t.dim(), n = t.n();
  if (rMax <= n) return {};
  std::map<int, Mat> neg;  // A_{-k}
  for (int k = 0; k <= n; ++k) neg[k] = t[-k];
  // (A_{-1} ... A_{-n}) T_{n-1}^-1
  Mat head(d, n * d);
  for (int k = 1; k <= n; ++k) head.middleCols((k - 1) * d, d) = t[-k];
  const Mat tn = checked_toeplitz(t, n);
  const Mat w = hpd_solve(tn, head.adjoint()).adjoint();
  std::vector<Mat> out;
  for (int r = n + 1; r <= rMax; ++r) {
    Mat col(n * d, d);
    for (int q = 0; q < n; ++q) col.middleRows(q * d, d) = neg.at(r - 1 - q);
    neg[r] = w * col;
    out.push_back(neg[r].adjoint());
  }
  return out;
}

Stability1D stability_check_1d(const MatrixPolynomial& poly, double margin) {
  Stability1D s;
  s.minRootModulus = det_min_root_modulus(poly);
  s.stable = s.minRootModulus > 1.0 + margin;
  return s;
}

}  // namespace bidisk
