#include "bidisk/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace bidisk {

MatrixPolynomial::MatrixPolynomial(std::vector<Mat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "empty matrix polynomial");
  const auto d = coeffs_.front().rows();
  for (const auto& c : coeffs_) {
    if (c.rows() != d || c.cols() != d) {
      throw Error(ErrorKind::InvalidArgument, "matrix polynomial coefficients must be square");
    }
  }
}

Mat MatrixPolynomial::eval(cd z) const {
  // Horner
  Mat acc = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = acc * z + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

MatrixPolynomial2D::MatrixPolynomial2D(int d, int n, int m)
    : d_(d), n_(n), m_(m),
      c_(static_cast<std::size_t>((n + 1) * (m + 1)), Mat::Zero(d, d)) {
  if (d <= 0 || n < 0 || m < 0) {
    throw Error(ErrorKind::InvalidArgument, "invalid polynomial dimensions");
  }
}

MatrixPolynomial2D MatrixPolynomial2D::identity(int d) {
  MatrixPolynomial2D p(d, 0, 0);
  p(0, 0) = Mat::Identity(d, d);
  return p;
}

Mat MatrixPolynomial2D::eval(cd z, cd w) const {
  return in_w(z).eval(w);
}

MatrixPolynomial MatrixPolynomial2D::in_w(cd z) const {
  std::vector<Mat> out(static_cast<std::size_t>(m_ + 1), Mat::Zero(d_, d_));
  for (int j = 0; j <= m_; ++j) {
    Mat acc = (*this)(n_, j);
    for (int i = n_ - 1; i >= 0; --i) acc = acc * z + (*this)(i, j);
    out[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial2D::in_z(cd w) const {
  std::vector<Mat> out(static_cast<std::size_t>(n_ + 1), Mat::Zero(d_, d_));
  for (int i = 0; i <= n_; ++i) {
    Mat acc = (*this)(i, m_);
    for (int j = m_ - 1; j >= 0; --j) acc = acc * w + (*this)(i, j);
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial2D MatrixPolynomial2D::times_right(const Mat& x) const {
  MatrixPolynomial2D out(d_, n_, m_);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] * x;
  return out;
}

namespace {

// Coefficients of det A(z), lowest degree first, by interpolation at roots of unity.
std::vector<cd> det_coefficients(const MatrixPolynomial& a) {
  const int deg = a.degree() * a.dim();
  const int k = deg + 1;
  std::vector<cd> vals(static_cast<std::size_t>(k));
  double scale = 0.0;
  for (const auto& c : a.coeffs()) scale += c.norm();
  for (int t = 0; t < k; ++t) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * t / k);
    vals[static_cast<std::size_t>(t)] = a.eval(z).determinant();
  }
  std::vector<cd> coef(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    cd acc = 0.0;
    for (int t = 0; t < k; ++t) {
      acc += vals[static_cast<std::size_t>(t)] *
             std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(s) * t / k);
    }
    coef[static_cast<std::size_t>(s)] = acc / static_cast<double>(k);
  }
  double big = 0.0;
  for (const auto& c : coef) big = std::max(big, std::abs(c));
  const double floor = 1e-13 * std::pow(std::max(scale, 1e-300), a.dim());
  if (big <= floor) {
    throw Error(ErrorKind::DegenerateDeterminant, "det A(z) vanishes identically");
  }
  while (coef.size() > 1 && std::abs(coef.back()) <= 1e-12 * big) coef.pop_back();
  return coef;
}

}  // namespace

std::vector<cd> det_roots(const MatrixPolynomial& a) {
  const auto coef = det_coefficients(a);
  const auto deg = static_cast<Eigen::Index>(coef.size()) - 1;
  if (deg <= 0) return {};
  Mat comp = Mat::Zero(deg, deg);
  const cd lead = coef.back();
  for (Eigen::Index c = 0; c < deg; ++c) comp(0, c) = -coef[static_cast<std::size_t>(deg - 1 - c)] / lead;
  for (Eigen::Index r = 1; r < deg; ++r) comp(r, r - 1) = 1.0;
  Eigen::ComplexEigenSolver<Mat> es(comp, false);
  std::vector<cd> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  std::sort(roots.begin(), roots.end(), [](cd x, cd y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
    return std::arg(x) < std::arg(y);
  });
  return roots;
}

double det_min_root_modulus(const MatrixPolynomial& a) {
  const auto roots = det_roots(a);
  double best = kInf;
  for (const auto& r : roots) best = std::min(best, std::abs(r));
  return best;
}

}  // namespace bidisk
