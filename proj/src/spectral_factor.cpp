#include "bidisk/spectral_factor.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "bidisk/linalg.hpp"

namespace bidisk {

TrigMatrixPolynomial::TrigMatrixPolynomial(int d, std::vector<Mat> nonNegative)
    : d_(d), n_(static_cast<int>(nonNegative.size()) - 1) {
  if (d <= 0 || nonNegative.empty()) {
    throw Error(ErrorKind::InvalidArgument, "trigonometric polynomial needs A_0");
  }
  blocks_.resize(static_cast<std::size_t>(2 * n_ + 1));
  for (int k = 0; k <= n_; ++k) {
    const Mat& a = nonNegative[static_cast<std::size_t>(k)];
    if (a.rows() != d || a.cols() != d) {
      throw Error(ErrorKind::InvalidArgument, "trigonometric coefficient is not d x d");
    }
    blocks_[static_cast<std::size_t>(n_ + k)] = a;
    blocks_[static_cast<std::size_t>(n_ - k)] = a.adjoint();
  }
  if ((blocks_[static_cast<std::size_t>(n_)] - blocks_[static_cast<std::size_t>(n_)].adjoint())
          .cwiseAbs()
          .maxCoeff() > 1e-12 * std::max(1.0, blocks_[static_cast<std::size_t>(n_)].norm())) {
    throw Error(ErrorKind::NotHermitian, "A_0 is not Hermitian");
  }
}

const Mat& TrigMatrixPolynomial::operator[](int k) const {
  if (k < -n_ || k > n_) throw Error(ErrorKind::MissingIndex, "A_" + std::to_string(k));
  return blocks_[static_cast<std::size_t>(k + n_)];
}

Mat TrigMatrixPolynomial::eval(cd z) const {
  Mat acc = Mat::Zero(d_, d_);
  for (int k = -n_; k <= n_; ++k) acc += (*this)[k] * std::pow(z, k);
  return acc;
}

double TrigMatrixPolynomial::min_eig_on_circle(int gridN) const {
  double best = std::numeric_limits<double>::infinity();
  for (int t = 0; t < gridN; ++t) {
    const Mat a = eval(std::polar(1.0, 2.0 * std::numbers::pi * t / gridN));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
    best = std::min(best, es.eigenvalues().minCoeff());
  }
  return best;
}

double TrigMatrixPolynomial::sup_norm_on_circle(int gridN) const {
  double best = 0.0;
  for (int t = 0; t < gridN; ++t) {
    best = std::max(best, spectral_norm(eval(std::polar(1.0, 2.0 * std::numbers::pi * t / gridN))));
  }
  return best;
}

namespace {

double factor_residual(const TrigMatrixPolynomial& a, const MatrixPolynomial& m, int gridN) {
  const double scale = std::max(1.0, a.sup_norm_on_circle(gridN));
  double worst = 0.0;
  for (int t = 0; t < gridN; ++t) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * t / gridN);
    const Mat mz = m.eval(z);
    // on the circle M(1/conj z) = M(z)
    worst = std::max(worst, (mz * mz.adjoint() - a.eval(z)).norm());
  }
  return worst / scale;
}

struct BauerRun {
  MatrixPolynomial poly;
  int rows = 0;
};

// Banded block Cholesky of (A_{i-j}), keeping only the last n+1 block rows.
// The trailing row (L[i][i], L[i][i-1], ..., L[i][i-n]) converges to (M_0..M_n).
BauerRun bauer(const TrigMatrixPolynomial& a, int maxRows, int normBlock) {
  const int d = a.dim(), n = a.degree();
  const double eps = std::numeric_limits<double>::epsilon();
  // rows[r][c] = L[i_r][i_r - n + c], c = 0..n
  std::deque<std::vector<Mat>> rows;
  std::deque<Mat> diagInvAdj;
  std::vector<Mat> prev;
  BauerRun out;
  for (int i = 0; i < maxRows; ++i) {
    std::vector<Mat> row(static_cast<std::size_t>(n + 1), Mat::Zero(d, d));
    const int j0 = std::max(0, i - n);
    for (int j = j0; j < i; ++j) {
      const auto& rj = rows[rows.size() - static_cast<std::size_t>(i - j)];
      Mat acc = a[i - j];
      for (int k = j0; k < j; ++k) {
        acc -= row[static_cast<std::size_t>(k - i + n)] * rj[static_cast<std::size_t>(k - j + n)].adjoint();
      }
      row[static_cast<std::size_t>(j - i + n)] =
          acc * diagInvAdj[diagInvAdj.size() - static_cast<std::size_t>(i - j)];
    }
    Mat schur = a[0];
    for (int k = j0; k < i; ++k) {
      const Mat& l = row[static_cast<std::size_t>(k - i + n)];
      schur -= l * l.adjoint();
    }
    const Mat lii = block_cholesky(0.5 * (schur + schur.adjoint()), normBlock);
    row[static_cast<std::size_t>(n)] = lii;
    diagInvAdj.push_back(lii.inverse().adjoint());
    rows.push_back(row);
    if (rows.size() > static_cast<std::size_t>(n + 1)) {
      rows.pop_front();
      diagInvAdj.pop_front();
    }
    out.rows = i + 1;
    if (i < n) continue;
    std::vector<Mat> m(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) m[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(n - k)];
    if (!prev.empty()) {
      double diff = 0.0, size = 0.0;
      for (int k = 0; k <= n; ++k) {
        diff += (m[static_cast<std::size_t>(k)] - prev[static_cast<std::size_t>(k)]).squaredNorm();
        size += m[static_cast<std::size_t>(k)].squaredNorm();
      }
      prev = m;
      if (std::sqrt(diff) <= 64.0 * eps * std::sqrt(size)) break;
    } else {
      prev = m;
    }
  }
  out.poly = MatrixPolynomial(prev);
  return out;
}

}  // namespace

SpectralFactor left_stable_factor(const TrigMatrixPolynomial& a, const SpectralOptions& opt) {
  const int d = a.dim(), n = a.degree();
  if (opt.normBlock <= 0 || d % opt.normBlock != 0) {
    throw Error(ErrorKind::InvalidArgument, "normalization block must divide the dimension");
  }
  const double minEig = a.min_eig_on_circle(opt.gridN);
  if (!(minEig > 1e-14 * std::max(1.0, a[0].norm()))) {
    throw Error(ErrorKind::NotPositiveOnCircle,
                "minimum eigenvalue on the circle is " + std::to_string(minEig));
  }
  if (n == 0) {
    SpectralFactor f{MatrixPolynomial({block_cholesky(a[0], opt.normBlock)}), 0.0, 1};
    f.residual = factor_residual(a, f.poly, opt.gridN);
    return f;
  }
  int size = std::max(opt.bauerSize > 0 ? opt.bauerSize : 64 * (n + 1), n + 2);
  for (int attempt = 0; attempt < 2; ++attempt, size *= 2) {
    BauerRun run = bauer(a, size, opt.normBlock);
    const double res = factor_residual(a, run.poly, opt.gridN);
    if (res <= opt.tol) return SpectralFactor{std::move(run.poly), res, run.rows};
  }
  throw Error(ErrorKind::NoConvergence,
              "banded Cholesky did not reach the residual bound within " + std::to_string(size / 2) +
                  " rows");
}

SpectralFactor right_stable_factor(const TrigMatrixPolynomial& a, const SpectralOptions& opt) {
  const int d = a.dim(), n = a.degree();
  const Mat j = exchange(d);
  std::vector<Mat> flipped;
  for (int k = 0; k <= n; ++k) flipped.push_back(j * a[k].transpose() * j);
  SpectralFactor f = left_stable_factor(TrigMatrixPolynomial(d, std::move(flipped)), opt);
  std::vector<Mat> coeffs;
  for (const auto& m : f.poly.coeffs()) coeffs.push_back((j * m * j).transpose());
  f.poly = MatrixPolynomial(std::move(coeffs));
  double worst = 0.0;
  const double scale = std::max(1.0, a.sup_norm_on_circle(opt.gridN));
  for (int t = 0; t < opt.gridN; ++t) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * t / opt.gridN);
    const Mat nz = f.poly.eval(z);
    worst = std::max(worst, (nz.adjoint() * nz - a.eval(z)).norm());
  }
  f.residual = worst / scale;
  if (f.residual > opt.tol) {
    throw Error(ErrorKind::NoConvergence, "right factor residual " + std::to_string(f.residual));
  }
  return f;
}

}  // namespace bidisk
