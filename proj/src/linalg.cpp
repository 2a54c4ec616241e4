#include "bidisk/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace bidisk {

std::string to_string(Index2 k) {
  return "(" + std::to_string(k.i) + "," + std::to_string(k.j) + ")";
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingIndex: return "MissingIndex";
    case ErrorKind::NotPD: return "NotPD";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DegenerateDeterminant: return "DegenerateDeterminant";
    case ErrorKind::NotPositiveOnCircle: return "NotPositiveOnCircle";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::SingularTk: return "SingularTk";
    case ErrorKind::NormAtLeastOne: return "NormAtLeastOne";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::CommViolation: return "CommViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

double spectral_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  if (std::min(a.rows(), a.cols()) <= 16) {
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

Mat hermitian_sqrt(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.size() > 0 && ev.minCoeff() <= 0.0) {
    throw Error(ErrorKind::NotPD, "hermitian_sqrt of a matrix with eigenvalue " +
                                      std::to_string(ev.minCoeff()));
  }
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

Mat block_cholesky(const Mat& s, int blockSize) {
  const Eigen::Index n = s.rows();
  if (s.cols() != n || blockSize <= 0 || n % blockSize != 0) {
    throw Error(ErrorKind::InvalidArgument, "block_cholesky: incompatible block size");
  }
  if (blockSize == 1) {
    Eigen::LLT<Mat> llt(s);
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorKind::NotPD, "Cholesky factorization failed");
    }
    return llt.matrixL();
  }
  const Eigen::Index b = blockSize;
  const Eigen::Index nb = n / b;
  Mat l = Mat::Zero(n, n);
  for (Eigen::Index j = 0; j < nb; ++j) {
    Mat schur = s.block(j * b, j * b, b, b);
    if (j > 0) {
      const auto row = l.block(j * b, 0, b, j * b);
      schur.noalias() -= row * row.adjoint();
    }
    schur = 0.5 * (schur + schur.adjoint()).eval();
    const Mat ljj = hermitian_sqrt(schur);
    l.block(j * b, j * b, b, b) = ljj;
    const Mat ljjInvAdj = ljj.inverse().adjoint();
    for (Eigen::Index i = j + 1; i < nb; ++i) {
      Mat t = s.block(i * b, j * b, b, b);
      if (j > 0) {
        t.noalias() -= l.block(i * b, 0, b, j * b) * l.block(j * b, 0, b, j * b).adjoint();
      }
      l.block(i * b, j * b, b, b) = t * ljjInvAdj;
    }
  }
  return l;
}

Mat exchange(int n) {
  Mat j = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) j(k, n - 1 - k) = 1.0;
  return j;
}

Mat block_cholesky_upper(const Mat& s, int blockSize) {
  const Mat j = exchange(static_cast<int>(s.rows()));
  return j * block_cholesky(j * s * j, blockSize) * j;
}

Mat hpd_solve(const Mat& s, const Mat& b) {
  Eigen::LLT<Mat> llt(s);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::NotPD, "Cholesky solve of a non positive definite matrix");
  }
  return llt.solve(b);
}

double commutator_residual(const Mat& phi, const Mat& phi1, const Mat& phi2) {
  Eigen::LLT<Mat> llt(phi);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::NotPD, "Phi is not positive definite");
  }
  const Mat x = phi1 * llt.solve(phi2.adjoint());
  const Mat y = phi2.adjoint() * llt.solve(phi1);
  const double denom = std::max({x.norm(), y.norm(), 1e-12 * phi.norm()});
  if (denom == 0.0) return 0.0;
  return (x - y).norm() / denom;
}

}  // namespace bidisk
