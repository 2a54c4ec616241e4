#ifndef BIDISK_AR1D_HPP
#define BIDISK_AR1D_HPP

#include <vector>

#include "bidisk/polynomial.hpp"

namespace bidisk {

// Blocks A_{-n}..A_n with A_{-k} = A_k^*.
class BlockToeplitz1D {
 public:
  BlockToeplitz1D(int d, std::vector<Mat> nonNegative);  // A_0..A_n; negatives by adjoint

  int dim() const { return d_; }
  int n() const { return n_; }
  const Mat& operator[](int k) const;  // k in -n..n

  // (A_{i-j})_{i,j=0}^{size-1}, size <= n+1
  Mat toeplitz(int size) const;

 private:
  int d_;
  int n_;
  std::vector<Mat> blocks_;  // A_{-n}..A_n
};

enum class Direction { Left, Right };

struct Ar1Solution {
  Direction direction = Direction::Left;
  // Left: P_0..P_n and R_0..R_n. Right: Q_{-n}..Q_0 and S_{-n}..S_0 (stored in that order).
  std::vector<Mat> raw;
  std::vector<Mat> coeffs;
  Mat normalizer;  // B (lower) or C (upper)

  // Left: R(z). Right: S evaluated as a polynomial in 1/z, i.e. sum_k S_{-k} u^k.
  MatrixPolynomial poly() const;
  // Value of R(z) or S(z) = sum_i S_i z^i at z.
  Mat eval(cd z) const;
};

Ar1Solution solve_yule_walker_left(const BlockToeplitz1D& t);
Ar1Solution solve_yule_walker_right(const BlockToeplitz1D& t);

// A_{n+1}..A_{rMax}, continuing the data by the maximum-entropy recursion.
std::vector<Mat> extend_covariance_1d(const BlockToeplitz1D& t, int rMax);

struct Stability1D {
  bool stable = false;
  double minRootModulus = 0.0;
};

Stability1D stability_check_1d(const MatrixPolynomial& poly, double margin = 1e-9);

}  // namespace bidisk

#endif  // BIDISK_AR1D_HPP
