#ifndef BIDISK_SPECTRAL_FACTOR_HPP
#define BIDISK_SPECTRAL_FACTOR_HPP

#include <vector>

#include "bidisk/polynomial.hpp"

namespace bidisk {

// A(z) = sum_{k=-n}^{n} A_k z^k with A_{-k} = A_k^*.
class TrigMatrixPolynomial {
 public:
  TrigMatrixPolynomial(int d, std::vector<Mat> nonNegative);  // A_0..A_n

  int dim() const { return d_; }
  int degree() const { return n_; }
  const Mat& operator[](int k) const;
  Mat eval(cd z) const;

  // Smallest eigenvalue of A(z) over gridN equispaced points of the circle.
  double min_eig_on_circle(int gridN = 256) const;
  double sup_norm_on_circle(int gridN = 256) const;

 private:
  int d_;
  int n_;
  std::vector<Mat> blocks_;
};

struct SpectralOptions {
  int bauerSize = 0;       // rows of the banded Cholesky; 0 means 64 (n+1)
  double tol = 1e-8;       // residual bound on the circle grid
  int normBlock = 1;       // 1: M(0) lower triangular, positive diagonal.
                           // k > 1: k x k Hermitian PD diagonal blocks.
  int gridN = 256;
};

struct SpectralFactor {
  MatrixPolynomial poly;
  double residual = 0.0;  // max over the grid, relative to max(1, sup ||A||)
  int rowsUsed = 0;
};

// A(z) = M(z) M(1/conj z)^*, M stable.
SpectralFactor left_stable_factor(const TrigMatrixPolynomial& a, const SpectralOptions& opt = {});
// A(z) = N(1/conj z)^* N(z), N stable.
SpectralFactor right_stable_factor(const TrigMatrixPolynomial& a, const SpectralOptions& opt = {});

}  // namespace bidisk

#endif  // BIDISK_SPECTRAL_FACTOR_HPP
