#ifndef BIDISK_POLYNOMIAL_HPP
#define BIDISK_POLYNOMIAL_HPP

#include <limits>
#include <vector>

#include "bidisk/types.hpp"

namespace bidisk {

// A(z) = sum_{k=0}^{deg} A_k z^k with square d x d coefficients.
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  explicit MatrixPolynomial(std::vector<Mat> coeffs);

  int dim() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.front().rows()); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Mat& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Mat& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Mat>& coeffs() const { return coeffs_; }

  Mat eval(cd z) const;

 private:
  std::vector<Mat> coeffs_;
};

// p(z,w) = sum p_ij z^i w^j, 0 <= i <= n, 0 <= j <= m.
class MatrixPolynomial2D {
 public:
  MatrixPolynomial2D() = default;
  MatrixPolynomial2D(int d, int n, int m);

  static MatrixPolynomial2D identity(int d);

  int dim() const { return d_; }
  int n() const { return n_; }
  int m() const { return m_; }

  const Mat& operator()(int i, int j) const { return c_[idx(i, j)]; }
  Mat& operator()(int i, int j) { return c_[idx(i, j)]; }

  Mat eval(cd z, cd w) const;
  // p(z, .) as a polynomial in w, and p(., w) as a polynomial in z.
  MatrixPolynomial in_w(cd z) const;
  MatrixPolynomial in_z(cd w) const;

  // Right-multiplies every coefficient by x.
  MatrixPolynomial2D times_right(const Mat& x) const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) +
           static_cast<std::size_t>(j);
  }
  int d_ = 0;
  int n_ = 0;
  int m_ = 0;
  std::vector<Mat> c_;
};

// Smallest modulus among the roots of det A(z). Infinity when det A is a
// nonzero constant. Throws DegenerateDeterminant when det A vanishes
// identically within tolerance.
double det_min_root_modulus(const MatrixPolynomial& a);

// All roots of det A(z) (same method as above).
std::vector<cd> det_roots(const MatrixPolynomial& a);

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace bidisk

#endif  // BIDISK_POLYNOMIAL_HPP
