#include "bidisk/completion.hpp"

#include "bidisk/linalg.hpp"

namespace bidisk {

Mat Corner3x3::assemble(const Mat& x) const {
  const auto a = A.rows(), c = C.rows(), e = E.rows();
  Mat m(a + c + e, a + c + e);
  m << A, B, x, B.adjoint(), C, D, x.adjoint(), D.adjoint(), E;
  return m;
}

Mat complete_center(const Corner3x3& c, double tol) {
  Mat top(c.A.rows() + c.C.rows(), c.A.rows() + c.C.rows());
  top << c.A, c.B, c.B.adjoint(), c.C;
  Mat bottom(c.C.rows() + c.E.rows(), c.C.rows() + c.E.rows());
  bottom << c.C, c.D, c.D.adjoint(), c.E;
  if (!is_positive_definite(top, tol).positiveDefinite) {
    throw Error(ErrorKind::NotPD, "[[A,B],[B*,C]] is not positive definite");
  }
  if (!is_positive_definite(bottom, tol).positiveDefinite) {
    throw Error(ErrorKind::NotPD, "[[C,D],[D*,E]] is not positive definite");
  }
  if (c.C.size() == 0) return Mat::Zero(c.A.rows(), c.E.cols());
  return c.B * hpd_solve(c.C, c.D);
}

Mat corner_c_minus_nm(const CorrelationGrid& grid) {
  const int n = grid.n(), m = grid.m(), d = grid.dim();
  const IndexList r = IndexRect(0, n - 1, 0, m - 1);
  const Mat phi = build_doubly_toeplitz(grid, r, r).data();
  const Mat k = build_doubly_toeplitz(grid, IndexList({{0, m - 1}}), IndexRect(1, n, 0, m - 1)).data();
  Mat kt(static_cast<Eigen::Index>(r.size()) * d, d);
  for (std::size_t p = 0; p < r.size(); ++p) {
    kt.block(static_cast<Eigen::Index>(p) * d, 0, d, d) = grid.at(r[p] + Index2{0, 1} - Index2{n - 1, 0});
  }
  Eigen::LLT<Mat> llt(phi);
  if (llt.info() != Eigen::Success || !is_positive_definite(phi).positiveDefinite) {
    throw Error(ErrorKind::NotPD, "Phi is not positive definite");
  }
  return k * llt.solve(kt);
}

CorrelationGrid with_corners(const CorrelationGrid& grid, const Mat& cMinusNm, const Mat* cNm) {
  CorrelationGrid g = grid;
  const int n = grid.n(), m = grid.m();
  g.set_symmetric({-n, m}, cMinusNm);
  if (cNm != nullptr) g.set_symmetric({n, m}, *cNm);
  return g;
}

Corner3x3 corner_partition(const CorrelationGrid& grid, const Mat& cMinusNm) {
  const int n = grid.n(), m = grid.m();
  const CorrelationGrid g = with_corners(grid, cMinusNm);
  const IndexList first({{0, 0}});
  const IndexList last({{n, m}});
  const IndexList mid = IndexRect(0, n, 0, m).list().without({{0, 0}, {n, m}});
  Corner3x3 c;
  c.A = g.at({0, 0});
  c.B = build_doubly_toeplitz(g, first, mid).data();
  c.C = build_doubly_toeplitz(g, mid, mid).data();
  c.D = build_doubly_toeplitz(g, mid, last).data();
  c.E = g.at({0, 0});
  return c;
}

Mat corner_c_nm(const CorrelationGrid& grid, const Mat& cMinusNm) {
  const int n = grid.n(), m = grid.m();
  const CorrelationGrid g = with_corners(grid, cMinusNm);
  const IndexList mid = IndexRect(0, n, 0, m).list().without({{0, 0}, {n, m}});
  const Mat row = build_doubly_toeplitz(g, IndexList({{n, m}}), mid).data();
  const Mat phiS = build_doubly_toeplitz(g, mid, mid).data();
  const Mat col = build_doubly_toeplitz(g, mid, IndexList({{0, 0}})).data();
  if (!is_positive_definite(phiS).positiveDefinite) {
    throw Error(ErrorKind::NotPD, "punctured rectangle matrix is not positive definite");
  }
  return row * hpd_solve(phiS, col);
}

}  // namespace bidisk
