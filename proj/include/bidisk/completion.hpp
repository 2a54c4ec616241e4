#ifndef BIDISK_COMPLETION_HPP
#define BIDISK_COMPLETION_HPP

#include "bidisk/covariance.hpp"

namespace bidisk {

// M(X) = [[A, B, X], [B^*, C, D], [X^*, D^*, E]]
struct Corner3x3 {
  Mat A, B, C, D, E;

  Mat assemble(const Mat& x) const;
};

// X0 = B C^-1 D, the completion with [M(X0)^-1]_13 = 0.
// Throws NotPD if either of [[A,B],[B^*,C]] or [[C,D],[D^*,E]] is not PD.
Mat complete_center(const Corner3x3& c, double tol = 1e-10);

// c_{-n,m} forced by the band data: K Phi^-1 Kt, with
//   K  = row(c_{(0,m-1)-l}), l in {1..n} x {0..m-1}
//   Kt = col(c_{u+(0,1)-(n-1,0)}), u in {0..n-1} x {0..m-1}
// which is the ((0,m-1),(n-1,0)) block of Phi1 Phi^-1 Phi2^*.
Mat corner_c_minus_nm(const CorrelationGrid& grid);

// The c_{n,m} giving p_{n,m} = 0 once c_{-n,m} is known:
// row(c_{(n,m)-l}) Phi_S^-1 col(c_k), k, l in S = {0..n}x{0..m} minus (0,0), (n,m).
Mat corner_c_nm(const CorrelationGrid& grid, const Mat& cMinusNm);

// Corner3x3 for the partition {(0,0)} | S | {(n,m)} of the full rectangle,
// with c_{-n,m}, c_{n,-m} installed from cMinusNm.
Corner3x3 corner_partition(const CorrelationGrid& grid, const Mat& cMinusNm);

// Copy of grid with c_{-n,m}, c_{n,-m} and (if given) c_{n,m}, c_{-n,-m} installed.
CorrelationGrid with_corners(const CorrelationGrid& grid, const Mat& cMinusNm,
                             const Mat* cNm = nullptr);

}  // namespace bidisk

#endif  // BIDISK_COMPLETION_HPP
