#ifndef BIDISK_LINALG_HPP
#define BIDISK_LINALG_HPP

#include "bidisk/types.hpp"

namespace bidisk {

/// Largest singular value.
double spectral_norm(const Mat& a);

/// Hermitian positive definite square root via eigen-decomposition.
Mat hermitian_sqrt(const Mat& a);

/// Block lower-triangular factor L with S = L L^*, where every
/// blockSize x blockSize diagonal block of L is Hermitian positive definite.
/// blockSize == 1 is the ordinary Cholesky factor (positive real diagonal).
/// Throws NotPD when a Schur complement fails to be positive definite.
Mat block_cholesky(const Mat& s, int blockSize = 1);

/// Block upper-triangular counterpart: S = U U^* with HPD diagonal blocks.
Mat block_cholesky_upper(const Mat& s, int blockSize = 1);

/// Solves S X = B for Hermitian positive definite S by Cholesky.
Mat hpd_solve(const Mat& s, const Mat& b);

/// Relative Frobenius residual of Phi1 Phi^-1 Phi2^* against Phi2^* Phi^-1 Phi1.
/// The denominator is floored at 1e-12 ||Phi||_F so that two exactly-zero
/// products report 0.
double commutator_residual(const Mat& phi, const Mat& phi1, const Mat& phi2);

/// Exchange (reversal) permutation of size n.
Mat exchange(int n);

}  // namespace bidisk

#endif  // BIDISK_LINALG_HPP
