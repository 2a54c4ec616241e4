#ifndef BIDISK_NEHARI_HPP
#define BIDISK_NEHARI_HPP

#include <map>
#include <vector>

#include "bidisk/types.hpp"

namespace bidisk {

// Given Gamma_0..Gamma_K (rows x cols each) and truncation N.
struct HankelData1D {
  int rows = 1;
  int cols = 1;
  std::vector<Mat> given;
  int N = 40;

  Mat gamma(int j) const;  // zero outside 0..K
  // H_{i,j} = Gamma_{i-j}, i = 0..N-1, j = -(N-1)..0 ascending
  Mat hankel_section() const;
};

struct NehariSolution1D {
  std::vector<Mat> D;  // D[k] = D_{-k}, k = 0..N-1, D_0 = I
  std::vector<Mat> B;  // B_0..B_{N-1}
  Mat delta0;
  std::vector<Mat> A;  // A_0..A_{N-1}, A_0 = I
  std::vector<Mat> C;  // C_{-(N-1)}..C_0 (second system, lower half)
  Mat alpha0;
  std::map<int, Mat> extension;   // Gamma_j, j = -J..K, first recursion
  std::map<int, Mat> extension2;  // same from the second recursion
  double disagreement = 0.0;      // max entry |ext - ext2| over j < 0
  double hankelNorm = 0.0;
  double ywResidual = 0.0;
};

// Throws NormAtLeastOne, IllConditioned.
NehariSolution1D solve_nehari_1d(const HankelData1D& h, int J);

// Runs at N and 2N; throws NoConvergence unless the extensions agree within 10 tol.
NehariSolution1D solve_nehari_1d_converged(const HankelData1D& h, int J, double tol);

// ||(Gamma_{i-j})_{i,j=0}^{size-1}||_2 with Gamma from the extension map (zero if absent)
double two_sided_toeplitz_norm(const std::map<int, Mat>& ext, int size);

// sup over gridN circle points of || sum_j Gamma_j z^j ||_2
double symbol_sup_norm_1d(const std::map<int, Mat>& ext, int gridN = 1024);

// gamma_{ij} (d x d) for i, j >= 0 up to K; truncations N (inner) and M (outer).
struct LittleHankelData {
  int d = 1;
  std::map<Index2, Mat> gamma;
  int N = 6;
  int M = 6;

  Mat at(int i, int j) const;  // zero if absent or any index negative
  int degree() const;          // largest first index present
};

struct Compressions {
  Mat phi, phi1, phi2;
  double recipeMismatch = 0.0;  // between the two compression recipes
};

Compressions build_compressions(const LittleHankelData& g);

// norm of the N x N section of the little Hankel operator
double little_hankel_norm(const LittleHankelData& g);

struct CommCheck {
  double residual = 0.0;
  bool pass = false;
};
CommCheck check_comm_2d(const Mat& phi, const Mat& phi1, const Mat& phi2, double tol);

struct Nehari2DReport {
  double commResidual = 0.0;
  double hankelNorm = 0.0;
  double zeroPatternD = 0.0;            // last-row zeros of D_j
  double zeroPatternA = 0.0;            // first-row zeros of A_j
  double hankelDeviation = 0.0;   // extended Gamma_j, j < 0
  double toeplitzDeviation = 0.0; // second-variable step
  double disagreement = 0.0;      // two recursions, first step
  double supNorm = 0.0;
  std::map<Index2, Mat> coeffs;   // |i|, |j| <= J
};

// Runs the full construction and reports every diagnostic without gating.
Nehari2DReport analyze_nehari_2d(const LittleHankelData& g, int J, int supGrid = 256);

// Gated version: throws CommViolation (residual > tol), StructureViolation
// (zero pattern or Hankel deviation > 100 tol), NormAtLeastOne (sup >= 1).
Nehari2DReport solve_nehari_2d(const LittleHankelData& g, int J, double tol, int supGrid = 256);

}  // namespace bidisk

#endif  // BIDISK_NEHARI_HPP
