#ifndef BIDISK_AR2D_HPP
#define BIDISK_AR2D_HPP

#include <map>
#include <optional>

#include "bidisk/covariance.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/polynomial.hpp"

namespace bidisk {

struct PhiMatrices {
  Mat phi;   // (c_{k-l}), k, l in {0..n-1} x {0..m-1}
  Mat phi1;  // l in {1..n} x {0..m-1}
  Mat phi2;  // l in {0..n-1} x {1..m}
};
PhiMatrices build_phi(const CorrelationGrid& grid);

struct FeasibilityReport {
  double commResidual = 0.0;
  Mat cornerMinusNM;
  double pdMinEig1 = 0.0;  // rectangle minus (n,m)
  double pdMinEig2 = 0.0;  // rectangle minus (0,0)
  bool pd1 = false;
  bool pd2 = false;
  bool feasible = false;
};

FeasibilityReport check_conditions(const CorrelationGrid& grid, double tolComm = 1e-8,
                                   double tolPD = 1e-10);

struct StabilityCertificate {
  double zSweep = kInf;
  double wSweep = kInf;
  double minModulus = kInf;
  int gridN = 0;
  double margin = 0.0;
  bool pass = false;
};

StabilityCertificate stability_check_2d(const MatrixPolynomial2D& p, int gridN = 512,
                                        double margin = 1e-6, Exec exec = Exec::Parallel);

struct DesignOptions {
  double tolComm = 1e-8;
  double tolPD = 1e-10;
  // c_{n,m}; when absent the completion with p_{n,m} = 0 is used
  std::optional<Mat> cornerNm;
  double structureTol = 1e-9;
  int gridN = 512;
  double margin = 1e-6;
};

struct Design {
  MatrixPolynomial2D p;
  MatrixPolynomial2D r;
  FeasibilityReport feasibility;
  Mat cornerNm;
  double structureLeft = 0.0;   // largest entry in the zero pattern of the P_j
  double structureRight = 0.0;  // same for the S_j
  StabilityCertificate stabilityP;
  StabilityCertificate stabilityR;
};

// Throws Infeasible, StructureViolation, Unstable, NotPD.
Design design_filters(const CorrelationGrid& grid, const DesignOptions& opt = {});

struct ExtendOptions {
  int fftN = 512;
  int gridN = 512;
  double margin = 1e-6;
  Exec exec = Exec::Parallel;
};

// Fourier coefficients of (p p^*)^-1 on rect. Throws Unstable if p fails the
// bidisk certificate.
std::map<Index2, Mat> extend_covariance_2d(const MatrixPolynomial2D& p, const IndexRect& rect,
                                           const ExtendOptions& opt = {});

// Band grid (and optionally its corners) generated from p.
CorrelationGrid grid_from_polynomial(const MatrixPolynomial2D& p, int n, int m,
                                     const ExtendOptions& opt = {}, bool withCorners = false);

// p p_00^-1
MatrixPolynomial2D normalize_by_p00(const MatrixPolynomial2D& p);

// max over gridN circle points of ||T_k(z) E_k(z) - I||_2, with the w-Fourier
// coefficients of (p p^*)^-1 taken from wN samples.
double inverse_formula_check(const MatrixPolynomial2D& p, const MatrixPolynomial2D& r, int k,
                             int gridN = 64, int wN = 256);

// Deviation of the left stable factor of E_{k+1} from the bordered form
// [[p_0, 0], [col(p_l), M_k]] built from the factor M_k of E_k.
double nested_factor_check(const MatrixPolynomial2D& p, const MatrixPolynomial2D& r, int k,
                           double tol = 1e-8);

}  // namespace bidisk

#endif  // BIDISK_AR2D_HPP
