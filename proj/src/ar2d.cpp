#include "bidisk/ar2d.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "bidisk/completion.hpp"
#include "bidisk/linalg.hpp"
#include "bidisk/spectral_factor.hpp"

namespace bidisk {

PhiMatrices build_phi(const CorrelationGrid& grid) {
  const int n = grid.n(), m = grid.m();
  const IndexList r = IndexRect(0, n - 1, 0, m - 1);
  PhiMatrices out;
  out.phi = build_doubly_toeplitz(grid, r, r).data();
  out.phi1 = build_doubly_toeplitz(grid, r, IndexRect(1, n, 0, m - 1)).data();
  out.phi2 = build_doubly_toeplitz(grid, r, IndexRect(0, n - 1, 1, m)).data();
  return out;
}

FeasibilityReport check_conditions(const CorrelationGrid& grid, double tolComm, double tolPD) {
  const int n = grid.n(), m = grid.m();
  const PhiMatrices ph = build_phi(grid);
  if (!is_positive_definite(ph.phi, tolPD).positiveDefinite) {
    throw Error(ErrorKind::NotPD, "Phi is not positive definite");
  }
  FeasibilityReport rep;
  rep.commResidual = commutator_residual(ph.phi, ph.phi1, ph.phi2);
  rep.cornerMinusNM = corner_c_minus_nm(grid);
  const CorrelationGrid g = with_corners(grid, rep.cornerMinusNM);
  const IndexList full = IndexRect(0, n, 0, m);
  const IndexList s1 = full.without({{n, m}});
  const IndexList s2 = full.without({{0, 0}});
  const auto pd1 = is_positive_definite(build_doubly_toeplitz(g, s1, s1), tolPD);
  const auto pd2 = is_positive_definite(build_doubly_toeplitz(g, s2, s2), tolPD);
  rep.pdMinEig1 = pd1.minEig;
  rep.pdMinEig2 = pd2.minEig;
  rep.pd1 = pd1.positiveDefinite;
  rep.pd2 = pd2.positiveDefinite;
  rep.feasible = rep.commResidual <= tolComm && rep.pd1 && rep.pd2;
  return rep;
}

StabilityCertificate stability_check_2d(const MatrixPolynomial2D& p, int gridN, double margin,
                                        Exec exec) {
  const RootSweep sw = stability_sweeps(p, gridN, exec);
  StabilityCertificate c;
  c.zSweep = sw.zSweep;
  c.wSweep = sw.wSweep;
  c.minModulus = std::min(sw.zSweep, sw.wSweep);
  c.gridN = gridN;
  c.margin = margin;
  c.pass = c.minModulus > 1.0 + margin;
  return c;
}

Design design_filters(const CorrelationGrid& grid, const DesignOptions& opt) {
  const int n = grid.n(), m = grid.m(), d = grid.dim();
  Design out;
  out.feasibility = check_conditions(grid, opt.tolComm, opt.tolPD);
  if (!out.feasibility.feasible) {
    throw Error(ErrorKind::Infeasible,
                "conditions fail: comm residual " + std::to_string(out.feasibility.commResidual) +
                    ", pd " + std::to_string(out.feasibility.pd1) + "/" +
                    std::to_string(out.feasibility.pd2));
  }
  const Mat& cmn = out.feasibility.cornerMinusNM;
  out.cornerNm = opt.cornerNm ? *opt.cornerNm : corner_c_nm(grid, cmn);
  const CorrelationGrid g = with_corners(grid, cmn, &out.cornerNm);

  const IndexList full = IndexRect(0, n, 0, m);
  const Mat gamma = build_doubly_toeplitz(g, full, full).data();
  Eigen::LLT<Mat> llt(gamma);
  if (llt.info() != Eigen::Success || !is_positive_definite(gamma, opt.tolPD).positiveDefinite) {
    throw Error(ErrorKind::NotPD, "doubly Toeplitz matrix over the full rectangle is not PD");
  }
  const Eigen::Index B = static_cast<Eigen::Index>(m + 1) * d;
  const Eigen::Index total = gamma.rows();

  // left system
  Mat e = Mat::Zero(total, B);
  e.topRows(B).setIdentity();
  const Mat q = llt.solve(e);
  const Mat q0 = q.topRows(B);
  const Mat l = block_cholesky(0.5 * (q0 + q0.adjoint()), d);
  const Mat lInvAdj = l.inverse().adjoint();
  out.p = MatrixPolynomial2D(d, n, m);
  double scaleP = 0.0;
  for (int i = 0; i <= n; ++i) {
    const Mat pi = q.middleRows(i * B, B) * lInvAdj;
    scaleP = std::max(scaleP, pi.cwiseAbs().maxCoeff());
    if (m > 0) out.structureLeft = std::max(out.structureLeft, pi.block(0, d, d, B - d).cwiseAbs().maxCoeff());
    for (int j = 0; j <= m; ++j) out.p(i, j) = pi.block(j * d, 0, d, d);
  }

  // right system: blocks R_{-n}..R_0
  e.setZero();
  e.bottomRows(B).setIdentity();
  const Mat rr = llt.solve(e);
  const Mat r0 = rr.bottomRows(B);
  const Mat u = block_cholesky_upper(0.5 * (r0 + r0.adjoint()), d);
  const Mat uInvAdj = u.inverse().adjoint();
  std::vector<Mat> s(static_cast<std::size_t>(n + 1));  // s[i] = S_{-i}
  double scaleR = 0.0;
  for (int t = 0; t <= n; ++t) {
    const Mat sj = rr.middleRows(t * B, B) * uInvAdj;
    scaleR = std::max(scaleR, sj.cwiseAbs().maxCoeff());
    if (m > 0) out.structureRight = std::max(out.structureRight, sj.block(B - d, 0, d, B - d).cwiseAbs().maxCoeff());
    s[static_cast<std::size_t>(n - t)] = sj;
  }
  out.r = MatrixPolynomial2D(d, n, m);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= m; ++j) {
      out.r(i, j) = s[static_cast<std::size_t>(i)].block((m - j) * d, B - d, d, d).adjoint();
    }
  }
  out.structureLeft /= std::max(1.0, scaleP);
  out.structureRight /= std::max(1.0, scaleR);
  if (out.structureLeft > opt.structureTol || out.structureRight > opt.structureTol) {
    throw Error(ErrorKind::StructureViolation,
                "Cholesky zero pattern off by " + std::to_string(out.structureLeft) + " (left), " +
                    std::to_string(out.structureRight) + " (right)");
  }

  out.stabilityP = stability_check_2d(out.p, opt.gridN, opt.margin);
  out.stabilityR = stability_check_2d(out.r, opt.gridN, opt.margin);
  if (!out.stabilityP.pass || !out.stabilityR.pass) {
    throw Error(ErrorKind::Unstable, "designed filter fails the bidisk certificate: min root modulus " +
                                         std::to_string(std::min(out.stabilityP.minModulus,
                                                                 out.stabilityR.minModulus)));
  }
  return out;
}

namespace {

std::mutex fftwPlanMutex;

// In-place forward 2D DFT scaled by 1/N^2 on every plane.
void forward_dft_2d(TorusPlanes& planes, int N) {
  if (planes.empty()) return;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftwPlanMutex);
    auto* buf = reinterpret_cast<fftw_complex*>(planes.front().data());
    plan = fftw_plan_dft_2d(N, N, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  const double scale = 1.0 / (static_cast<double>(N) * N);
  for (auto& pl : planes) {
    auto* buf = reinterpret_cast<fftw_complex*>(pl.data());
    fftw_execute_dft(plan, buf, buf);
    for (auto& v : pl) v *= scale;
  }
  std::lock_guard<std::mutex> lock(fftwPlanMutex);
  fftw_destroy_plan(plan);
}

}  // namespace

std::map<Index2, Mat> extend_covariance_2d(const MatrixPolynomial2D& p, const IndexRect& rect,
                                           const ExtendOptions& opt) {
  const auto cert = stability_check_2d(p, opt.gridN, opt.margin, opt.exec);
  if (!cert.pass) {
    throw Error(ErrorKind::Unstable,
                "refusing to extend: min root modulus " + std::to_string(cert.minModulus));
  }
  const int N = opt.fftN, d = p.dim();
  if (std::max({std::abs(rect.a), std::abs(rect.b), std::abs(rect.c), std::abs(rect.e)}) * 2 >= N) {
    throw Error(ErrorKind::InvalidArgument, "rectangle too large for the FFT grid");
  }
  TorusPlanes planes = torus_inverse_spectrum(p, N, opt.exec);
  forward_dft_2d(planes, N);
  auto coeff = [&](Index2 k) {
    const auto a = static_cast<std::size_t>(((k.i % N) + N) % N);
    const auto b = static_cast<std::size_t>(((k.j % N) + N) % N);
    Mat c(d, d);
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) c(r, s) = planes[static_cast<std::size_t>(r * d + s)][a * static_cast<std::size_t>(N) + b];
    return c;
  };
  std::map<Index2, Mat> out;
  for (int i = rect.a; i <= rect.b; ++i) {
    for (int j = rect.c; j <= rect.e; ++j) {
      const Index2 k{i, j};
      out[k] = 0.5 * (coeff(k) + coeff(-k).adjoint());
    }
  }
  return out;
}

CorrelationGrid grid_from_polynomial(const MatrixPolynomial2D& p, int n, int m,
                                     const ExtendOptions& opt, bool withCorners) {
  const auto c = extend_covariance_2d(p, IndexRect(-n, n, -m, m), opt);
  return CorrelationGrid::from_function(
      p.dim(), n, m, [&](Index2 k) { return c.at(k); }, withCorners);
}

MatrixPolynomial2D normalize_by_p00(const MatrixPolynomial2D& p) {
  return p.times_right(p(0, 0).inverse());
}

namespace {

// p_i(z) = sum_l p_{l,i} z^l, zero outside 0..m
Mat w_coeff(const MatrixPolynomial2D& p, int i, cd z) {
  if (i < 0 || i > p.m()) return Mat::Zero(p.dim(), p.dim());
  Mat acc = p(p.n(), i);
  for (int l = p.n() - 1; l >= 0; --l) acc = acc * z + p(l, i);
  return acc;
}

}  // namespace

double inverse_formula_check(const MatrixPolynomial2D& p, const MatrixPolynomial2D& r, int k,
                             int gridN, int wN) {
  const int d = p.dim(), m = p.m();
  if (k < m - 1 || k < 0) throw Error(ErrorKind::InvalidArgument, "inverse formula needs k >= m-1");
  const Eigen::Index sz = static_cast<Eigen::Index>(k + 1) * d;
  double worst = 0.0;
  for (int t = 0; t < gridN; ++t) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * (t + 0.5) / gridN);
    const MatrixPolynomial pw = p.in_w(z);
    // f_i(z) for |i| <= k
    std::vector<Mat> f(static_cast<std::size_t>(2 * k + 1), Mat::Zero(d, d));
    for (int b = 0; b < wN; ++b) {
      const double th = 2.0 * std::numbers::pi * b / wN;
      const Mat v = pw.eval(std::polar(1.0, th));
      const Mat inv = (v * v.adjoint()).inverse();
      for (int i = -k; i <= k; ++i) f[static_cast<std::size_t>(i + k)] += inv * std::polar(1.0, -i * th);
    }
    Mat tk(sz, sz), a1 = Mat::Zero(sz, sz), b2 = Mat::Zero(sz, sz);
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        tk.block(i * d, j * d, d, d) = f[static_cast<std::size_t>(i - j + k)] / static_cast<double>(wN);
        if (i >= j) a1.block(i * d, j * d, d, d) = w_coeff(p, i - j, z);
        if (j >= i) b2.block(i * d, j * d, d, d) = w_coeff(r, k + 1 - (j - i), z);
      }
    }
    Eigen::LLT<Mat> llt(0.5 * (tk + tk.adjoint()));
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorKind::SingularTk, "T_k is singular at grid point " + std::to_string(t));
    }
    const Mat ek = a1 * a1.adjoint() - b2.adjoint() * b2;
    worst = std::max(worst, spectral_norm(tk * ek - Mat::Identity(sz, sz)));
  }
  return worst;
}

namespace {

// Trigonometric coefficients E_{k,t}, t = 0..n, of E_k(z) = A1 A1^* - B2^* B2.
TrigMatrixPolynomial e_k_trig(const MatrixPolynomial2D& p, const MatrixPolynomial2D& r, int k) {
  const int d = p.dim(), n = p.n();
  const Eigen::Index sz = static_cast<Eigen::Index>(k + 1) * d;
  auto pc = [&](const MatrixPolynomial2D& q, int l, int i) -> Mat {
    if (l < 0 || l > q.n() || i < 0 || i > q.m()) return Mat::Zero(d, d);
    return q(l, i);
  };
  std::vector<Mat> a1(static_cast<std::size_t>(n + 1), Mat::Zero(sz, sz));
  std::vector<Mat> b2(static_cast<std::size_t>(n + 1), Mat::Zero(sz, sz));
  for (int l = 0; l <= n; ++l) {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (i >= j) a1[static_cast<std::size_t>(l)].block(i * d, j * d, d, d) = pc(p, l, i - j);
        if (j >= i) b2[static_cast<std::size_t>(l)].block(i * d, j * d, d, d) = pc(r, l, k + 1 - (j - i));
      }
    }
  }
  std::vector<Mat> e(static_cast<std::size_t>(n + 1), Mat::Zero(sz, sz));
  for (int t = 0; t <= n; ++t) {
    for (int l = t; l <= n; ++l) {
      e[static_cast<std::size_t>(t)] += a1[static_cast<std::size_t>(l)] * a1[static_cast<std::size_t>(l - t)].adjoint();
      e[static_cast<std::size_t>(t)] -= b2[static_cast<std::size_t>(l - t)].adjoint() * b2[static_cast<std::size_t>(l)];
    }
  }
  e[0] = 0.5 * (e[0] + e[0].adjoint()).eval();
  return TrigMatrixPolynomial(static_cast<int>(sz), std::move(e));
}

}  // namespace

double nested_factor_check(const MatrixPolynomial2D& p, const MatrixPolynomial2D& r, int k,
                           double tol) {
  const int d = p.dim(), n = p.n();
  if (k < p.m() - 1 || k < 0) throw Error(ErrorKind::InvalidArgument, "nesting needs k >= m-1");
  SpectralOptions opt;
  opt.tol = tol;
  opt.normBlock = d;
  const SpectralFactor mk = left_stable_factor(e_k_trig(p, r, k), opt);
  const SpectralFactor mk1 = left_stable_factor(e_k_trig(p, r, k + 1), opt);
  const Eigen::Index sz = static_cast<Eigen::Index>(k + 2) * d;
  double worst = 0.0;
  for (int t = 0; t <= n; ++t) {
    Mat bordered = Mat::Zero(sz, sz);
    for (int l = 0; l <= k + 1; ++l) {
      if (l <= p.m()) bordered.block(l * d, 0, d, d) = p(t, l);
    }
    bordered.bottomRightCorner(sz - d, sz - d) = mk.poly[t];
    worst = std::max(worst, (mk1.poly[t] - bordered).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace bidisk
