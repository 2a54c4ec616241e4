#include "bidisk/nehari.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bidisk/kernels.hpp"
#include "bidisk/linalg.hpp"

namespace bidisk {

Mat HankelData1D::gamma(int j) const {
  if (j < 0 || j >= static_cast<int>(given.size())) return Mat::Zero(rows, cols);
  return given[static_cast<std::size_t>(j)];
}

Mat HankelData1D::hankel_section() const {
  Mat h(static_cast<Eigen::Index>(N) * rows, static_cast<Eigen::Index>(N) * cols);
  for (int i = 0; i < N; ++i) {
    for (int jj = 0; jj < N; ++jj) {
      const int j = -(N - 1) + jj;
      h.block(i * rows, jj * cols, rows, cols) = gamma(i - j);
    }
  }
  return h;
}

NehariSolution1D solve_nehari_1d(const HankelData1D& h, int J) {
  if (h.N < 1 || J < 1) throw Error(ErrorKind::InvalidArgument, "Nehari needs N >= 1 and J >= 1");
  for (const auto& g : h.given) {
    if (g.rows() != h.rows || g.cols() != h.cols) {
      throw Error(ErrorKind::InvalidArgument, "Hankel coefficient has the wrong shape");
    }
  }
  const int N = h.N, dr = h.rows, dc = h.cols;
  const Mat H = h.hankel_section();
  NehariSolution1D s;
  s.hankelNorm = spectral_norm(H);
  if (s.hankelNorm >= 1.0) {
    throw Error(ErrorKind::NormAtLeastOne, "Hankel section norm " + std::to_string(s.hankelNorm));
  }
  if (1.0 - s.hankelNorm < 1e-6) {
    throw Error(ErrorKind::IllConditioned, "Hankel section norm " + std::to_string(s.hankelNorm));
  }
  const Eigen::Index top = H.rows(), bot = H.cols();
  Mat M(top + bot, top + bot);
  M << Mat::Identity(top, top), H, H.adjoint(), Mat::Identity(bot, bot);

  const Eigen::Index tot = top + bot;
  // [[I,H],[H*,I]] [B; D] = [0; Delta] with the last block of D pinned to I:
  // the leading part solves M11 x = -m12 and Delta_0 is the last pivot.
  {
    Eigen::LLT<Mat> llt(M.topLeftCorner(tot - dc, tot - dc));
    if (llt.info() != Eigen::Success) throw Error(ErrorKind::NotPD, "[[I,H],[H*,I]] is not PD");
    const Mat m12 = M.topRightCorner(tot - dc, dc);
    const Mat x = -llt.solve(m12);
    s.delta0 = M.bottomRightCorner(dc, dc) + M.bottomLeftCorner(dc, tot - dc) * x;
    Mat full(tot, dc);
    full << x, Mat::Identity(dc, dc);
    Mat rhs = Mat::Zero(tot, dc);
    rhs.bottomRows(dc) = s.delta0;
    s.ywResidual = (M * full - rhs).norm();
    for (int k = 0; k < N; ++k) {
      s.B.push_back(full.middleRows(k * dr, dr));
      s.D.push_back(full.middleRows(top + (N - 1 - k) * dc, dc));
    }
  }
  // [[I,H],[H*,I]] [A; C] = [alpha; 0] with the first block of A pinned to I
  {
    Eigen::LLT<Mat> llt(M.bottomRightCorner(tot - dr, tot - dr));
    if (llt.info() != Eigen::Success) throw Error(ErrorKind::NotPD, "[[I,H],[H*,I]] is not PD");
    const Mat m21 = M.bottomLeftCorner(tot - dr, dr);
    const Mat y = -llt.solve(m21);
    s.alpha0 = M.topLeftCorner(dr, dr) + M.topRightCorner(dr, tot - dr) * y;
    Mat full(tot, dr);
    full << Mat::Identity(dr, dr), y;
    Mat rhs = Mat::Zero(tot, dr);
    rhs.topRows(dr) = s.alpha0;
    s.ywResidual = std::max(s.ywResidual, (M * full - rhs).norm());
    for (int k = 0; k < N; ++k) {
      s.A.push_back(full.middleRows(k * dr, dr));
      s.C.push_back(full.middleRows(top + k * dc, dc));
    }
  }

  const int K = static_cast<int>(h.given.size()) - 1;
  for (int j = 0; j <= K; ++j) {
    s.extension[j] = h.gamma(j);
    s.extension2[j] = h.gamma(j);
  }
  auto get = [&](const std::map<int, Mat>& ext, int j) -> Mat {
    const auto it = ext.find(j);
    return it == ext.end() ? Mat::Zero(dr, dc) : it->second;
  };
  for (int j = -1; j >= -J; --j) {
    Mat acc = Mat::Zero(dr, dc);
    Mat acc2 = Mat::Zero(dc, dr);
    for (int k = 1; k < N; ++k) {
      acc -= get(s.extension, j + k) * s.D[static_cast<std::size_t>(k)];
      acc2 -= get(s.extension2, j + k).adjoint() * s.A[static_cast<std::size_t>(k)];
    }
    s.extension[j] = acc;
    s.extension2[j] = acc2.adjoint();
    s.disagreement = std::max(s.disagreement, (acc - acc2.adjoint()).cwiseAbs().maxCoeff());
  }
  return s;
}

NehariSolution1D solve_nehari_1d_converged(const HankelData1D& h, int J, double tol) {
  NehariSolution1D base = solve_nehari_1d(h, J);
  HankelData1D wide = h;
  wide.N = 2 * h.N;
  const NehariSolution1D fine = solve_nehari_1d(wide, J);
  double diff = 0.0;
  for (int j = -J; j < 0; ++j) {
    diff = std::max(diff, (base.extension.at(j) - fine.extension.at(j)).cwiseAbs().maxCoeff());
  }
  if (diff > 10.0 * tol) {
    throw Error(ErrorKind::NoConvergence,
                "extensions at N and 2N differ by " + std::to_string(diff));
  }
  return base;
}

double two_sided_toeplitz_norm(const std::map<int, Mat>& ext, int size) {
  if (ext.empty() || size <= 0) return 0.0;
  const auto r = ext.begin()->second.rows(), c = ext.begin()->second.cols();
  Mat t(size * r, size * c);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const auto it = ext.find(i - j);
      t.block(i * r, j * c, r, c) = it == ext.end() ? Mat::Zero(r, c) : it->second;
    }
  }
  return spectral_norm(t);
}

double symbol_sup_norm_1d(const std::map<int, Mat>& ext, int gridN) {
  double best = 0.0;
  for (int t = 0; t < gridN; ++t) {
    const double th = 2.0 * std::numbers::pi * t / gridN;
    Mat acc = Mat::Zero(ext.begin()->second.rows(), ext.begin()->second.cols());
    for (const auto& [j, g] : ext) acc += g * std::polar(1.0, j * th);
    best = std::max(best, spectral_norm(acc));
  }
  return best;
}

Mat LittleHankelData::at(int i, int j) const {
  if (i < 0 || j < 0) return Mat::Zero(d, d);
  const auto it = gamma.find({i, j});
  return it == gamma.end() ? Mat::Zero(d, d) : it->second;
}

int LittleHankelData::degree() const {
  int k = 0;
  for (const auto& [idx, g] : gamma) k = std::max(k, idx.i);
  return k;
}

namespace {

// Integer ranges standing in for N0, N, -N0, -N at truncation N.
struct Range {
  int lo, hi;
};
Range N0(int n) { return {0, n - 1}; }
Range Nat(int n) { return {1, n}; }
Range MinusN0(int n) { return {-(n - 1), 0}; }
Range MinusNat(int n) { return {-n, -1}; }

struct Summand {
  Range a, b;
};

std::vector<Index2> pairs(const Summand& s) {
  std::vector<Index2> v;
  for (int i = s.a.lo; i <= s.a.hi; ++i)
    for (int j = s.b.lo; j <= s.b.hi; ++j) v.push_back({i, j});
  return v;
}

// Compression of [[I, h], [h^*, I]] to (rows1 + rows2) x (cols1 + cols2),
// with h_{(i,p),(j,q)} = gamma_{i-j, p-q}.
Mat compress(const LittleHankelData& g, const Summand& r1, const Summand& r2, const Summand& c1,
             const Summand& c2) {
  const int d = g.d;
  const auto R1 = pairs(r1), R2 = pairs(r2), C1 = pairs(c1), C2 = pairs(c2);
  const auto nr = static_cast<Eigen::Index>(R1.size() + R2.size());
  const auto nc = static_cast<Eigen::Index>(C1.size() + C2.size());
  Mat out = Mat::Zero(nr * d, nc * d);
  auto put = [&](std::size_t row, std::size_t col, const Mat& blk) {
    out.block(static_cast<Eigen::Index>(row) * d, static_cast<Eigen::Index>(col) * d, d, d) = blk;
  };
  for (std::size_t x = 0; x < R1.size(); ++x) {
    for (std::size_t y = 0; y < C1.size(); ++y)
      if (R1[x] == C1[y]) put(x, y, Mat::Identity(d, d));
    for (std::size_t y = 0; y < C2.size(); ++y) {
      const Index2 k = R1[x] - C2[y];
      put(x, C1.size() + y, g.at(k.i, k.j));
    }
  }
  for (std::size_t x = 0; x < R2.size(); ++x) {
    for (std::size_t y = 0; y < C1.size(); ++y) {
      const Index2 k = C1[y] - R2[x];
      put(R1.size() + x, y, g.at(k.i, k.j).adjoint());
    }
    for (std::size_t y = 0; y < C2.size(); ++y)
      if (R2[x] == C2[y]) put(R1.size() + x, C1.size() + y, Mat::Identity(d, d));
  }
  return out;
}

}  // namespace

Compressions build_compressions(const LittleHankelData& g) {
  const int n = g.N;
  const Summand n0n{N0(n), Nat(n)}, mnmn0{MinusNat(n), MinusN0(n)};
  const Summand nn0{Nat(n), N0(n)}, mn0mn{MinusN0(n), MinusNat(n)};
  const Summand n0n0{N0(n), N0(n)}, mnmn{MinusNat(n), MinusNat(n)};
  const Summand nn{Nat(n), Nat(n)}, mn0mn0{MinusN0(n), MinusN0(n)};

  Compressions c;
  c.phi = compress(g, n0n, mnmn0, n0n, mnmn0);
  c.phi1 = compress(g, n0n0, mnmn, nn0, mn0mn);
  c.phi2 = compress(g, n0n0, mnmn, n0n, mnmn0);
  const Mat phiB = compress(g, nn0, mn0mn, nn0, mn0mn);
  const Mat phi1B = compress(g, n0n, mnmn0, nn, mn0mn0);
  const Mat phi2B = compress(g, nn0, mn0mn, nn, mn0mn0);
  c.recipeMismatch = std::max({(c.phi - phiB).cwiseAbs().maxCoeff(),
                               (c.phi1 - phi1B).cwiseAbs().maxCoeff(),
                               (c.phi2 - phi2B).cwiseAbs().maxCoeff()});
  return c;
}

double little_hankel_norm(const LittleHankelData& g) {
  const int n = g.N, d = g.d;
  Mat h(static_cast<Eigen::Index>(n) * n * d, static_cast<Eigen::Index>(n) * n * d);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < n; ++j)
        for (int q = 0; q < n; ++q)
          h.block((i * n + p) * d, (j * n + q) * d, d, d) = g.at(i + j, p + q);
  return spectral_norm(h);
}

CommCheck check_comm_2d(const Mat& phi, const Mat& phi1, const Mat& phi2, double tol) {
  CommCheck c;
  c.residual = commutator_residual(phi, phi1, phi2);
  c.pass = c.residual <= tol;
  return c;
}

Nehari2DReport analyze_nehari_2d(const LittleHankelData& g, int J, int supGrid) {
  const int N = g.N, d = g.d;
  if (J < 1 || N <= J) throw Error(ErrorKind::InvalidArgument, "need 1 <= J < N");
  Nehari2DReport rep;
  const Compressions cmp = build_compressions(g);
  rep.commResidual = check_comm_2d(cmp.phi, cmp.phi1, cmp.phi2, 0.0).residual;
  rep.hankelNorm = little_hankel_norm(g);

  // first variable: operator Hankel data, Gamma_j[p][q] = gamma_{j, p-q}, q = -(N-1)..0
  HankelData1D outer;
  outer.rows = outer.cols = N * d;
  outer.N = g.M;
  for (int j = 0; j <= g.degree(); ++j) {
    Mat gj(N * d, N * d);
    for (int p = 0; p < N; ++p)
      for (int qq = 0; qq < N; ++qq) gj.block(p * d, qq * d, d, d) = g.at(j, p + (N - 1) - qq);
    outer.given.push_back(gj);
  }
  const NehariSolution1D s1 = solve_nehari_1d(outer, 2 * J);
  rep.disagreement = s1.disagreement;
  for (std::size_t k = 1; k < s1.D.size(); ++k) {
    const Mat& dk = s1.D[k];
    const Mat& ak = s1.A[k];
    rep.zeroPatternD = std::max(rep.zeroPatternD, dk.block((N - 1) * d, 0, d, (N - 1) * d).cwiseAbs().maxCoeff());
    rep.zeroPatternA = std::max(rep.zeroPatternA, ak.block(0, d, d, (N - 1) * d).cwiseAbs().maxCoeff());
  }
  std::map<Index2, Mat> first;  // gamma_{j,s}, j < 0, s >= 0
  for (int j = -2 * J; j < 0; ++j) {
    const Mat& gj = s1.extension.at(j);
    for (int s = 0; s <= 2 * N - 2; ++s) {
      Mat mean = Mat::Zero(d, d);
      int count = 0;
      for (int p = 0; p < N; ++p) {
        const int qq = p + (N - 1) - s;
        if (qq < 0 || qq >= N) continue;
        mean += gj.block(p * d, qq * d, d, d);
        ++count;
      }
      mean /= static_cast<double>(count);
      for (int p = 0; p < N; ++p) {
        const int qq = p + (N - 1) - s;
        if (qq < 0 || qq >= N) continue;
        rep.hankelDeviation =
            std::max(rep.hankelDeviation, (gj.block(p * d, qq * d, d, d) - mean).cwiseAbs().maxCoeff());
      }
      first[{j, s}] = mean;
    }
  }
  auto known = [&](int s, int i) -> Mat {
    if (s >= 0) return g.at(s, i);
    const auto it = first.find({s, i});
    return it == first.end() ? Mat::Zero(d, d) : it->second;
  };

  // second variable: H_i[a][b] = gamma_{a-b, i}, a, b in -J..J
  const int L = 2 * J + 1;
  HankelData1D inner;
  inner.rows = inner.cols = L * d;
  inner.N = L;
  for (int i = 0; i <= 2 * J; ++i) {
    Mat hi(L * d, L * d);
    for (int a = 0; a < L; ++a)
      for (int b = 0; b < L; ++b) hi.block(a * d, b * d, d, d) = known(a - b, i);
    inner.given.push_back(hi);
  }
  const NehariSolution1D s2 = solve_nehari_1d(inner, J);
  std::map<Index2, Mat> second;  // gamma_{s,i}, i < 0
  for (int i = -J; i < 0; ++i) {
    const Mat& hi = s2.extension.at(i);
    for (int s = -J; s <= J; ++s) {
      Mat mean = Mat::Zero(d, d);
      int count = 0;
      for (int a = 0; a < L; ++a) {
        const int b = a - s;
        if (b < 0 || b >= L) continue;
        mean += hi.block(a * d, b * d, d, d);
        ++count;
      }
      mean /= static_cast<double>(count);
      for (int a = 0; a < L; ++a) {
        const int b = a - s;
        if (b < 0 || b >= L) continue;
        rep.toeplitzDeviation =
            std::max(rep.toeplitzDeviation, (hi.block(a * d, b * d, d, d) - mean).cwiseAbs().maxCoeff());
      }
      second[{s, i}] = mean;
    }
  }

  for (int i = -J; i <= J; ++i) {
    for (int j = -J; j <= J; ++j) {
      if (j < 0) rep.coeffs[{i, j}] = second.at({i, j});
      else rep.coeffs[{i, j}] = known(i, j);
    }
  }
  rep.supNorm = symbol_sup_norm(rep.coeffs, supGrid);
  return rep;
}

Nehari2DReport solve_nehari_2d(const LittleHankelData& g, int J, double tol, int supGrid) {
  if (little_hankel_norm(g) >= 1.0) {
    throw Error(ErrorKind::NormAtLeastOne, "little Hankel section is not a strict contraction");
  }
  Nehari2DReport rep = analyze_nehari_2d(g, J, supGrid);
  if (rep.commResidual > tol) {
    throw Error(ErrorKind::CommViolation, "commutation residual " + std::to_string(rep.commResidual));
  }
  const double structTol = 100.0 * tol;
  if (rep.zeroPatternD > structTol || rep.zeroPatternA > structTol || rep.hankelDeviation > structTol) {
    throw Error(ErrorKind::StructureViolation,
                "zero pattern " + std::to_string(std::max(rep.zeroPatternD, rep.zeroPatternA)) +
                    ", Hankel deviation " + std::to_string(rep.hankelDeviation));
  }
  if (rep.supNorm >= 1.0) {
    throw Error(ErrorKind::NormAtLeastOne, "extended symbol sup norm " + std::to_string(rep.supNorm));
  }
  return rep;
}

}  // namespace bidisk
