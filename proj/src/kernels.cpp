#include "bidisk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bidisk/linalg.hpp"

namespace bidisk {

namespace {

std::vector<cd> unit_roots(int N) {
  std::vector<cd> z(static_cast<std::size_t>(N));
  for (int a = 0; a < N; ++a) z[static_cast<std::size_t>(a)] = std::polar(1.0, 2.0 * std::numbers::pi * a / N);
  return z;
}

void inverse_spectrum_row(const MatrixPolynomial2D& p, const std::vector<cd>& roots, int a,
                          TorusPlanes& out) {
  const int d = p.dim();
  const int N = static_cast<int>(roots.size());
  const MatrixPolynomial pw = p.in_w(roots[static_cast<std::size_t>(a)]);
  for (int b = 0; b < N; ++b) {
    const Mat v = pw.eval(roots[static_cast<std::size_t>(b)]);
    const Mat f = (v * v.adjoint()).inverse();
    const auto slot = static_cast<std::size_t>(a) * static_cast<std::size_t>(N) + static_cast<std::size_t>(b);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(r * d + c)][slot] = f(r, c);
  }
}

}  // namespace

TorusPlanes torus_inverse_spectrum(const MatrixPolynomial2D& p, int N, Exec exec) {
  const int d = p.dim();
  const auto roots = unit_roots(N);
  TorusPlanes out(static_cast<std::size_t>(d * d),
                  std::vector<cd>(static_cast<std::size_t>(N) * static_cast<std::size_t>(N)));
  if (exec == Exec::Serial) {
    for (int a = 0; a < N; ++a) inverse_spectrum_row(p, roots, a, out);
  } else {
#pragma omp parallel for schedule(static)
    for (int a = 0; a < N; ++a) inverse_spectrum_row(p, roots, a, out);
  }
  return out;
}

RootSweep stability_sweeps(const MatrixPolynomial2D& p, int gridN, Exec exec) {
  const auto roots = unit_roots(gridN);
  // slot t: roots in z at w_t; slot gridN + t: roots in w at z_t
  std::vector<double> mins(2 * static_cast<std::size_t>(gridN), kInf);
  std::vector<char> failed(2 * static_cast<std::size_t>(gridN), 0);
  auto one = [&](int s) {
    const auto t = static_cast<std::size_t>(s % gridN);
    try {
      mins[static_cast<std::size_t>(s)] = s < gridN ? det_min_root_modulus(p.in_z(roots[t]))
                                                    : det_min_root_modulus(p.in_w(roots[t]));
    } catch (const Error&) {
      failed[static_cast<std::size_t>(s)] = 1;
    }
  };
  const int total = 2 * gridN;
  if (exec == Exec::Serial) {
    for (int s = 0; s < total; ++s) one(s);
  } else {
#pragma omp parallel for schedule(static)
    for (int s = 0; s < total; ++s) one(s);
  }
  RootSweep out;
  for (int s = 0; s < total; ++s) {
    if (failed[static_cast<std::size_t>(s)]) {
      throw Error(ErrorKind::DegenerateDeterminant,
                  std::string(s < gridN ? "det p(., w)" : "det p(z, .)") + " vanishes at grid point " +
                      std::to_string(s % gridN));
    }
    double& slot = s < gridN ? out.zSweep : out.wSweep;
    slot = std::min(slot, mins[static_cast<std::size_t>(s)]);
  }
  return out;
}

double symbol_sup_norm(const std::map<Index2, Mat>& coeffs, int N, Exec exec) {
  if (coeffs.empty()) return 0.0;
  const auto roots = unit_roots(N);
  const auto d = coeffs.begin()->second.rows();
  std::vector<double> rowMax(static_cast<std::size_t>(N), 0.0);
  auto row = [&](int a) {
    double best = 0.0;
    for (int b = 0; b < N; ++b) {
      Mat acc = Mat::Zero(d, d);
      for (const auto& [k, g] : coeffs) {
        // exponents reduced mod N so the powers are exact table lookups
        const int ia = static_cast<int>((static_cast<long>(k.i) * a % N + N) % N);
        const int jb = static_cast<int>((static_cast<long>(k.j) * b % N + N) % N);
        acc += g * (roots[static_cast<std::size_t>(ia)] * roots[static_cast<std::size_t>(jb)]);
      }
      best = std::max(best, d == 1 ? std::abs(acc(0, 0)) : spectral_norm(acc));
    }
    rowMax[static_cast<std::size_t>(a)] = best;
  };
  if (exec == Exec::Serial) {
    for (int a = 0; a < N; ++a) row(a);
  } else {
#pragma omp parallel for schedule(static)
    for (int a = 0; a < N; ++a) row(a);
  }
  return *std::max_element(rowMax.begin(), rowMax.end());
}

}  // namespace bidisk
