#ifndef BIDISK_KERNELS_HPP
#define BIDISK_KERNELS_HPP

#include <map>
#include <vector>

#include "bidisk/polynomial.hpp"

namespace bidisk {

// Grid sweeps come in a serial reference and an OpenMP version. Both write
// each grid point into its own slot and reduce serially afterwards, so the
// results are bitwise identical.
enum class Exec { Serial, Parallel };

// f = (p p^*)^-1 sampled at z_a = e^{2 pi i a/N}, w_b = e^{2 pi i b/N}.
// plane (r*d + c) holds entry (r,c) of f, laid out a*N + b.
using TorusPlanes = std::vector<std::vector<cd>>;
TorusPlanes torus_inverse_spectrum(const MatrixPolynomial2D& p, int N, Exec exec = Exec::Parallel);

struct RootSweep {
  double zSweep = kInf;  // min |z| over roots of det p(., w), w on the circle
  double wSweep = kInf;  // min |w| over roots of det p(z, .), z on the circle
};
RootSweep stability_sweeps(const MatrixPolynomial2D& p, int gridN, Exec exec = Exec::Parallel);

// max over an N x N torus grid of || sum_k g_k z^{k.i} w^{k.j} ||_2
double symbol_sup_norm(const std::map<Index2, Mat>& coeffs, int N, Exec exec = Exec::Parallel);

}  // namespace bidisk

#endif  // BIDISK_KERNELS_HPP
