#include "bidisk/covariance.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "bidisk/linalg.hpp"

namespace bidisk {

IndexList::IndexList(std::vector<Index2> items) : items_(std::move(items)) {}

bool IndexList::contains(Index2 k) const {
  return std::find(items_.begin(), items_.end(), k) != items_.end();
}

std::size_t IndexList::position(Index2 k) const {
  const auto it = std::find(items_.begin(), items_.end(), k);
  if (it == items_.end()) {
    throw Error(ErrorKind::MissingIndex, "index " + to_string(k) + " not in index list");
  }
  return static_cast<std::size_t>(it - items_.begin());
}

IndexList IndexList::without(std::initializer_list<Index2> drop) const {
  std::vector<Index2> kept;
  kept.reserve(items_.size());
  for (const auto& k : items_) {
    if (std::find(drop.begin(), drop.end(), k) == drop.end()) kept.push_back(k);
  }
  return IndexList(std::move(kept));
}

std::size_t IndexRect::size() const {
  if (b < a || e < c) return 0;
  return static_cast<std::size_t>(b - a + 1) * static_cast<std::size_t>(e - c + 1);
}

std::size_t IndexRect::position(Index2 k) const {
  if (!contains(k)) {
    throw Error(ErrorKind::MissingIndex, "index " + to_string(k) + " outside rectangle");
  }
  return static_cast<std::size_t>(k.i - a) * static_cast<std::size_t>(width()) +
         static_cast<std::size_t>(k.j - c);
}

Index2 IndexRect::at(std::size_t p) const {
  const auto w = static_cast<std::size_t>(width());
  return {a + static_cast<int>(p / w), c + static_cast<int>(p % w)};
}

IndexList IndexRect::list() const {
  std::vector<Index2> items;
  items.reserve(size());
  for (int i = a; i <= b; ++i)
    for (int j = c; j <= e; ++j) items.push_back({i, j});
  return IndexList(std::move(items));
}

CorrelationGrid::CorrelationGrid(int d, int n, int m) : d_(d), n_(n), m_(m) {
  if (d <= 0 || n <= 0 || m <= 0) {
    throw Error(ErrorKind::InvalidArgument, "grid dimensions must be positive");
  }
}

CorrelationGrid CorrelationGrid::from_function(int d, int n, int m,
                                               const std::function<Mat(Index2)>& f,
                                               bool withCorners) {
  CorrelationGrid g(d, n, m);
  for (int i = -n; i <= n; ++i) {
    for (int j = -m; j <= m; ++j) {
      const Index2 k{i, j};
      if (g.in_band(k) || (withCorners && g.is_corner(k))) g.set(k, f(k));
    }
  }
  return g;
}

bool CorrelationGrid::is_corner(Index2 k) const {
  return std::abs(k.i) == n_ && std::abs(k.j) == m_;
}

bool CorrelationGrid::in_band(Index2 k) const {
  return std::abs(k.i) <= n_ && std::abs(k.j) <= m_ && !is_corner(k);
}

const Mat& CorrelationGrid::at(Index2 k) const {
  const auto it = entries_.find(k);
  if (it == entries_.end()) {
    throw Error(ErrorKind::MissingIndex, "correlation c" + to_string(k) + " is not available");
  }
  return it->second;
}

void CorrelationGrid::set(Index2 k, Mat value) {
  if (value.rows() != d_ || value.cols() != d_) {
    throw Error(ErrorKind::InvalidArgument, "coefficient at " + to_string(k) + " is not d x d");
  }
  entries_[k] = std::move(value);
}

void CorrelationGrid::set_symmetric(Index2 k, const Mat& value) {
  set(k, value);
  set(-k, value.adjoint());
}

ValidationReport validate_grid(const CorrelationGrid& grid, double tol) {
  ValidationReport rep;
  for (int i = -grid.n(); i <= grid.n(); ++i) {
    for (int j = -grid.m(); j <= grid.m(); ++j) {
      const Index2 k{i, j};
      if (grid.in_band(k) && !grid.contains(k)) rep.missing.push_back(k);
    }
  }
  for (const auto& [k, c] : grid.entries()) {
    if (!grid.in_band(k)) {
      rep.extra.push_back(k);
      continue;
    }
    if (c.rows() != grid.dim() || c.cols() != grid.dim()) {
      rep.wrongShape.push_back(k);
      continue;
    }
    const auto mirror = grid.entries().find(-k);
    if (mirror == grid.entries().end()) continue;
    const double dev = (mirror->second - c.adjoint()).cwiseAbs().maxCoeff();
    if (dev > rep.symmetryViolation) {
      rep.symmetryViolation = dev;
      rep.worstSymmetryIndex = k;
    }
  }
  if (grid.contains({0, 0})) {
    const Mat& c00 = grid.at({0, 0});
    const Mat herm = 0.5 * (c00 + c00.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(herm, Eigen::EigenvaluesOnly);
    rep.c00MinEig = es.eigenvalues().minCoeff();
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    rep.c00PositiveDefinite = rep.c00MinEig > tol * scale;
  }
  return rep;
}

BlockMatrix::BlockMatrix(IndexList rows, IndexList cols, int d, Mat data)
    : rows_(std::move(rows)), cols_(std::move(cols)), d_(d), data_(std::move(data)) {}

BlockMatrix build_doubly_toeplitz(const CorrelationGrid& grid, const IndexList& rows,
                                  const IndexList& cols) {
  const int d = grid.dim();
  Mat data(static_cast<Eigen::Index>(rows.size()) * d, static_cast<Eigen::Index>(cols.size()) * d);
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (std::size_t q = 0; q < cols.size(); ++q) {
      data.block(static_cast<Eigen::Index>(p) * d, static_cast<Eigen::Index>(q) * d, d, d) =
          grid.at(rows[p] - cols[q]);
    }
  }
  return BlockMatrix(rows, cols, d, std::move(data));
}

PdResult is_positive_definite(const Mat& m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::InvalidArgument, "positive definiteness test needs a square matrix");
  }
  if (m.size() == 0) return {true, 0.0};
  const Mat herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(herm, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol * std::max(1.0, norm)) {
    throw Error(ErrorKind::NotHermitian,
                "asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
  PdResult r;
  r.minEig = ev.minCoeff();
  r.positiveDefinite = r.minEig > tol * norm;
  return r;
}

double doubly_toeplitz_deviation(const Mat& m, const IndexList& rows, const IndexList& cols,
                                 int d) {
  double maxBlock = 0.0;
  double dev = 0.0;
  const Index2 shifts[] = {{1, 0}, {0, 1}};
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (std::size_t q = 0; q < cols.size(); ++q) {
      const auto blk = m.block(static_cast<Eigen::Index>(p) * d, static_cast<Eigen::Index>(q) * d,
                               d, d);
      maxBlock = std::max(maxBlock, blk.norm());
      for (const auto& e : shifts) {
        const Index2 k = rows[p] + e;
        const Index2 l = cols[q] + e;
        if (!rows.contains(k) || !cols.contains(l)) continue;
        const auto other = m.block(static_cast<Eigen::Index>(rows.position(k)) * d,
                                   static_cast<Eigen::Index>(cols.position(l)) * d, d, d);
        dev = std::max(dev, (blk - other).norm());
      }
    }
  }
  return maxBlock > 0.0 ? dev / maxBlock : 0.0;
}

}  // namespace bidisk
