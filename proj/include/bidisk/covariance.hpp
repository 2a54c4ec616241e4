#ifndef BIDISK_COVARIANCE_HPP
#define BIDISK_COVARIANCE_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bidisk/types.hpp"

namespace bidisk {

/// Ordered finite set of integer pairs. Matrices indexed by pairs use this
/// order for their block layout.
class IndexList {
 public:
  IndexList() = default;
  explicit IndexList(std::vector<Index2> items);

  std::size_t size() const { return items_.size(); }
  const Index2& operator[](std::size_t p) const { return items_[p]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(Index2 k) const;
  /// Position of k in the list. Throws MissingIndex when absent.
  std::size_t position(Index2 k) const;

  /// Copy with the given pairs removed (order of the rest preserved).
  IndexList without(std::initializer_list<Index2> drop) const;

  const std::vector<Index2>& items() const { return items_; }

 private:
  std::vector<Index2> items_;
};

/// The rectangle {a..b} x {c..e} in lexicographic order, first coordinate major.
struct IndexRect {
  int a = 0, b = -1, c = 0, e = -1;

  IndexRect() = default;
  IndexRect(int a_, int b_, int c_, int e_) : a(a_), b(b_), c(c_), e(e_) {}

  int width() const { return e - c + 1; }
  std::size_t size() const;
  bool contains(Index2 k) const { return k.i >= a && k.i <= b && k.j >= c && k.j <= e; }
  std::size_t position(Index2 k) const;
  Index2 at(std::size_t p) const;
  IndexList list() const;
  operator IndexList() const { return list(); }  // NOLINT(google-explicit-constructor)
};

/// Correlation coefficients c_{ij} (d x d) on the band
/// Lambda = {-n..n} x {-m..m} without its four corners. Corner entries may be
/// installed explicitly by the completion routines; they are then reported as
/// extra by validate_grid.
class CorrelationGrid {
 public:
  CorrelationGrid(int d, int n, int m);

  /// Fills every index of Lambda from f; optionally also the four corners.
  static CorrelationGrid from_function(int d, int n, int m,
                                       const std::function<Mat(Index2)>& f,
                                       bool withCorners = false);

  int dim() const { return d_; }
  int n() const { return n_; }
  int m() const { return m_; }

  bool in_band(Index2 k) const;
  bool is_corner(Index2 k) const;
  bool contains(Index2 k) const { return entries_.count(k) != 0; }
  const Mat& at(Index2 k) const;

  /// Stores c_k. The mirror -k is left untouched.
  void set(Index2 k, Mat value);
  /// Stores c_k and c_{-k} = c_k^*.
  void set_symmetric(Index2 k, const Mat& value);
  void erase(Index2 k) { entries_.erase(k); }

  const std::map<Index2, Mat>& entries() const { return entries_; }

 private:
  int d_;
  int n_;
  int m_;
  std::map<Index2, Mat> entries_;
};

struct ValidationReport {
  double symmetryViolation = 0.0;  ///< max_k max-entry |c_{-k} - c_k^*|
  std::optional<Index2> worstSymmetryIndex;
  std::vector<Index2> missing;
  std::vector<Index2> extra;
  std::vector<Index2> wrongShape;
  bool c00PositiveDefinite = false;
  double c00MinEig = 0.0;

  bool valid(double tol) const {
    return symmetryViolation <= tol && missing.empty() && extra.empty() &&
           wrongShape.empty() && c00PositiveDefinite;
  }
};

ValidationReport validate_grid(const CorrelationGrid& grid, double tol = 1e-10);

/// Dense matrix with pair-indexed d x d blocks.
class BlockMatrix {
 public:
  BlockMatrix(IndexList rows, IndexList cols, int d, Mat data);

  const IndexList& rows() const { return rows_; }
  const IndexList& cols() const { return cols_; }
  int dim() const { return d_; }
  const Mat& data() const { return data_; }

  auto block(Index2 k, Index2 l) const {
    return data_.block(static_cast<Eigen::Index>(rows_.position(k)) * d_,
                       static_cast<Eigen::Index>(cols_.position(l)) * d_, d_, d_);
  }

 private:
  IndexList rows_;
  IndexList cols_;
  int d_;
  Mat data_;
};

/// (c_{k-l})_{k in rows, l in cols}. Throws MissingIndex if some k-l is not
/// stored in the grid.
BlockMatrix build_doubly_toeplitz(const CorrelationGrid& grid, const IndexList& rows,
                                  const IndexList& cols);

struct PdResult {
  bool positiveDefinite = false;
  double minEig = 0.0;
};

/// True iff lambda_min(M) > tol * ||M||_2. Throws NotHermitian when
/// max|M - M^*| exceeds tol * max(1, ||M||_2).
PdResult is_positive_definite(const Mat& m, double tol = 1e-10);
inline PdResult is_positive_definite(const BlockMatrix& m, double tol = 1e-10) {
  return is_positive_definite(m.data(), tol);
}

/// Largest deviation from the doubly Toeplitz property of a matrix whose rows
/// and columns are laid out over `rows` and `cols` with d x d blocks:
/// max ||block(k,l) - block(k+e,l+e)|| over unit shifts e, relative to the
/// largest block norm.
double doubly_toeplitz_deviation(const Mat& m, const IndexList& rows, const IndexList& cols,
                                 int d);

}  // namespace bidisk

#endif  // BIDISK_COVARIANCE_HPP
