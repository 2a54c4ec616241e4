#ifndef BIDISK_TYPES_HPP
#define BIDISK_TYPES_HPP

#include <complex>
#include <compare>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bidisk {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// An integer pair (z-exponent, w-exponent). Ordered lexicographically with
/// the first coordinate major.
struct Index2 {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const Index2&, const Index2&) = default;
  constexpr Index2 operator-() const { return {-i, -j}; }
  friend constexpr Index2 operator+(Index2 a, Index2 b) { return {a.i + b.i, a.j + b.j}; }
  friend constexpr Index2 operator-(Index2 a, Index2 b) { return {a.i - b.i, a.j - b.j}; }
};

std::string to_string(Index2 k);

enum class ErrorKind {
  MissingIndex,
  NotPD,
  NotHermitian,
  DegenerateDeterminant,
  NotPositiveOnCircle,
  NoConvergence,
  Infeasible,
  StructureViolation,
  Unstable,
  SingularTk,
  NormAtLeastOne,
  IllConditioned,
  CommViolation,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// All library failures are reported through this exception; kind() lets
/// callers (notably the CLI exit-code mapping) dispatch without string parsing.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bidisk

#endif  // BIDISK_TYPES_HPP
