#ifndef BIDISK_IO_HPP
#define BIDISK_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "bidisk/covariance.hpp"
#include "bidisk/nehari.hpp"
#include "bidisk/polynomial.hpp"

namespace bidisk {

using json = nlohmann::json;

// Malformed input. The message names the line (parse errors) or the field.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j, int rows, int cols, const std::string& field);

struct GridDocument {
  CorrelationGrid grid;
  std::optional<Mat> cornerNm;
};

// {d, n, m, entries: [{i, j, re, im}], corner_nm?: {re, im}}
GridDocument parse_grid_document(const json& doc, double tol = 1e-10);
json grid_to_json(const CorrelationGrid& grid);

// {kind: "design", d, n, m, p: [...], r: [...], ...}
bool is_design_document(const json& doc);
json polynomial_to_json(const MatrixPolynomial2D& p);
MatrixPolynomial2D polynomial_from_json(const json& entries, int d, int n, int m,
                                        const std::string& field);

// {rows, cols, gamma: [{j, re, im}]}
HankelData1D parse_hankel1d_document(const json& doc);
// {d, gamma: [{i, j, re, im}]}
LittleHankelData parse_little_hankel_document(const json& doc);

// Shortest round-trip decimal form, used for every number written.
std::string format_double(double x);

}  // namespace bidisk

#endif  // BIDISK_IO_HPP
