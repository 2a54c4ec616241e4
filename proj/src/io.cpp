#include "bidisk/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "bidisk/linalg.hpp"

namespace bidisk {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file '" + path + "'");
  out << text;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json matrix_to_json(const Mat& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ir = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return json{{"re", re}, {"im", im}};
}

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

int int_field(const json& obj, const char* key, const std::string& where, int lo) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > 1000000) {
    throw InputError(where + "." + key + ": value " + std::to_string(x) + " out of range");
  }
  return static_cast<int>(x);
}

void read_part(const json& arr, Mat& out, bool imag, int rows, int cols, const std::string& where) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != rows) {
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  }
  for (int r = 0; r < rows; ++r) {
    const json& row = arr[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw InputError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) +
                       " columns");
    }
    for (int c = 0; c < cols; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) {
        throw InputError(where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                         "]: expected a number");
      }
      const double x = v.get<double>();
      if (imag) out(r, c).imag(x);
      else out(r, c).real(x);
    }
  }
}

}  // namespace

Mat matrix_from_json(const json& j, int rows, int cols, const std::string& where) {
  Mat m = Mat::Zero(rows, cols);
  read_part(field(j, "re", where), m, false, rows, cols, where + ".re");
  if (j.contains("im")) read_part(j.at("im"), m, true, rows, cols, where + ".im");
  return m;
}

GridDocument parse_grid_document(const json& doc, double tol) {
  const int d = int_field(doc, "d", "document", 1);
  const int n = int_field(doc, "n", "document", 1);
  const int m = int_field(doc, "m", "document", 1);
  const json& entries = field(doc, "entries", "document");
  if (!entries.is_array()) throw InputError("document.entries: expected an array");
  CorrelationGrid grid(d, n, m);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = "entries[" + std::to_string(e) + "]";
    const json& ent = entries[e];
    const json& iv = field(ent, "i", where);
    const json& jv = field(ent, "j", where);
    if (!iv.is_number_integer() || !jv.is_number_integer()) {
      throw InputError(where + ": i and j must be integers");
    }
    const Index2 k{iv.get<int>(), jv.get<int>()};
    if (!grid.in_band(k)) {
      throw InputError(where + ": index " + to_string(k) + " is outside the band");
    }
    if (grid.contains(k)) throw InputError(where + ": duplicate index " + to_string(k));
    grid.set(k, matrix_from_json(ent, d, d, where));
  }
  const ValidationReport rep = validate_grid(grid, tol);
  if (!rep.missing.empty()) {
    throw InputError("document.entries: missing index " + to_string(rep.missing.front()));
  }
  if (rep.symmetryViolation > tol) {
    throw InputError("document.entries: Hermitian symmetry broken at index " +
                     to_string(*rep.worstSymmetryIndex) + " (deviation " +
                     format_double(rep.symmetryViolation) + ")");
  }
  if (!rep.c00PositiveDefinite) {
    throw InputError("document.entries: c(0,0) is not positive definite");
  }
  GridDocument out{grid, std::nullopt};
  if (doc.contains("corner_nm")) out.cornerNm = matrix_from_json(doc.at("corner_nm"), d, d, "corner_nm");
  return out;
}

json grid_to_json(const CorrelationGrid& grid) {
  json entries = json::array();
  for (const auto& [k, c] : grid.entries()) {
    json e = matrix_to_json(c);
    e["i"] = k.i;
    e["j"] = k.j;
    entries.push_back(e);
  }
  return json{{"d", grid.dim()}, {"n", grid.n()}, {"m", grid.m()}, {"entries", entries}};
}

bool is_design_document(const json& doc) {
  return doc.is_object() && doc.contains("kind") && doc.at("kind") == "design";
}

json polynomial_to_json(const MatrixPolynomial2D& p) {
  json entries = json::array();
  for (int i = 0; i <= p.n(); ++i) {
    for (int j = 0; j <= p.m(); ++j) {
      json e = matrix_to_json(p(i, j));
      e["i"] = i;
      e["j"] = j;
      entries.push_back(e);
    }
  }
  return entries;
}

MatrixPolynomial2D polynomial_from_json(const json& entries, int d, int n, int m,
                                        const std::string& where) {
  if (!entries.is_array()) throw InputError(where + ": expected an array");
  MatrixPolynomial2D p(d, n, m);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string w = where + "[" + std::to_string(e) + "]";
    const int i = int_field(entries[e], "i", w, 0);
    const int j = int_field(entries[e], "j", w, 0);
    if (i > n || j > m) throw InputError(w + ": coefficient index out of range");
    p(i, j) = matrix_from_json(entries[e], d, d, w);
  }
  return p;
}

HankelData1D parse_hankel1d_document(const json& doc) {
  HankelData1D h;
  h.rows = int_field(doc, "rows", "document", 1);
  h.cols = int_field(doc, "cols", "document", 1);
  const json& g = field(doc, "gamma", "document");
  if (!g.is_array()) throw InputError("document.gamma: expected an array");
  std::map<int, Mat> given;
  int K = 0;
  for (std::size_t e = 0; e < g.size(); ++e) {
    const std::string w = "gamma[" + std::to_string(e) + "]";
    const int j = int_field(g[e], "j", w, 0);
    if (given.count(j)) throw InputError(w + ": duplicate index " + std::to_string(j));
    given[j] = matrix_from_json(g[e], h.rows, h.cols, w);
    K = std::max(K, j);
  }
  for (int j = 0; j <= K; ++j) {
    const auto it = given.find(j);
    h.given.push_back(it == given.end() ? Mat::Zero(h.rows, h.cols) : it->second);
  }
  return h;
}

LittleHankelData parse_little_hankel_document(const json& doc) {
  LittleHankelData g;
  g.d = int_field(doc, "d", "document", 1);
  const json& arr = field(doc, "gamma", "document");
  if (!arr.is_array()) throw InputError("document.gamma: expected an array");
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string w = "gamma[" + std::to_string(e) + "]";
    const Index2 k{int_field(arr[e], "i", w, 0), int_field(arr[e], "j", w, 0)};
    if (g.gamma.count(k)) throw InputError(w + ": duplicate index " + to_string(k));
    g.gamma[k] = matrix_from_json(arr[e], g.d, g.d, w);
  }
  return g;
}

}  // namespace bidisk
