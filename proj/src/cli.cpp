#include "bidisk/cli.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "bidisk/ar2d.hpp"
#include "bidisk/io.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/nehari.hpp"

namespace bidisk {

namespace {

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(cfg.output, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json certificate_json(const StabilityCertificate& c) {
  return json{{"z_sweep", finite_or_null(c.zSweep)},
              {"w_sweep", finite_or_null(c.wSweep)},
              {"min_modulus", finite_or_null(c.minModulus)},
              {"grid_n", c.gridN},
              {"margin", c.margin},
              {"pass", c.pass}};
}

DesignOptions design_options(const JobConfig& cfg, const GridDocument& doc) {
  DesignOptions opt;
  opt.tolComm = cfg.tolComm;
  opt.tolPD = cfg.tolPD;
  opt.cornerNm = doc.cornerNm;
  opt.gridN = cfg.gridN;
  opt.margin = cfg.margin;
  return opt;
}

json design_json(const Design& des, const CorrelationGrid& grid) {
  return json{{"kind", "design"},
              {"d", grid.dim()},
              {"n", grid.n()},
              {"m", grid.m()},
              {"p", polynomial_to_json(des.p)},
              {"r", polynomial_to_json(des.r)},
              {"corner_minus_nm", matrix_to_json(des.feasibility.cornerMinusNM)},
              {"corner_nm", matrix_to_json(des.cornerNm)},
              {"comm_residual", des.feasibility.commResidual},
              {"structure_left", des.structureLeft},
              {"structure_right", des.structureRight},
              {"stability_p", certificate_json(des.stabilityP)},
              {"stability_r", certificate_json(des.stabilityR)}};
}

// p from a design document, or by designing from a grid document.
MatrixPolynomial2D load_filter(const JobConfig& cfg) {
  const json doc = read_json_file(cfg.input);
  if (is_design_document(doc)) {
    const int d = doc.at("d").get<int>(), n = doc.at("n").get<int>(), m = doc.at("m").get<int>();
    return polynomial_from_json(doc.at("p"), d, n, m, "p");
  }
  const GridDocument gd = parse_grid_document(doc, cfg.tolPD);
  return design_filters(gd.grid, design_options(cfg, gd)).p;
}

bool power_of_two_in_range(int x) { return x >= 64 && x <= 4096 && (x & (x - 1)) == 0; }

}  // namespace

void validate_config(const JobConfig& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  for (const auto& [name, v] : {std::pair{"--tol-comm", cfg.tolComm}, std::pair{"--tol-pd", cfg.tolPD},
                                std::pair{"--margin", cfg.margin}, std::pair{"--tol", cfg.tol}}) {
    if (!(v > 0.0)) throw InputError(std::string(name) + " must be positive");
  }
  if (!power_of_two_in_range(cfg.fftN)) throw InputError("--fft-n must be a power of two in 64..4096");
  if (!power_of_two_in_range(cfg.gridN)) throw InputError("--grid-n must be a power of two in 64..4096");
  if (cfg.truncN < 1) throw InputError("--trunc-n must be positive");
  if (cfg.extendJ < 1) throw InputError("--extend-j must be positive");
}

int cmd_check(const JobConfig& cfg, std::ostream& err) {
  const GridDocument gd = parse_grid_document(read_json_file(cfg.input), cfg.tolPD);
  json rep{{"kind", "check"}, {"d", gd.grid.dim()}, {"n", gd.grid.n()}, {"m", gd.grid.m()}};
  try {
    const FeasibilityReport fr = check_conditions(gd.grid, cfg.tolComm, cfg.tolPD);
    rep["feasible"] = fr.feasible;
    rep["comm_residual"] = fr.commResidual;
    rep["pd_min_eig_1"] = fr.pdMinEig1;
    rep["pd_min_eig_2"] = fr.pdMinEig2;
    rep["corner_minus_nm"] = matrix_to_json(fr.cornerMinusNM);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPD) throw;
    rep["feasible"] = false;
    rep["reason"] = e.what();
  }
  emit(cfg, dump(rep));
  if (!rep["feasible"].get<bool>()) {
    err << "infeasible: comm residual or positivity condition fails\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int cmd_design(const JobConfig& cfg, std::ostream&) {
  const GridDocument gd = parse_grid_document(read_json_file(cfg.input), cfg.tolPD);
  const Design des = design_filters(gd.grid, design_options(cfg, gd));
  emit(cfg, dump(design_json(des, gd.grid)));
  return kExitOk;
}

int cmd_extend(const JobConfig& cfg, std::ostream&) {
  const MatrixPolynomial2D p = load_filter(cfg);
  ExtendOptions opt;
  opt.fftN = cfg.fftN;
  opt.gridN = cfg.gridN;
  opt.margin = cfg.margin;
  const int J = cfg.extendJ;
  const auto c = extend_covariance_2d(p, IndexRect(-J, J, -J, J), opt);
  json entries = json::array();
  for (const auto& [k, v] : c) {
    json e = matrix_to_json(v);
    e["i"] = k.i;
    e["j"] = k.j;
    entries.push_back(e);
  }
  emit(cfg, dump(json{{"kind", "extension"}, {"d", p.dim()}, {"J", J}, {"fft_n", cfg.fftN},
                      {"entries", entries}}));
  return kExitOk;
}

int cmd_spectrum(const JobConfig& cfg, std::ostream&) {
  const MatrixPolynomial2D p = load_filter(cfg);
  const auto cert = stability_check_2d(p, cfg.gridN, cfg.margin);
  if (!cert.pass) throw Error(ErrorKind::Unstable, "filter fails the bidisk certificate");
  const int N = cfg.gridN, d = p.dim();
  const TorusPlanes planes = torus_inverse_spectrum(p, N);
  std::string out = "theta_z,theta_w,entry_row,entry_col,re,im\n";
  for (int a = 0; a < N; ++a) {
    const std::string tz = format_double(2.0 * std::numbers::pi * a / N);
    for (int b = 0; b < N; ++b) {
      const std::string tw = format_double(2.0 * std::numbers::pi * b / N);
      const auto slot = static_cast<std::size_t>(a) * static_cast<std::size_t>(N) + static_cast<std::size_t>(b);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          const cd v = planes[static_cast<std::size_t>(r * d + c)][slot];
          out += tz + "," + tw + "," + std::to_string(r) + "," + std::to_string(c) + "," +
                 format_double(v.real()) + "," + format_double(v.imag()) + "\n";
        }
      }
    }
  }
  emit(cfg, out);
  return kExitOk;
}

int cmd_nehari1d(const JobConfig& cfg, std::ostream&) {
  HankelData1D h = parse_hankel1d_document(read_json_file(cfg.input));
  h.N = cfg.truncN;
  const int J = cfg.extendJ;
  const NehariSolution1D s = solve_nehari_1d_converged(h, J, cfg.tol);
  json ext = json::array();
  for (const auto& [j, g] : s.extension) {
    json e = matrix_to_json(g);
    e["j"] = j;
    ext.push_back(e);
  }
  emit(cfg, dump(json{{"kind", "nehari1d"},
                      {"N", h.N},
                      {"J", J},
                      {"hankel_norm", s.hankelNorm},
                      {"delta0", matrix_to_json(s.delta0)},
                      {"disagreement", s.disagreement},
                      {"toeplitz_norm", two_sided_toeplitz_norm(s.extension, 2 * J)},
                      {"sup_norm", symbol_sup_norm_1d(s.extension, 1024)},
                      {"extension", ext}}));
  return kExitOk;
}

int cmd_nehari2d(const JobConfig& cfg, std::ostream& err) {
  LittleHankelData g = parse_little_hankel_document(read_json_file(cfg.input));
  g.N = g.M = cfg.truncN;
  const int J = cfg.extendJ;
  if (J >= g.N) throw InputError("--extend-j must be smaller than --trunc-n");
  const Nehari2DReport rep = analyze_nehari_2d(g, J);
  std::string failure;
  try {
    solve_nehari_2d(g, J, cfg.tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CommViolation && e.kind() != ErrorKind::StructureViolation &&
        e.kind() != ErrorKind::NormAtLeastOne) {
      throw;
    }
    failure = e.what();
  }
  json coeffs = json::array();
  for (const auto& [k, v] : rep.coeffs) {
    json e = matrix_to_json(v);
    e["i"] = k.i;
    e["j"] = k.j;
    coeffs.push_back(e);
  }
  json out{{"kind", "nehari2d"},
           {"N", g.N},
           {"J", J},
           {"comm_residual", rep.commResidual},
           {"hankel_norm", rep.hankelNorm},
           {"zero_pattern_d", rep.zeroPatternD},
           {"zero_pattern_a", rep.zeroPatternA},
           {"hankel_deviation", rep.hankelDeviation},
           {"toeplitz_deviation", rep.toeplitzDeviation},
           {"sup_norm", rep.supNorm},
           {"certified", failure.empty()},
           {"coefficients", coeffs}};
  if (!failure.empty()) out["failure"] = failure;
  emit(cfg, dump(out));
  if (!failure.empty()) {
    err << failure << "\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int run_job(const JobConfig& cfg, std::ostream& err) {
  try {
    validate_config(cfg);
    if (cfg.subcommand == "check") return cmd_check(cfg, err);
    if (cfg.subcommand == "design") return cmd_design(cfg, err);
    if (cfg.subcommand == "extend") return cmd_extend(cfg, err);
    if (cfg.subcommand == "spectrum") return cmd_spectrum(cfg, err);
    if (cfg.subcommand == "nehari1d") return cmd_nehari1d(cfg, err);
    if (cfg.subcommand == "nehari2d") return cmd_nehari2d(cfg, err);
    throw InputError("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Infeasible:
      case ErrorKind::NotPD:
      case ErrorKind::CommViolation:
      case ErrorKind::StructureViolation:
      case ErrorKind::NormAtLeastOne:
        return kExitInfeasible;
      case ErrorKind::Unstable:
      case ErrorKind::NoConvergence:
      case ErrorKind::IllConditioned:
      case ErrorKind::NotPositiveOnCircle:
      case ErrorKind::DegenerateDeterminant:
      case ErrorKind::SingularTk:
        return kExitUnstable;
      default:
        return kExitInput;
    }
  } catch (const json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kExitInput;
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"bidisk: two-variable autoregressive filters and Nehari extensions"};
  app.require_subcommand(1);
  JobConfig cfg;
  const std::pair<const char*, const char*> subs[] = {
      {"check", "test solvability of a correlation grid"},
      {"design", "construct the stable filters p and r"},
      {"extend", "extend the covariance to {-J..J}^2"},
      {"spectrum", "tabulate (p p*)^-1 on the torus"},
      {"nehari1d", "one-variable Nehari extension"},
      {"nehari2d", "two-variable little Hankel Nehari extension"},
  };
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", cfg.input, "input document")->required();
    sub->add_option("--output", cfg.output, "output file (default: stdout)");
    sub->add_option("--tol-comm", cfg.tolComm, "commutation residual tolerance");
    sub->add_option("--tol-pd", cfg.tolPD, "relative positive definiteness tolerance");
    sub->add_option("--margin", cfg.margin, "stability margin on root moduli");
    sub->add_option("--fft-n", cfg.fftN, "torus grid size for Fourier extraction");
    sub->add_option("--grid-n", cfg.gridN, "circle grid size for certificates and tables");
    sub->add_option("--trunc-n", cfg.truncN, "Hankel truncation");
    sub->add_option("--extend-j", cfg.extendJ, "extension depth");
    sub->add_option("--tol", cfg.tol, "Nehari tolerance");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  for (const auto& [name, help] : subs) {
    if (app.got_subcommand(name)) cfg.subcommand = name;
  }
  return run_job(cfg, std::cerr);
}

}  // namespace bidisk
