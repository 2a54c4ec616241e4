#ifndef BIDISK_CLI_HPP
#define BIDISK_CLI_HPP

#include <iosfwd>
#include <string>

namespace bidisk {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitInfeasible = 2,
  kExitUnstable = 3,
};

struct JobConfig {
  std::string subcommand;
  std::string input;
  std::string output;  // empty: standard output
  double tolComm = 1e-8;
  double tolPD = 1e-10;
  double margin = 1e-6;
  double tol = 1e-6;
  int fftN = 512;
  int gridN = 512;
  int truncN = 40;
  int extendJ = 10;
};

// Checks tolerances and grid sizes; throws InputError.
void validate_config(const JobConfig& cfg);

int cmd_check(const JobConfig& cfg, std::ostream& err);
int cmd_design(const JobConfig& cfg, std::ostream& err);
int cmd_extend(const JobConfig& cfg, std::ostream& err);
int cmd_spectrum(const JobConfig& cfg, std::ostream& err);
int cmd_nehari1d(const JobConfig& cfg, std::ostream& err);
int cmd_nehari2d(const JobConfig& cfg, std::ostream& err);

// Validates and dispatches on cfg.subcommand, mapping errors to exit codes.
int run_job(const JobConfig& cfg, std::ostream& err);

// Full command line entry point.
int run_cli(int argc, char** argv);

}  // namespace bidisk

#endif  // BIDISK_CLI_HPP
