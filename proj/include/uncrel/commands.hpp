#pragma once

// Command implementations behind tools/uncrel. Each returns a ReportDocument; the executable only
// parses flags, picks the output format and maps errors to exit codes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uncrel/densities.hpp"
#include "uncrel/inequalities.hpp"
#include "uncrel/mathcore.hpp"
#include "uncrel/report.hpp"

namespace uncrel::cli {

inline constexpr const char* kVersion = "1.0.0";

struct ModelSpec {
  std::string model = "gaussian";  // gaussian | hydrogenic | exponential | ho1d | fleet
  int d = 3;
  double a = 1.0;
  double N = 1.0;
  double Z = 1.0;
  double lambda = 1.0;
  int q = 2;
  int n_lo = 1;
  int n_hi = 1;
};

/// Parses "lo..hi" or a single integer.
std::pair<int, int> parse_range(const std::string& text);

DensityPair build_model(const ModelSpec& spec);

/// Members over the --n range: ho1d N = n, gaussian/exponential N = n, hydrogenic Z = n. The
/// "fleet" model ignores the range and returns standard_fleet(q).
std::vector<DensityPair> build_fleet(const ModelSpec& spec);

/// Gaussians d = 1..5, hydrogenic Z in {1, 2, 8}, exponential pairs d = 1..4 and oscillator
/// fermions N = 1..20 at multiplicity q.
std::vector<DensityPair> standard_fleet(int q);

/// Pair from two tabulated files. Momentum moments come only from the momentum file.
DensityPair load_pair(const std::string& position_file, const std::string& momentum_file, bool real_wavefunction,
                      std::vector<std::string>& warnings);

struct Table2Cell {
  double closed_form;
  double printed_exponent;
  std::optional<double> printed_as_written;  // where the printed expression differs from the one coded
  std::string note;
};

/// Closed forms of the d = 3, q = 2 Heisenberg-like coefficients for alpha, k in 1..4.
Table2Cell table2_closed_form(int alpha, int k);

report::ReportDocument cmd_table1();
report::ReportDocument cmd_table2();

struct MomentsRequest {
  std::vector<std::pair<std::string, RadialDensity>> densities;  // (space, density)
  std::vector<double> orders;
  std::vector<double> entropic;
  bool fisher = false;
  std::vector<std::string> warnings;
};

report::ReportDocument cmd_moments(const MomentsRequest& req, const math::QuadratureSpec& spec);

/// Single evaluation; every error propagates.
report::ReportDocument cmd_check(const inequalities::InequalityId& id, const DensityPair& pair, int q,
                                 const math::QuadratureSpec& spec);

/// Sweep; per-member errors become hole rows.
report::ReportDocument cmd_sweep(const inequalities::InequalityId& id, const std::vector<DensityPair>& fleet, int q,
                                 const math::QuadratureSpec& spec);

/// mode F: extremal_F at (d, alpha, k); mode G: extremal_G with branch probes; mode grid: the
/// 64-point F grid.
report::ReportDocument cmd_oracle(const std::string& mode, int d, double alpha, double k);

report::ReportDocument cmd_catalog();

void cmd_export(std::ostream& out, const DensityPair& pair, const std::string& space, double r_max, int points);

}  // namespace uncrel::cli
