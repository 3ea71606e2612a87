#include "uncrel/commands.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "uncrel/constants.hpp"
#include "uncrel/errors.hpp"
#include "uncrel/functionals.hpp"
#include "uncrel/varoracle.hpp"

namespace uncrel::cli {

namespace {

using report::Cell;
using report::ReportDocument;

// Table I as printed, indexed [k-1][d-1].
constexpr double kTable1[4][4] = {
    {0.165728, 0.405724, 0.537513, 0.618094},
    {0.021331, 0.165728, 0.303977, 0.405724},
    {0.002056, 0.061935, 0.165728, 0.262190},
    {0.000158, 0.021331, 0.086812, 0.165728},
};

ReportDocument base_document(const std::string& command) {
  ReportDocument doc;
  doc.add_meta("tool", "uncrel");
  doc.add_meta("version", kVersion);
  doc.add_meta("command", command);
  return doc;
}

void add_tolerances(ReportDocument& doc, const math::QuadratureSpec& spec) {
  doc.add_meta("rel_tol", report::format_number(spec.rel_tol));
  doc.add_meta("abs_tol", report::format_number(spec.abs_tol));
  doc.add_meta("conventions", "moments, entropic moments and Fisher information are totals; variance is per particle");
}

long long as_int(int v) { return static_cast<long long>(v); }

Cell optional_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

void add_report_columns(ReportDocument& doc) {
  doc.columns = {"id", "alpha", "k", "variant", "label", "d", "N", "q", "direction", "lhs", "rhs", "margin",
                 "ratio", "satisfied", "hole", "rhs_semiclassical", "note"};
}

void add_report_row(ReportDocument& doc, const inequalities::BoundReport& r) {
  doc.add_row({std::string(inequalities::to_string(r.id.kind)), r.id.params.alpha, r.id.params.k,
               std::string(constants::to_string(r.id.params.variant)), r.label, as_int(r.cfg.d), r.cfg.N,
               as_int(r.cfg.q), std::string(inequalities::to_string(r.direction)), r.lhs, r.rhs, r.margin, r.ratio,
               r.satisfied, r.hole, optional_cell(r.rhs_semiclassical), r.note});
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw FormatError("bad range '" + text + "'");
    }
    if (used != s.size()) throw FormatError("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse(text);
    return {v, v};
  }
  const int lo = parse(text.substr(0, dots));
  const int hi = parse(text.substr(dots + 2));
  if (lo > hi) throw FormatError("range '" + text + "' is empty");
  return {lo, hi};
}

DensityPair build_model(const ModelSpec& spec) {
  if (spec.model == "gaussian") return densities::gaussian_pair(spec.d, spec.a, spec.N);
  if (spec.model == "hydrogenic") return densities::hydrogenic3d(spec.Z);
  if (spec.model == "exponential") return densities::exponential_pair(spec.d, spec.lambda, spec.N);
  if (spec.model == "ho1d") {
    if (spec.N != std::floor(spec.N)) throw DomainError("ho1d: N must be an integer");
    return densities::harmonic_fermions_1d(static_cast<int>(spec.N), spec.q);
  }
  throw FormatError("unknown model '" + spec.model + "'");
}

std::vector<DensityPair> standard_fleet(int q) {
  std::vector<DensityPair> fleet;
  for (int d = 1; d <= 5; ++d) fleet.push_back(densities::gaussian_pair(d, 1.0, 1.0));
  for (double Z : {1.0, 2.0, 8.0}) fleet.push_back(densities::hydrogenic3d(Z));
  for (int d = 1; d <= 4; ++d) fleet.push_back(densities::exponential_pair(d, 1.0, 1.0));
  for (int n = 1; n <= 20; ++n) fleet.push_back(densities::harmonic_fermions_1d(n, q));
  return fleet;
}

std::vector<DensityPair> build_fleet(const ModelSpec& spec) {
  if (spec.model == "fleet") return standard_fleet(spec.q);
  if (spec.n_lo < 1) throw DomainError("fleet range must start at n >= 1");
  std::vector<DensityPair> fleet;
  for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
    ModelSpec member = spec;
    if (spec.model == "hydrogenic") {
      member.Z = n;
    } else {
      member.N = n;
    }
    fleet.push_back(build_model(member));
  }
  return fleet;
}

DensityPair load_pair(const std::string& position_file, const std::string& momentum_file, bool real_wavefunction,
                      std::vector<std::string>& warnings) {
  const auto pos = report::read_tabulated_file(position_file);
  const auto mom = report::read_tabulated_file(momentum_file);
  if (pos.cfg.d != mom.cfg.d) throw FormatError("position and momentum files declare different d");
  auto p = densities::load_tabulated(pos.cfg, pos.r, pos.rho);
  auto m = densities::load_tabulated(mom.cfg, mom.r, mom.rho);
  if (p.warning) warnings.push_back("position: " + *p.warning);
  if (m.warning) warnings.push_back("momentum: " + *m.warning);
  if (std::abs(p.measured_N - m.measured_N) > 1e-3 * p.measured_N) {
    warnings.push_back("position and momentum normalizations differ; N is taken from the position file");
  }
  return DensityPair{p.density, m.density, real_wavefunction, true, position_file + " | " + momentum_file};
}

Table2Cell table2_closed_form(int alpha, int k) {
  const double pi = math::pi;
  const auto g = [](double x) { return std::tgamma(x); };
  const auto cbrt = [](double x) { return std::cbrt(x); };
  switch (alpha * 10 + k) {
    case 11: return {9.0 / 49.0 * cbrt(45 * pi), 7.0 / 3.0, {}, {}};
    case 12: return {243.0 / 5324.0 * std::pow(35 * pi, 2.0 / 3.0), 11.0 / 3.0, {}, {}};
    case 13: return {243.0 / 625.0 * pi, 5.0, {}, {}};
    case 14: return {841995.0 / 39617584.0 * cbrt(3465 * std::pow(pi, 4)), 19.0 / 3.0, {}, {}};
    case 21: return {9.0 / 22.0 * std::sqrt(3.0 / 11.0) * cbrt(35 * pi), 11.0 / 6.0, {}, {}};
    case 22: return {9.0 / 16.0 * std::pow(3.0, 2.0 / 3.0), 8.0 / 3.0, {}, {}};
    case 23: return {135.0 / 196.0 * std::sqrt(3.0 / 7.0) * pi, 7.0 / 2.0, {}, {}};
    case 24: {
      const double lead = 2268.0 / 28561.0 * cbrt(21.0 / 13.0 * pi * pi);
      const double ratio = g(17.0 / 4.0) / g(11.0 / 4.0);
      return {lead * std::pow(ratio, 4.0 / 3.0), 13.0 / 3.0, lead * ratio,
              "Gamma ratio raised to 4/3; the printed cell omits the exponent"};
    }
    case 31: return {3.0 / 5.0 * cbrt(9.0 / 5.0 * pi), 5.0 / 3.0, {}, {}};
    case 32: return {3.0 * std::pow(45 * pi / (196 * std::sqrt(7.0)), 2.0 / 3.0), 7.0 / 3.0, {}, {}};
    case 33: return {0.5 * pi, 3.0, {}, {}};
    case 34: return {189.0 / 484.0 * cbrt(63.0 / 44.0 * std::pow(pi, 4)), 11.0 / 3.0, {}, {}};
    case 41: return {3.0 / 38.0 * std::pow(3.0 / 19.0, 0.25) * cbrt(3465 * pi), 19.0 / 12.0, {}, {}};
    case 42:
      return {24 * std::sqrt(3.0) / 169.0 * cbrt(4 * pi / std::sqrt(13.0)) *
                  std::pow(g(17.0 / 4.0) / g(3.0 / 4.0), 2.0 / 3.0),
              13.0 / 16.0, {}, "printed N exponent 13/16; the general relation gives 13/6"};
    case 43: return {21.0 / 4.0 * std::pow(3.0 / 11.0, 7.0 / 4.0) * pi, 11.0 / 4.0, {}, {}};
    case 44:
      return {567.0 / 3200.0 * cbrt(63.0 / 2.0) * pi * pi / std::pow(g(0.75) * g(11.0 / 4.0), 4.0 / 3.0), 10.0 / 3.0,
              {}, {}};
    default: break;
  }
  throw DomainError("table2_closed_form: alpha and k must lie in 1..4");
}

ReportDocument cmd_table1() {
  auto doc = base_document("table1");
  doc.columns = {"d", "k", "B", "printed", "abs_diff"};
  for (const auto& c : constants::daubechies_table(4, 4)) {
    const double printed = kTable1[c.k - 1][c.d - 1];
    doc.add_row({as_int(c.d), as_int(c.k), c.value, printed, std::abs(c.value - printed)});
  }
  return doc;
}

ReportDocument cmd_table2() {
  auto doc = base_document("table2");
  doc.add_meta("d", "3");
  doc.add_meta("q", "2");
  doc.columns = {"alpha", "k", "coefficient", "exponent", "closed_form", "rel_diff", "printed_exponent",
                 "printed_as_written", "note"};
  for (int alpha = 1; alpha <= 4; ++alpha) {
    for (int k = 1; k <= 4; ++k) {
      const double coeff = constants::heisenberg_constant(3, alpha, k) * std::pow(2.0, -k / 3.0);
      const double exponent = constants::heisenberg_exponent(3, alpha, k);
      const auto cell = table2_closed_form(alpha, k);
      doc.add_row({as_int(alpha), as_int(k), coeff, exponent, cell.closed_form,
                   std::abs(coeff - cell.closed_form) / cell.closed_form, cell.printed_exponent,
                   optional_cell(cell.printed_as_written), cell.note});
    }
  }
  return doc;
}

ReportDocument cmd_moments(const MomentsRequest& req, const math::QuadratureSpec& spec) {
  auto doc = base_document("moments");
  add_tolerances(doc, spec);
  for (const auto& w : req.warnings) doc.notes.push_back(w);
  doc.columns = {"space", "label", "d", "N", "quantity", "order", "value", "method", "est_error"};
  for (const auto& [space, rho] : req.densities) {
    const auto row = [&](const std::string& what, const functionals::MomentValue& m) {
      doc.add_row({space, rho.label(), as_int(rho.dimension()), rho.particle_count(), what, m.order, m.value,
                   std::string(functionals::to_string(m.method)), m.est_error});
    };
    for (double a : req.orders) row("moment", functionals::radial_moment(rho, a, spec));
    for (double m : req.entropic) row("entropic", functionals::entropic_moment(rho, m, spec));
    if (req.fisher) row("fisher", functionals::fisher_information(rho, spec));
  }
  return doc;
}

ReportDocument cmd_check(const inequalities::InequalityId& id, const DensityPair& pair, int q,
                         const math::QuadratureSpec& spec) {
  auto doc = base_document("check");
  add_tolerances(doc, spec);
  add_report_columns(doc);
  add_report_row(doc, inequalities::evaluate_strict(id, pair, q, spec));
  return doc;
}

ReportDocument cmd_sweep(const inequalities::InequalityId& id, const std::vector<DensityPair>& fleet, int q,
                         const math::QuadratureSpec& spec) {
  auto doc = base_document("sweep");
  add_tolerances(doc, spec);
  add_report_columns(doc);
  for (const auto& r : inequalities::sweep(id, fleet, q, spec)) add_report_row(doc, r);
  return doc;
}

ReportDocument cmd_oracle(const std::string& mode, int d, double alpha, double k) {
  auto doc = base_document("oracle");
  doc.add_meta("mode", mode);
  doc.columns = {"d", "alpha", "k", "numeric", "closed_form", "discrepancy", "note"};
  const auto add = [&](const varoracle::ExtremalConstant& e) {
    doc.add_row({as_int(e.d), e.alpha, e.k, e.numeric_value, optional_cell(e.closed_form_value),
                 optional_cell(e.discrepancy), e.note});
  };
  if (mode == "F") {
    add(varoracle::extremal_F(d, alpha, k));
  } else if (mode == "G") {
    for (const auto& p : varoracle::probe_negative_branches(d, alpha, k)) {
      std::ostringstream os;
      os << "branch " << varoracle::to_string(p.branch) << ": mass " << (p.mass_finite ? "finite" : "infinite")
         << ", moment " << (p.moment_finite ? "finite" : "infinite");
      doc.notes.push_back(os.str());
    }
    add(varoracle::extremal_G(d, alpha, k));
  } else if (mode == "grid") {
    for (const auto& e : varoracle::oracle_grid(4)) add(e);
  } else {
    throw FormatError("oracle mode must be F, G or grid");
  }
  return doc;
}

ReportDocument cmd_catalog() {
  auto doc = base_document("catalog");
  doc.columns = {"id", "direction", "statement"};
  for (const auto& e : inequalities::catalog()) {
    const inequalities::InequalityId id{e.kind, {}};
    std::string dir(inequalities::to_string(inequalities::direction_of(id)));
    if (e.kind == inequalities::InequalityKind::daubechies) dir = "lhs_ge_rhs (k > 0), lhs_le_rhs (k < 0)";
    doc.add_row({std::string(inequalities::to_string(e.kind)), dir, std::string(e.statement)});
  }
  return doc;
}

void cmd_export(std::ostream& out, const DensityPair& pair, const std::string& space, double r_max, int points) {
  if (space == "position") {
    report::write_tabulated(out, pair.position, space, r_max, points);
  } else if (space == "momentum") {
    report::write_tabulated(out, pair.momentum, space, r_max, points);
  } else {
    throw FormatError("space must be position or momentum");
  }
}

}  // namespace uncrel::cli
