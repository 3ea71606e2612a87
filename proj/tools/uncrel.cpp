// uncrel: constants tables, functionals, uncertainty-relation checks and sweeps.
//
// Exit codes: 0 ok, 2 bad input or file format, 3 parameter-domain or divergence error,
// 4 numerical non-convergence.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uncrel/commands.hpp"
#include "uncrel/errors.hpp"

namespace {

using namespace uncrel;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::format: return 2;
    case ErrorKind::domain:
    case ErrorKind::divergence: return 3;
    case ErrorKind::convergence: return 4;
  }
  return 1;
}

struct Options {
  std::string format = "csv";
  std::string out;
  cli::ModelSpec model;
  std::string range;
  std::string position_file;
  std::string momentum_file;
  std::string file;
  bool real = false;
  std::string ineq;
  double alpha = 2.0;
  double k = 2.0;
  std::string variant = "general";
  std::vector<double> orders;
  std::vector<double> entropic;
  bool fisher = false;
  std::string space = "position";
  std::string mode = "F";
  double r_max = 20.0;
  int points = 400;
};

void add_model_options(CLI::App* sub, Options& o, bool files) {
  sub->add_option("--model", o.model.model, "gaussian | hydrogenic | exponential | ho1d | fleet");
  sub->add_option("--d", o.model.d, "spatial dimension");
  sub->add_option("--a", o.model.a, "Gaussian length scale");
  sub->add_option("--N", o.model.N, "particle count");
  sub->add_option("--Z", o.model.Z, "hydrogenic charge");
  sub->add_option("--lambda", o.model.lambda, "exponential decay rate");
  sub->add_option("--q", o.model.q, "spin multiplicity 2s+1");
  if (files) {
    sub->add_option("--position", o.position_file, "tabulated position density");
    sub->add_option("--momentum", o.momentum_file, "tabulated momentum density");
    sub->add_flag("--real", o.real, "the tabulated pair comes from a real wavefunction");
  }
}

math::QuadratureSpec quadrature_from_env() {
  math::QuadratureSpec spec;
  if (const char* tol = std::getenv("UNCREL_TOL")) {
    try {
      std::size_t used = 0;
      spec.rel_tol = std::stod(tol, &used);
      if (used != std::string(tol).size()) throw std::invalid_argument(tol);
    } catch (const std::exception&) {
      throw FormatError(std::string("UNCREL_TOL is not a number: '") + tol + "'");
    }
    spec.validate();
  }
  return spec;
}

DensityPair resolve_pair(const Options& o, std::vector<std::string>& warnings) {
  if (!o.position_file.empty() || !o.momentum_file.empty()) {
    if (o.position_file.empty() || o.momentum_file.empty()) {
      throw FormatError("pair input needs both --position and --momentum");
    }
    return cli::load_pair(o.position_file, o.momentum_file, o.real, warnings);
  }
  return cli::build_model(o.model);
}

inequalities::InequalityId resolve_id(const Options& o) {
  return {inequalities::parse_inequality(o.ineq), {o.alpha, o.k, constants::parse_fisher_variant(o.variant)}};
}

void emit(const report::ReportDocument& doc, const Options& o) {
  const std::string text = o.format == "json" ? doc.to_json() : doc.to_csv();
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw FormatError("cannot write '" + o.out + "'");
  f << text;
}

void report_error(const Options& o, const std::string& kind, const std::string& message) {
  if (o.format == "json") {
    nlohmann::ordered_json err;
    err["error"]["kind"] = kind;
    err["error"]["message"] = message;
    std::cout << err.dump(2) << '\n';
  } else {
    std::cerr << "uncrel: " << kind << " error: " << message << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Moment, entropic-moment and Fisher-information uncertainty relations"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "write the document here instead of stdout");

  auto* table1 = app.add_subcommand("table1", "B(d,k) grid with the printed values");
  auto* table2 = app.add_subcommand("table2", "d = 3, q = 2 Heisenberg-like coefficients");
  auto* catalog = app.add_subcommand("catalog", "list the inequality ids");

  auto* moments = app.add_subcommand("moments", "radial and entropic moments, Fisher information");
  add_model_options(moments, o, false);
  moments->add_option("--file", o.file, "tabulated density");
  moments->add_option("--orders", o.orders, "radial moment orders")->delimiter(',');
  moments->add_option("--entropic", o.entropic, "entropic moment exponents")->delimiter(',');
  moments->add_flag("--fisher", o.fisher, "also compute the Fisher information");
  moments->add_option("--space", o.space, "position | momentum | both")
      ->check(CLI::IsMember({"position", "momentum", "both"}));

  auto* check = app.add_subcommand("check", "evaluate one inequality on one state");
  auto* sweep = app.add_subcommand("sweep", "evaluate one inequality over a family of states");
  for (auto* sub : {check, sweep}) {
    sub->add_option("inequality", o.ineq, "catalog id (heisenberg = heisenberg_general)")->required();
    add_model_options(sub, o, sub == check);
    sub->add_option("--alpha", o.alpha, "position moment order");
    sub->add_option("--k", o.k, "momentum moment order");
    sub->add_option("--variant", o.variant, "Fisher-product variant");
  }
  sweep->add_option("--n", o.range, "member range lo..hi");

  auto* oracle = app.add_subcommand("oracle", "numerically reconstructed extremal constants");
  oracle->add_option("mode", o.mode, "F, G or grid")->check(CLI::IsMember({"F", "G", "grid"}));
  oracle->add_option("--d", o.model.d, "spatial dimension");
  oracle->add_option("--alpha", o.alpha, "position moment order");
  oracle->add_option("--k", o.k, "momentum order");

  auto* exporter = app.add_subcommand("export", "write a model density in the tabulated format");
  add_model_options(exporter, o, false);
  exporter->add_option("--space", o.space, "position | momentum")->check(CLI::IsMember({"position", "momentum"}));
  exporter->add_option("--r-max", o.r_max, "outer radius of the grid");
  exporter->add_option("--points", o.points, "number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(o, "format", e.what());
    return 2;
  }

  try {
    const auto spec = quadrature_from_env();
    if (*table1) {
      emit(cli::cmd_table1(), o);
    } else if (*table2) {
      emit(cli::cmd_table2(), o);
    } else if (*catalog) {
      emit(cli::cmd_catalog(), o);
    } else if (*moments) {
      cli::MomentsRequest req;
      if (o.orders.empty() && o.entropic.empty() && !o.fisher) o.orders = {0.0, 1.0, 2.0};
      req.orders = o.orders;
      req.entropic = o.entropic;
      req.fisher = o.fisher;
      if (!o.file.empty()) {
        const auto tab = report::read_tabulated_file(o.file);
        auto loaded = densities::load_tabulated(tab.cfg, tab.r, tab.rho);
        if (loaded.warning) req.warnings.push_back(*loaded.warning);
        req.densities.emplace_back(tab.space, loaded.density);
      } else {
        const auto pair = cli::build_model(o.model);
        if (o.space != "momentum") req.densities.emplace_back("position", pair.position);
        if (o.space != "position") req.densities.emplace_back("momentum", pair.momentum);
      }
      emit(cli::cmd_moments(req, spec), o);
    } else if (*check) {
      std::vector<std::string> warnings;
      const auto pair = resolve_pair(o, warnings);
      auto doc = cli::cmd_check(resolve_id(o), pair, o.model.q, spec);
      doc.notes.insert(doc.notes.end(), warnings.begin(), warnings.end());
      emit(doc, o);
    } else if (*sweep) {
      auto model = o.model;
      if (!o.range.empty()) std::tie(model.n_lo, model.n_hi) = cli::parse_range(o.range);
      emit(cli::cmd_sweep(resolve_id(o), cli::build_fleet(model), o.model.q, spec), o);
    } else if (*oracle) {
      emit(cli::cmd_oracle(o.mode, o.model.d, o.alpha, o.k), o);
    } else if (*exporter) {
      const auto pair = cli::build_model(o.model);
      if (o.out.empty()) {
        cli::cmd_export(std::cout, pair, o.space, o.r_max, o.points);
      } else {
        std::ofstream f(o.out);
        if (!f) throw FormatError("cannot write '" + o.out + "'");
        cli::cmd_export(f, pair, o.space, o.r_max, o.points);
      }
    }
  } catch (const Error& e) {
    report_error(o, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  }
  return 0;
}
