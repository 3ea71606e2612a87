#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support.hpp"
#include "uncrel/commands.hpp"
#include "uncrel/constants.hpp"
#include "uncrel/errors.hpp"
#include "uncrel/functionals.hpp"
#include "uncrel/report.hpp"

using namespace uncrel;
using namespace uncrel::report;

namespace {

ReportDocument tiny() {
  ReportDocument doc;
  doc.add_meta("tool", "uncrel");
  doc.columns = {"name", "value", "count", "ok", "empty"};
  doc.add_row({std::string("a,b \"q\""), 1.0 / 3.0, 7LL, true, std::monostate{}});
  doc.add_row({std::string("nan"), std::nan(""), -1LL, false, 2.5e-300});
  doc.notes.push_back("hello");
  return doc;
}

TabulatedFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_tabulated(in);
}

}  // namespace

TEST_CASE("CSV layout: metadata, notes, header, escaped rows, 12 significant digits") {
  const std::string csv = tiny().to_csv();
  CHECK(csv ==
        "# tool=uncrel\n"
        "# note: hello\n"
        "name,value,count,ok,empty\n"
        "\"a,b \"\"q\"\"\",0.333333333333,7,true,\n"
        "nan,nan,-1,false,2.5e-300\n");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-INFINITY) == "-inf");
  ReportDocument bad;
  bad.columns = {"x"};
  CHECK_THROWS_AS(bad.add_row({1.0, 2.0}), FormatError);
}

TEST_CASE("JSON layout: ordered keys, rows keyed by column, NaN as null") {
  const auto j = nlohmann::ordered_json::parse(tiny().to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"metadata", "columns", "rows", "notes"});
  CHECK(j["metadata"]["tool"] == "uncrel");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["name"] == "a,b \"q\"");
  CHECK(j["rows"][0]["value"].get<double>() == 0.333333333333);
  CHECK(j["rows"][0]["count"] == 7);
  CHECK(j["rows"][0]["ok"] == true);
  CHECK(j["rows"][0]["empty"].is_null());
  CHECK(j["rows"][1]["value"].is_null());
  CHECK(j["notes"][0] == "hello");
}

TEST_CASE("command documents are deterministic") {
  CHECK(cli::cmd_table1().to_csv() == cli::cmd_table1().to_csv());
  CHECK(cli::cmd_table2().to_json() == cli::cmd_table2().to_json());
  const inequalities::InequalityId id{inequalities::InequalityKind::heisenberg_general, {1.0, 1.0}};
  const auto fleet = cli::standard_fleet(2);
  CHECK(cli::cmd_sweep(id, fleet, 2, {}).to_csv() == cli::cmd_sweep(id, fleet, 2, {}).to_csv());
  CHECK(cli::cmd_oracle("G", 3, 2.0, -1.0).to_json() == cli::cmd_oracle("G", 3, 2.0, -1.0).to_json());
}

TEST_CASE("table documents: Table I and Table II with the logged discrepancies") {
  const auto t1 = cli::cmd_table1();
  REQUIRE(t1.rows.size() == 16);
  for (const auto& row : t1.rows) CHECK(std::get<double>(row[4]) <= 1e-5);

  for (int alpha = 1; alpha <= 4; ++alpha) {
    for (int k = 1; k <= 4; ++k) {
      INFO("alpha=" << alpha << " k=" << k);
      const auto cell = cli::table2_closed_form(alpha, k);
      CHECK_REL(constants::heisenberg_rhs(3, alpha, k, 1.0, 2), cell.closed_form, 1e-10);
    }
  }
  const auto c42 = cli::table2_closed_form(4, 2);
  CHECK(c42.printed_exponent == 13.0 / 16.0);
  CHECK(constants::heisenberg_exponent(3, 4, 2) == doctest::Approx(13.0 / 6.0));
  CHECK(c42.note.find("13/16") != std::string::npos);
  const auto c24 = cli::table2_closed_form(2, 4);
  REQUIRE(c24.printed_as_written);
  CHECK(std::abs(*c24.printed_as_written - c24.closed_form) > 1e-2);
  CHECK_THROWS_AS(cli::table2_closed_form(5, 1), DomainError);
}

TEST_CASE("tabulated format: parsing and rejection") {
  const auto ok = parse("# d=3\n# N=2\n# space=momentum\n# comment line\nr,rho\n0,1\n0.5, 0.25\n1,0.1\n");
  CHECK(ok.cfg.d == 3);
  CHECK(ok.cfg.N == 2.0);
  CHECK(ok.space == "momentum");
  CHECK(ok.r == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(ok.rho[1] == 0.25);
  CHECK(parse("#d=1\n#N=1\nr,rho\n0,1\n").space == "position");

  CHECK_THROWS_AS(parse("# N=1\nr,rho\n0,1\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=3\nr,rho\n0,1\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=2.5\n# N=1\nr,rho\n0,1\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=3\n# N=1\n# space=phase\nr,rho\n0,1\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=3\n# N=1\nx,y\n0,1\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=3\n# N=1\nr,rho\n0,1,2\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=3\n# N=1\nr,rho\n0,abc\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=3\n# N=1\nr,rho\n0,1\n0,2\n"), FormatError);
  CHECK_THROWS_AS(parse("# d=3\n# N=1\n"), FormatError);
  CHECK_THROWS_AS(read_tabulated_file("/nonexistent/rho.csv"), FormatError);
}

TEST_CASE("round-trip: exported densities reproduce the analytic moments") {
  struct Case {
    DensityPair pair;
    double r_max;
  };
  const Case cases[] = {{densities::hydrogenic3d(1.0), 40.0},
                        {densities::gaussian_pair(2, 1.0, 3.0), 12.0},
                        {densities::harmonic_fermions_1d(4, 2), 10.0}};
  for (const auto& c : cases) {
    std::ostringstream out;
    write_tabulated(out, c.pair.position, "position", c.r_max, 4001);
    std::istringstream in(out.str());
    const auto tab = read_tabulated(in);
    CHECK(tab.cfg.d == c.pair.dimension());
    CHECK(tab.cfg.N == c.pair.particle_count());
    const auto loaded = densities::load_tabulated(tab.cfg, tab.r, tab.rho);
    CHECK_FALSE(loaded.warning);
    for (double order : {1.0, 2.0}) {
      INFO(c.pair.label << " order " << order);
      const double exact = functionals::radial_moment(c.pair.position, order).value;
      CHECK(std::abs(functionals::radial_moment(loaded.density, order).value - exact) <= 1e-5 * std::max(1.0, exact));
    }
  }
}

TEST_CASE("range and model parsing") {
  CHECK(cli::parse_range("1..20") == std::pair{1, 20});
  CHECK(cli::parse_range("7") == std::pair{7, 7});
  CHECK_THROWS_AS(cli::parse_range("5..2"), FormatError);
  CHECK_THROWS_AS(cli::parse_range("a..b"), FormatError);
  cli::ModelSpec spec;
  spec.model = "ho1d";
  spec.N = 2.5;
  CHECK_THROWS_AS(cli::build_model(spec), DomainError);
  spec.model = "bogus";
  CHECK_THROWS_AS(cli::build_model(spec), FormatError);
  spec.model = "hydrogenic";
  spec.n_lo = 1;
  spec.n_hi = 3;
  const auto fleet = cli::build_fleet(spec);
  REQUIRE(fleet.size() == 3);
  CHECK(fleet[2].label.find("Z=3") != std::string::npos);
  CHECK(cli::standard_fleet(1).size() == 32);
}
