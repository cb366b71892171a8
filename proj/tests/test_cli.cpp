#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using nlohmann::json;
using namespace tvdlab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tvdlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(json::parse(line));
  }
  return lines;
}

const std::string kPlateaus = std::string(TVDLAB_FIXTURES) + "/plateaus.csv";

}  // namespace

TEST_CASE("riemann subcommand") {
  const Result r = cli({"riemann", "--gamma", "3", "--left", "1,0", "--right", "1,0"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["b"] == 1.0);
  CHECK(j["f"] == 1.0);
  CHECK(j["vacuum"] == false);
  CHECK(j["meta"]["version"].is_string());
  CHECK(j["meta"]["config"]["gamma"] == 3.0);
  CHECK(j["meta"].contains("wall_time_s"));

  const Result v = cli({"riemann", "--gamma", "1.4", "--left", "1,-7", "--right", "1,7"});
  REQUIRE(v.code == kExitOk);
  const json jv = json::parse(v.out);
  CHECK(jv["vacuum"] == true);
  CHECK(jv["b"].is_null());
}

TEST_CASE("interact subcommand") {
  const Result r = cli({"interact", "--gamma", "3", "--kind", "IIa", "--q1", "2", "--q2", "2"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK_THAT(j["B"].get<double>(), WithinAbs(3.725, 5e-3));
  CHECK_THAT(j["F"].get<double>(), WithinAbs(1.0738, 1e-4));
  CHECK(j["outgoing"] == "S<-R->");
  CHECK(j["realization"]["far_left"]["xi"] == 1.0);

  const Result f = cli({"interact", "--gamma", "3", "--kind", "IIa", "--q1", "2", "--q2", "2", "--field",
                        "split:theta=v;psi=v"});
  REQUIRE(f.code == kExitOk);
  const json jf = json::parse(f.out);
  CHECK_THAT(jf["delta_var"].get<double>(),
             WithinAbs(jf["var_after"].get<double>() - jf["var_before"].get<double>(), 1e-15));

  // Head-on rarefactions pulling apart faster than the vacuum limit.
  const Result vac = cli({"interact", "--gamma", "3", "--kind", "Ia", "--q1", "0.01", "--q2", "100"});
  CHECK(vac.code == kExitVacuum);
  CHECK(cli({"interact", "--gamma", "3", "--kind", "IId", "--q1", "2", "--q2", "2"}).code == kExitUsage);
  CHECK(cli({"interact", "--gamma", "3", "--kind", "IIa", "--q1", "0.5", "--q2", "2"}).code == kExitUsage);
}

TEST_CASE("numbers round-trip through the json output") {
  const Result r = cli({"interact", "--gamma", "1.4", "--kind", "Ic", "--q1", "1.7", "--q2", "0.3"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  const double b = j["B"].get<double>();
  std::ostringstream again;
  again << json(b).dump();
  CHECK(json::parse(again.str()).get<double>() == b);
  CHECK(j["B"].get<double>() * j["F"].get<double>() > 0.0);
}

TEST_CASE("phi subcommand writes csv") {
  const Result r = cli({"phi", "--gamma", "3", "--family", "b", "--from", "0.5", "--to", "2", "--points", "3"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string meta, header, row;
  std::getline(in, meta);
  std::getline(in, header);
  CHECK(meta.rfind("# ", 0) == 0);
  CHECK(json::parse(meta.substr(2))["meta"]["command"] == "phi");
  CHECK(header == "x,phi,dphi");
  std::vector<std::string> rows;
  while (std::getline(in, row)) rows.push_back(row);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].rfind("0.5,", 0) == 0);
  CHECK(rows[2].rfind("2,1.87082869338697", 0) == 0);
  CHECK(cli({"phi", "--gamma", "3", "--family", "q", "--from", "0.5", "--to", "2"}).code == kExitUsage);
}

TEST_CASE("tvd-expand subcommand") {
  const Result r = cli({"tvd-expand", "--gamma", "3", "--field", "raw:r*s", "--dr", "1e-3", "--ds", "1e-3",
                        "--halvings", "2"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["sign_case"] == "iii");
  CHECK(j["coefficients"]["B"] == 1.0);
  REQUIRE(j["rows"].size() == 3);
  for (const auto& row : j["rows"]) {
    CHECK_THAT(row["ratio"].get<double>(), WithinAbs(1.0, 0.05));
    CHECK(row["flipped_measured"].get<double>() * row["measured"].get<double>() < 0.0);
  }
  // Split fields have no mixed partial, so case iii has nothing to compare against.
  CHECK(cli({"tvd-expand", "--gamma", "3", "--field", "split:theta=v;psi=0*v"}).code == kExitUsage);
}

TEST_CASE("counterexample subcommand") {
  const Result r = cli({"counterexample", "--gamma", "3", "--case", "3", "--epsilon", "0.5"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["delta_var"].get<double>() > 0.0);
  CHECK(j["scan_ratio"].get<double>() > 8.0);
  CHECK(j["scan_ratio"].get<double>() < 11.0);
  CHECK(j["outgoing"] == "S<-S->");

  const Result c1 = cli({"counterexample", "--gamma", "3", "--case", "1", "--threads", "2"});
  REQUIRE(c1.code == kExitOk);
  const json j1 = json::parse(c1.out);
  CHECK(j1["delta_var"].get<double>() > 0.0);
  CHECK(j1["delta_var"].get<double>() >= j1["lower_bound"].get<double>() - 1e-10);

  const Result c2 = cli({"counterexample", "--gamma", "2", "--case", "2"});
  REQUIRE(c2.code == kExitOk);
  CHECK(json::parse(c2.out)["delta_var"].get<double>() > 0.0);

  CHECK(cli({"counterexample", "--gamma", "3", "--case", "1", "--M", "0.5", "--delta", "0.9"}).code ==
        kExitUsage);
  CHECK(cli({"counterexample", "--gamma", "3", "--case", "4"}).code == kExitUsage);
  // No far-left state fits inside a zero-budget shrink.
  CHECK(cli({"counterexample", "--gamma", "3", "--case", "1", "--max-halvings", "0", "--lo", "-1e-3",
             "--hi", "1e-3"})
            .code == kExitNumerical);
}

TEST_CASE("glimm subcommand emits json lines") {
  const Result r = cli({"glimm", "--gamma", "1.4", "--ic", kPlateaus, "--cells", "100", "--tmax", "0.01",
                        "--final", "--every", "2"});
  REQUIRE(r.code == kExitOk);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() >= 4);
  CHECK(lines.front().contains("meta"));
  CHECK(lines.back().contains("meta"));
  CHECK(lines.back()["meta"].contains("wall_time_s"));
  CHECK(lines.front()["meta"]["config"]["seq"] == "vdc");
  const json& final = lines[lines.size() - 2]["final"];
  CHECK(final["xi"].size() == 100);
  CHECK(final["t"] == 0.01);
  const json& last_step = lines[lines.size() - 3];
  CHECK(last_step["t"] == 0.01);
  CHECK(lines[1]["step"] == 0);
  CHECK(lines[2]["step"] == 2);
  for (std::size_t i = 1; i + 2 < lines.size(); ++i) CHECK(lines[i]["L"].get<double>() >= 0.0);

  // Same flags, same bytes apart from the wall-clock field.
  const Result again = cli({"glimm", "--gamma", "1.4", "--ic", kPlateaus, "--cells", "100", "--tmax", "0.01",
                            "--final", "--every", "2"});
  auto strip = [](std::vector<json> v) {
    v.front()["meta"].erase("wall_time_s");
    v.back()["meta"].erase("wall_time_s");
    return v;
  };
  CHECK(strip(json_lines(again.out)) == strip(lines));
}

TEST_CASE("glimm errors map to exit codes") {
  const std::string path = "tvdlab_test_vacuum.csv";
  {
    std::ofstream f(path);
    f << "X,tau,u\n0,1,-7\n0.5,1,7\n";
  }
  CHECK(cli({"glimm", "--gamma", "1.4", "--ic", path, "--cells", "10", "--tmax", "1"}).code == kExitVacuum);
  CHECK(cli({"glimm", "--gamma", "1.4", "--ic", kPlateaus, "--cells", "100", "--tmax", "1", "--max-steps",
             "3"})
            .code == kExitNumerical);
  CHECK(cli({"glimm", "--gamma", "1.4", "--ic", "no_such_file.csv", "--tmax", "1"}).code == kExitUsage);
  CHECK(cli({"glimm", "--gamma", "1.4", "--ic", kPlateaus, "--tmax", "1", "--seq", "sobol"}).code == kExitUsage);
  std::remove(path.c_str());
}

TEST_CASE("argument errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"bogus"}).code == kExitUsage);
  CHECK(cli({"riemann", "--left", "1,0", "--right", "1,0"}).code == kExitUsage);
  CHECK(cli({"riemann", "--gamma", "1", "--left", "1,0", "--right", "1,0"}).code == kExitUsage);
  CHECK(cli({"riemann", "--gamma", "3", "--left", "1", "--right", "1,0"}).code == kExitUsage);
  CHECK(cli({"riemann", "--gamma", "3", "--left", "-1,0", "--right", "1,0"}).code == kExitUsage);
  const Result h = cli({"--help"});
  CHECK(h.code == kExitOk);
  const Result v = cli({"--version"});
  CHECK(v.code == kExitOk);
}

TEST_CASE("output flag writes a file") {
  const std::string path = "tvdlab_test_out.json";
  const Result r = cli({"-o", path, "riemann", "--gamma", "2", "--left", "1,0", "--right", "2,0"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  CHECK(j["b"].get<double>() > 0.0);
  std::remove(path.c_str());
}
