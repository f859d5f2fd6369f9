#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eqknot/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "eqknot");
  std::ostringstream out, err;
  const int code = eqknot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("cli alexander") {
  const auto r = run({"alexander", "figure_eight"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alexander: t - 3 + t^-1") != std::string::npos);
  CHECK(r.out.find("grk: 1") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"alexander", "figure_eight", "--json"}).out);
  CHECK(j["alexander"] == "t - 3 + t^-1");
  CHECK(j["grk"] == 1);
}

TEST_CASE("cli genus bound on a summed file") {
  const std::string path = temp_file("eqknot_cli_sum4.knot");
  REQUIRE(run({"sum", "nine46", "nine46", "nine46", "nine46", "-o", path}).code == 0);
  const auto r = run({"genus-bound", path, "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound_rational"] == "1");
  CHECK(j["bound_integer"] == "1");
  CHECK(j["grk"] == 4);
  CHECK(j["k_upper"] == 0);
  CHECK(j["seed"] == 0);
  CHECK(j["certificate"]["verdict"] == "CERTIFIED_K0");
  CHECK(j.dump() == nlohmann::json::parse(j.dump()).dump());
}

TEST_CASE("cli output is deterministic and batch matches sequential") {
  const std::vector<std::string> refs{"nine46", "swap_double:trefoil", "genus_one_slice:m=2,l=3,c=1/2", "stevedore"};
  std::vector<std::string> args{"obstruct", "--json", "--seed", "5"};
  args.insert(args.end(), refs.begin(), refs.end());
  const auto batch = run(args);
  REQUIRE(batch.code == 0);
  CHECK(run(args).out == batch.out);
  const auto all = nlohmann::ordered_json::parse(batch.out);
  REQUIRE(all.size() == refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto single = nlohmann::ordered_json::parse(run({"obstruct", refs[i], "--json", "--seed", "5"}).out);
    CHECK(single == all[i]);
  }
}

TEST_CASE("cli pair and tau") {
  const auto p = run({"pair", "nine46", "--x", "1, 0", "--y", "1, 0", "--json"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["value"] == "0");
  const auto t = run({"tau", "nine46", "--x", "1, t"});
  CHECK(t.code == 0);
  CHECK(t.out == "[t^-1, 1]\n");
  CHECK(run({"pair", "nine46", "--x", "1", "--y", "1, 0"}).code == 2);
  CHECK(run({"pair", "nine46", "--x", "1, t^", "--y", "1, 0"}).code == 2);
}

TEST_CASE("cli verify and errors") {
  CHECK(run({"verify", "nine46"}).code == 0);
  const std::string bad = temp_file("eqknot_cli_corrupt.knot");
  std::ofstream(bad) << "schema=1\nname=k\nseifert=0,2;1,0\ninvolution=1, 0; 0, 1\n";
  const auto r = run({"verify", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("tau_well_defined") != std::string::npos);
  const std::string broken = temp_file("eqknot_cli_broken.knot");
  std::ofstream(broken) << "schema=1\nname=k\nseifert=0,2;1,0\ninvolution=swap_halves\ncolour=red\n";
  const auto b = run({"alexander", broken});
  CHECK(b.code == 2);
  CHECK(b.err.find("line 5") != std::string::npos);
  CHECK(run({"alexander", "no_such_knot"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"genus-bound", "nine46", "--k-upper", "7"}).code == 2);
  CHECK(run({"obstruct", "nine46", "--quiet"}).out.empty());
}

TEST_CASE("cli amphichiral and catalog") {
  const auto j = nlohmann::json::parse(run({"amphichiral", "--a", "3", "--n", "2", "--json"}).out);
  CHECK(j["verdict"] == "NOT_EQUIVARIANTLY_SLICE");
  CHECK(j["branch"] == "even");
  CHECK(run({"amphichiral", "--a", "0", "--n", "2"}).code == 2);
  const auto list = nlohmann::json::parse(run({"catalog", "list", "--json"}).out);
  CHECK(list.size() == 10);
  const auto show = run({"catalog", "show", "nine46"});
  CHECK(show.code == 0);
  CHECK(show.out.find("seifert=0,2;1,0") != std::string::npos);
}
