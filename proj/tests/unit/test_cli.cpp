#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "invdiff_cli/cli.hpp"
#include "invdiff/setup_file.hpp"

using invdiff::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* file) { return std::string(INVDIFF_TEST_DATA_DIR) + "/" + file; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("invariants on the horocycle") {
  Run r = run({"--setup", "sl2r_horocycle", "invariants", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dimension: 1\n"));
  CHECK(contains(r.out, "  - H^2\n"));
  CHECK(contains(r.out, "connected-H"));
}

TEST_CASE("reductive") {
  Run r = run({"--setup", "sl2r_horocycle", "reductive"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "reductive: no"));
  CHECK(contains(r.out, "certificate: "));
  Run s = run({"--setup", "so3_sphere", "reductive"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "reductive: yes"));
}

TEST_CASE("input errors exit with 2") {
  Run bad = run({"--setup", data("corrupted_sl2.json"), "check"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "invalid-structure"));
  CHECK(contains(bad.err, "(H,E,F)"));
  CHECK(run({"--setup", "sl2r_horocycle", "frobnicate"}).code == 2);
  CHECK(run({"--setup", "sl2r_horocycle", "invariants"}).code == 2);
  CHECK(run({"invariants", "--degree", "1"}).code == 2);
  CHECK(run({"--setup", "sl2r_horocycle", "normalize", "H + * E"}).code == 2);
  CHECK(run({"--setup", "sl2r_horocycle", "normalize", "Q*W"}).code == 2);
  CHECK(run({"--setup", "sl2r_horocycle", "invariants", "--degree", "-1"}).code == 2);
  CHECK(run({"--setup", "sl2r_horocycle", "generation", "--degree", "2", "--gen", "K"}).code == 2);
  CHECK(run({"--setup", "sl2r_horocycle", "symmetrize", "H^7"}).code == 2);
}

TEST_CASE("every preset passes check") {
  for (const auto& name : invdiff::preset_names()) {
    CAPTURE(name);
    Run r = run({"--setup", name, "check"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "result: PASS"));
  }
}

TEST_CASE("auto complement is reported") {
  Run r = run({"--setup", data("sl2_no_m.json"), "check"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "m_selection: auto-selected"));
}

TEST_CASE("element commands") {
  Run n = run({"--setup", "sl2r_horocycle", "normalize", "E*F"});
  CHECK(n.code == 0);
  CHECK(contains(n.out, "normal_form: -1*K^1*E^1 + 1*E^2 + 1*H^1\n"));
  Run p = run({"--setup", "sl2r_horocycle", "project", "1/2*H^2 + E*F + F*E"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "projection: 1/2*H^2 + 1*H^1\n"));
  CHECK(contains(p.out, "in_ideal: no"));
  Run s = run({"--setup", "sl2r_horocycle", "symmetrize", "H*K"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "lambda: "));
  CHECK(run({"--setup", "sl2r_horocycle", "dmod", "H"}).code == 0);
  CHECK(run({"--setup", "sl2r_horocycle", "dmod", "K"}).code == 1);
}

TEST_CASE("commutativity, generation and laplace commands") {
  CHECK(run({"--setup", "sl2r_horocycle", "decompose", "--degree", "3"}).code == 0);
  CHECK(run({"--setup", "sl2r_horocycle", "commutativity", "--degree", "4"}).code == 0);
  CHECK(run({"--setup", "sl2r_horocycle", "generation", "--degree", "4", "--gen", "H"}).code == 0);
  CHECK(run({"--setup", "sl2r_horocycle", "generation", "--degree", "3", "--gen", "H^2"}).code == 1);
  CHECK(run({"--setup", "so3_sphere", "laplace", "--signature", "1,1", "--degree", "4"}).code == 0);
  CHECK(run({"--setup", "sl2r_hyperbolic", "laplace", "--signature", "1,1", "--degree", "2"}).code == 0);
}

TEST_CASE("json reports") {
  Run r = run({"--setup", "sl2r_horocycle", "--json", "invariants", "--degree", "3"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["dimension"] == 1);
  CHECK(doc["basis"][0] == "H^3");
  CHECK(doc["exit_code"] == 0);
}

TEST_CASE("reports are deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--setup", "sl3r_horocycle", "invariants", "--degree", "2"},
        std::vector<std::string>{"--setup", "sl2c_real_GN", "reductive"},
        std::vector<std::string>{"--setup", "so3_sphere", "decompose", "--degree", "2"}}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("presets command") {
  Run r = run({"presets"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sl3r_horocycle"));
}
