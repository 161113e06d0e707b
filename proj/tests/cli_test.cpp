#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = "/tmp/regame_cli_out.txt";
  const std::string err_path = "/tmp/regame_cli_err.txt";
  const std::string cmd =
      std::string(REGAME_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

void write_tmp(const std::string& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("solve prints the equilibrium as JSON") {
  RunResult r = run("solve --theta-g 0 --theta-d 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"u_g\": 0.375") != std::string::npos);
  CHECK(r.out.find("\"u_d\": 0.375") != std::string::npos);

  r = run("solve --theta-g 0 --theta-d 0.45");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"abstained\": false") != std::string::npos);
  CHECK(r.out.find("\"beta1\": 0.45") != std::string::npos);
  CHECK(r.out.find("classification") == std::string::npos);
}

TEST_CASE("config errors exit 2 and name the key") {
  write_tmp("/tmp/regame_bad.json", "{\"grid\": {\"bogus\": 1}}");
  const RunResult r = run("solve --config /tmp/regame_bad.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("bogus") != std::string::npos);
}

TEST_CASE("unknown flags and criteria exit 2") {
  CHECK(run("solve --definitely-not-a-flag").exit_code == 2);
  CHECK(run("bargain --criterion median").exit_code == 2);
  CHECK(run("heatmap --in /tmp/nonexistent.csv --metric entropy --out /tmp/x.svg").exit_code == 2);
}

TEST_CASE("sweep emits the canonical line") {
  write_tmp("/tmp/regame_line.json",
            R"({"grid": {"theta_g": {"min": 0, "max": 0, "step": 1},
                         "theta_d": {"min": 0, "max": 2.5, "step": 0.005}}})");
  const RunResult r = run("sweep --config /tmp/regame_line.json --out /tmp/regame_line.csv");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp("/tmp/regame_line.csv");
  CHECK(count_lines(csv) == 502);  // header + 501 data rows
  CHECK(csv.rfind("theta_g,theta_d,delta,abstain,alpha0,beta0,alpha1,beta1,u_g,u_d,class,"
                  "backfire,mutualism",
                  0) == 0);
}

TEST_CASE("empty grid yields a header-only file with a warning") {
  write_tmp("/tmp/regame_empty.json",
            R"({"grid": {"theta_g": {"min": 1, "max": 0, "step": 1},
                         "theta_d": {"min": 0, "max": 1, "step": 1}}})");
  const RunResult r = run("sweep --config /tmp/regame_empty.json --out /tmp/regame_empty.csv");
  CHECK(r.exit_code == 0);
  CHECK_FALSE(r.err.empty());
  CHECK(count_lines(slurp("/tmp/regame_empty.csv")) == 1);
}

TEST_CASE("sweep output is byte-identical across thread counts") {
  write_tmp("/tmp/regame_small.json",
            R"({"grid": {"theta_g": {"min": 0, "max": 0.4, "step": 0.2},
                         "theta_d": {"min": 0, "max": 1, "step": 0.1}},
                "deltas": [0.3, 0.5, 0.7]})");
  CHECK(run("sweep --config /tmp/regame_small.json --threads 1 --out /tmp/regame_t1.csv")
            .exit_code == 0);
  CHECK(run("sweep --config /tmp/regame_small.json --threads 8 --out /tmp/regame_t8.csv")
            .exit_code == 0);
  CHECK(slurp("/tmp/regame_t1.csv") == slurp("/tmp/regame_t8.csv"));
}

TEST_CASE("bargain reports the canonical mutualism cell") {
  const RunResult r = run("bargain --theta-g 0.5 --theta-d 1.0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"delta_star\": 0.5") != std::string::npos);
  CHECK(r.out.find("\"score\": 0.875") != std::string::npos);
}

TEST_CASE("probe subcommand passes on seeded samples") {
  const RunResult r = run("probe --theorem 2 --trials 5 --seed 42");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"passes\": 5") != std::string::npos);
}

TEST_CASE("oracle check passes on seeded samples") {
  CHECK(run("oracle-check --trials 2 --seed 42").exit_code == 0);
}

TEST_CASE("pareto consumes sweep output and rejects header-only input") {
  write_tmp("/tmp/regame_pareto_cfg.json",
            R"({"grid": {"theta_g": {"min": 0, "max": 0.5, "step": 0.25},
                         "theta_d": {"min": 0, "max": 1, "step": 0.25}},
                "deltas": [0.4, 0.5, 0.6]})");
  CHECK(run("sweep --config /tmp/regame_pareto_cfg.json --out /tmp/regame_pareto_in.csv")
            .exit_code == 0);
  const RunResult r =
      run("pareto --in /tmp/regame_pareto_in.csv --out /tmp/regame_pareto_out.csv");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp("/tmp/regame_pareto_out.csv");
  CHECK(csv.rfind("regime,u_g,u_d,theta_g,theta_d,delta", 0) == 0);
  CHECK(csv.find("both") != std::string::npos);

  write_tmp("/tmp/regame_header_only.csv",
            "theta_g,theta_d,delta,abstain,alpha0,beta0,alpha1,beta1,u_g,u_d,class,backfire,"
            "mutualism\n");
  const RunResult empty = run("pareto --in /tmp/regame_header_only.csv --out /tmp/x.csv");
  CHECK(empty.exit_code == 2);
  CHECK(empty.err.find("no data rows") != std::string::npos);
}

TEST_CASE("heatmap renders cells from a sweep file") {
  const RunResult r =
      run("heatmap --in /tmp/regame_line.csv --metric safety --out /tmp/regame_map.svg");
  CHECK(r.exit_code == 0);
  const std::string svg = slurp("/tmp/regame_map.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("data-value=\"0.45\"") != std::string::npos);
  CHECK(run("heatmap --in /tmp/regame_line.csv --metric class --out /tmp/regame_map2.svg")
            .exit_code == 0);
}

TEST_CASE("missing CSV columns exit 2 naming the column") {
  write_tmp("/tmp/regame_bad_schema.csv", "theta_g,delta\n0,0.5\n");
  const RunResult r = run("pareto --in /tmp/regame_bad_schema.csv --out /tmp/x.csv");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("theta_d") != std::string::npos);
}

TEST_CASE("unwritable output path exits 3") {
  CHECK(run("sweep --out /nonexistent/dir/out.csv").exit_code == 3);
}
