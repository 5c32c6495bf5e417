#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

using lagc::cli::JobSpec;
using lagc::cli::RunResult;
using lagc::cli::run;

namespace {

namespace fs = std::filesystem;

class Workdir {
 public:
  Workdir() : dir_(fs::temp_directory_path() / ("lagc-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

 private:
  fs::path dir_;
};

JobSpec job(std::string command, std::vector<std::string> inputs = {}) {
  JobSpec j;
  j.command = std::move(command);
  j.inputs = std::move(inputs);
  return j;
}

int invoke(std::vector<std::string> args) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return lagc::cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("el / diff / canon golden output") {
  Workdir wd;
  const auto kinetic = wd.write("k.txt", "sig 1|0 1|0\n1/2*x1[1]^2\n");

  RunResult r = run(job("el", {kinetic}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-x1[1 1]\n");

  r = run(job("diff", {kinetic}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-x1[2]*x1[1 1]\n");

  const auto messy = wd.write("m.txt", "sig 0|2 1|0\nth2*th1 + 2*th1*th2\nx1\n");
  r = run(job("canon", {messy}));
  CHECK(r.exit_code == 2);  // x1 does not exist in 0|2

  const auto ok = wd.write("c.txt", "sig 0|2 1|0\nth2*th1 + 2*th1*th2\n(th1[1])^1*th1\n");
  r = run(job("canon", {ok}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "th1*th2\n-th1*th1[1]\n");
}

TEST_CASE("signature override") {
  Workdir wd;
  const auto bare = wd.write("b.txt", "1/2*x1[1]^2\n");
  JobSpec j = job("el", {bare});
  CHECK(run(j).exit_code == 2);
  j.sig = lagc::Signature(1, 0, 1, 0);
  CHECK(run(j).output == "-x1[1 1]\n");
}

TEST_CASE("helmholtz exit codes") {
  Workdir wd;
  RunResult r = run(job("helmholtz", {wd.write("h.txt", "sig 1|0 1|0\nx1[1]\n")}));
  CHECK(r.exit_code == 1);
  CHECK(r.output == "-2*x1[3]*x1[1 2]\n");
  r = run(job("helmholtz", {wd.write("v.txt", "sig 1|0 1|0\n-x1[1 1]\n")}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n");
}

TEST_CASE("divergence / stokes / pullback-check") {
  Workdir wd;
  const auto kinetic = wd.write("k.txt", "sig 1|0 1|0\n1/2*x1[1]^2\n");
  RunResult r = run(job("divergence", {kinetic}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "h1 = -x1[1]*x1[2]\nresidual = 0\n");

  const auto hom = wd.write("h.txt", "sig 1|0 1|0\nhomotopy\nx1 = t1 + t2*(t1*(1 - t1))^2\n");
  r = run(job("stokes", {kinetic, hom}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "lhs = 1/105\nrhs = 1/105\nPASS\n");

  const auto order2 = wd.write("o.txt", "sig 1|0 1|0\n1/2*x1[1 1]^2\n");
  r = run(job("stokes", {order2, hom}));
  CHECK(r.exit_code == 2);
  CHECK(r.error.find("boundary-flat") != std::string::npos);

  const auto change = wd.write("c.txt", "sig 1|0 1|0\nchange\nx1 = x1^3 + x1\n");
  r = run(job("pullback-check", {kinetic, change}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "L1 covector PASS naturality PASS\n");
}

TEST_CASE("derham-check and cohomology") {
  Workdir wd;
  RunResult r = run(job("derham-check", {wd.write("f.txt", "sig 2|0 0|0\nform\n2 : x1\n")}));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "L = x1*x2[1]\ndL = -x1[1]*x2[2] + x1[2]*x2[1]\nresidual = 0\n");

  JobSpec sweep = job("derham-check");
  sweep.n = 2;
  sweep.degree = 1;
  r = run(sweep);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "bridge n=2 degree<=1 forms=12 nonzero=0 PASS\n");

  JobSpec coh = job("cohomology");
  coh.n = 2;
  coh.degree = 2;
  r = run(coh);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "H0 1\nH1 0\nH2 0\n");
  coh.n = 7;
  CHECK(run(coh).exit_code == 2);
}

TEST_CASE("d2check corpus is deterministic") {
  JobSpec j = job("d2check");
  j.seed = 7;
  j.count = 10;
  j.n = 2;
  const RunResult a = run(j);
  const RunResult b = run(j);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output ==
        "config      order  count  nonzero  status\n"
        "2|0 1|0     1      10     0        PASS\n");
}

TEST_CASE("input errors") {
  Workdir wd;
  const auto bad = wd.write("bad.txt", "sig 1|0 1|0\nx1[1\n");
  RunResult r = run(job("canon", {bad}));
  CHECK(r.exit_code == 2);
  CHECK(r.error.rfind(bad + ":2:5:", 0) == 0);
  CHECK(r.error.find("expected ']'") != std::string::npos);

  CHECK(run(job("el", {wd.path("missing.txt").string()})).exit_code == 2);
  CHECK(run(job("el", {})).exit_code == 2);
  CHECK(run(job("frobnicate", {bad})).exit_code == 2);
  CHECK(run(job("el", {wd.write("t.txt", "sig 1|0 1|0\nt1*x1\n")})).exit_code == 2);
}

TEST_CASE("json reports") {
  Workdir wd;
  JobSpec j = job("el", {wd.write("k.txt", "sig 2|0 1|0\nx1*x2[1]\n")});
  j.json = true;
  const RunResult r = run(j);
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["command"] == "el");
  CHECK(doc["status"] == "PASS");
  CHECK(doc["signature"] == "2|0 1|0");
  CHECK(doc["results"][0]["variational_derivative"] == nlohmann::json::array({"x2[1]", "-x1[1]"}));

  JobSpec h = job("helmholtz", {wd.write("h.txt", "sig 1|0 1|0\nx1[1]\n")});
  h.json = true;
  const auto hdoc = nlohmann::json::parse(run(h).output);
  CHECK(hdoc["status"] == "FAIL");
  CHECK(hdoc["obstruction"] == "-2*x1[3]*x1[1 2]");
}

TEST_CASE("main_entry: argv parsing and --out") {
  Workdir wd;
  const auto kinetic = wd.write("k.txt", "1/2*x1[1]^2\n");
  const auto out = wd.path("report.txt").string();
  CHECK(invoke({"lagc", "el", kinetic, "--sig", "1|0 1|0", "--out", out}) == 0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "-x1[1 1]\n");

  CHECK(invoke({"lagc", "el", kinetic, "--sig", "nonsense"}) == 2);
  CHECK(invoke({"lagc", "no-such-command"}) == 2);
}
