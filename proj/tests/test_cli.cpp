#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with args; stderr goes to err_path when given, else /dev/null.
Run cli(const std::string& args, const std::string& err_path = "/dev/null") {
  const std::string cmd = std::string("'") + TDOM_CLI_PATH + "' " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("tdom_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("compute") {
  auto r = cli("compute --family circular:n=10,d=3");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["gamma_t"]["value"] == 2);
  CHECK(j["gamma_t"]["witness"] == nlohmann::json::array({0, 5}));

  r = cli("compute --family cycle:n=5 --paranoid");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["gamma_t"]["value"] == 3);

  r = cli("compute --family cycle:n=5 --stats");
  CHECK(r.out.find("elapsed_ms") != std::string::npos);

  CHECK(cli("compute --family cycle:n=7").out == cli("compute --family cycle:n=7").out);
}

TEST_CASE("input files and errors") {
  TempDir tmp;
  const auto good = tmp.path / "p4.txt";
  std::ofstream(good) << "# P_4\n4 3\n0 1\n1 2\n2 3\n";
  auto r = cli("compute --format text --input '" + good.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma_t=2") != std::string::npos);

  r = cli("compute --input - < '" + good.string() + "'");
  CHECK(r.code == 0);

  const auto bad = tmp.path / "bad.txt";
  std::ofstream(bad) << "4 2\n0 1\n1 x\n";
  const auto err = tmp.path / "err.txt";
  r = cli("compute --input '" + bad.string() + "'", err.string());
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(slurp(err).find("line 3") != std::string::npos);

  r = cli("compute --input '" + (tmp.path / "missing.txt").string() + "'", err.string());
  CHECK(r.code == 2);
  CHECK_FALSE(slurp(err).empty());

  CHECK(cli("compute").code == 2);
  CHECK(cli("compute --family cycle:n=5 --input x").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("compute --family cube:n=3").code == 2);
}

TEST_CASE("resource limit exit code") {
  CHECK(cli("compute --family random:n=40,p=0.15,seed=3 --node-limit 1").code == 3);
}

TEST_CASE("bounds") {
  auto r = cli("bounds --family cycle:n=5");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  for (const auto& b : j) {
    if (b["bound"] == "diam2_upper") {
      CHECK(b["value"] == 3);
      CHECK(b["tight"] == true);
    }
  }
  j = nlohmann::json::parse(cli("bounds --family cycle:n=5 --no-exact").out);
  for (const auto& b : j) CHECK(b["tight"].is_null());
}

TEST_CASE("family writes an edge list") {
  auto r = cli("family --family path:n=3");
  CHECK(r.code == 0);
  CHECK(r.out == "3 2\n0 1\n1 2\n");
  TempDir tmp;
  const auto out = tmp.path / "g.txt";
  CHECK(cli("family --family star:t=2 --output '" + out.string() + "'").code == 0);
  CHECK(slurp(out) == "3 2\n0 1\n0 2\n");
}

TEST_CASE("verify") {
  auto r = cli("verify --theorem Thm41_Circular2 --scale quick --jobs 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS Thm41_Circular2 instances=84", 0) == 0);
  r = cli("verify --theorem PathCycleFormula --format json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["verdict"] == "PASS");
  CHECK_FALSE(j[0].contains("elapsed_ms"));
  CHECK(cli("verify --theorem Thm99").code == 2);
}

TEST_CASE("sweep") {
  auto r = cli("sweep --family circular:n=6..14,d=3 --columns n,gamma_t");
  CHECK(r.code == 0);
  CHECK(r.out == "n,gamma_t\n6,6\n7,4\n8,3\n9,3\n10,2\n11,2\n12,2\n13,2\n14,2\n");
  CHECK(cli("sweep --family circular:n=6..14,d=3 --jobs 3").out == cli("sweep --family circular:n=6..14,d=3").out);
}

TEST_CASE("config file") {
  TempDir tmp;
  const auto cfg = tmp.path / "tdom.conf";
  std::ofstream(cfg) << "# defaults\nfamily = cycle:n=8\nformat = text\n";
  auto r = cli("--config '" + cfg.string() + "' compute");
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma_t=4") != std::string::npos);
  // Command-line flags override config values.
  r = cli("--config '" + cfg.string() + "' compute --family cycle:n=5");
  CHECK(r.out.find("gamma_t=3") != std::string::npos);
  CHECK(cli("--config /nonexistent.conf compute").code == 2);
}
