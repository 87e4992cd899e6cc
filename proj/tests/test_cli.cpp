#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "cubemax/catalog.hpp"
#include "cubemax/constructions.hpp"
#include "cubemax/matrix_io.hpp"

namespace fs = std::filesystem;
using namespace cubemax;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "cubemax");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::current_path() / "cli_scratch";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("eval of an exported catalog entry") {
  const auto path = scratch("n2.json");
  const auto exported = call({"catalog", "--export", "n2", path.string(), "--format", "json"});
  REQUIRE(exported.code == 0);
  const auto r = call({"eval", path.string(), "--exact", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["beta"]["value"].get<double>() - std::sqrt(2.0)) < 1e-12);
  const auto text = call({"eval", path.string()});
  CHECK(text.out.find("beta         1.41421356") != std::string::npos);
  CHECK(text.out.find("closed_form  sqrt(2)") != std::string::npos);
}

TEST_CASE("eval of the identity") {
  const auto path = scratch("id6.txt");
  write_matrix_file(path, {identity_matrix(6), std::nullopt, std::nullopt}, MatrixFormat::Text);
  for (const char* strategy : {"naive", "gray"}) {
    const auto r = call({"eval", path.string(), "--strategy", strategy, "--halving", "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("beta         1\n") != std::string::npos);
  }
}

TEST_CASE("Monte Carlo eval is byte reproducible") {
  const auto path = scratch("rs12.txt");
  write_matrix_file(path, {random_sign_matrix(12, 3), std::nullopt, std::nullopt}, MatrixFormat::Text);
  const auto a = call({"eval", path.string(), "--mc", "1000000", "--seed", "7"});
  const auto b = call({"eval", path.string(), "--mc", "1000000", "--seed", "7", "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("method       MonteCarlo") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto bad = scratch("bad.txt");
  std::ofstream(bad) << "1 2\n3\n";
  CHECK(call({"eval", bad.string()}).code == 2);
  CHECK(call({"eval", scratch("missing.txt").string()}).code == 2);
  CHECK(call({"eval"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"eval", bad.string(), "--strategy", "fast"}).code == 2);
  CHECK(call({}).code == 2);

  const auto big = scratch("id25.txt");
  write_matrix_file(big, {identity_matrix(25), std::nullopt, std::nullopt}, MatrixFormat::Text);
  CHECK(call({"eval", big.string()}).code == 3);
  CHECK(call({"eval", big.string(), "--mc", "1000"}).code == 0);

  CHECK(call({"catalog", "--export", "n11_x", scratch("x.txt").string()}).code == 5);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--version"}).code == 0);
}

TEST_CASE("catalog listing") {
  const auto r = call({"catalog", "--list"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) rows += !line.empty();
  CHECK(rows >= 13);
  const auto j = nlohmann::json::parse(call({"catalog", "--list", "--json"}).out);
  CHECK(j["entries"].size() == catalog_names().size());
  for (const auto& e : j["entries"]) CHECK_FALSE(e["citation"].get<std::string>().empty());
}

TEST_CASE("bounds CSV") {
  const auto r = call({"bounds", "--grid", "default"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,t,binomial_exact,hoeffding,gaussian_lower");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(fields, cell, ',')) v.push_back(std::stod(cell));
    REQUIRE(v.size() == 5);
    CHECK(v[2] <= v[3]);
    ++rows;
  }
  CHECK(rows == 72);
  const auto anti = call({"bounds", "--grid", "anticoncentration", "--n", "64", "256", "--epsilon", "0.5"});
  CHECK(anti.code == 0);
  CHECK(anti.out.rfind("n,epsilon,", 0) == 0);
}

TEST_CASE("table") {
  const auto r = call({"table", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_ok"].get<bool>());
  CHECK(j["rows"].size() == 7);
  CHECK(j["rows"][6]["beta"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(j["rows"][3]["beta"].get<double>() == doctest::Approx(1.79903811).epsilon(1e-8));
  const auto text = call({"table"});
  CHECK(text.out.find("MISMATCH") == std::string::npos);
  CHECK(text.out.find("2.00000000") != std::string::npos);
}

TEST_CASE("search writes reproducible artifacts") {
  const fs::path a = scratch("search_a"), b = scratch("search_b");
  fs::remove_all(a);
  fs::remove_all(b);
  const auto ra = call({"search", "--n", "2", "--restarts", "5", "--seed", "3", "--out", a.string()});
  const auto rb = call({"search", "--n", "2", "--restarts", "5", "--seed", "3", "--out", b.string(), "--threads", "2"});
  REQUIRE(ra.code == 0);
  REQUIRE(rb.code == 0);
  for (const char* f : {"best_matrix.txt", "best_matrix.json", "report.json", "trace.csv", "manifest.json"}) {
    CHECK(fs::exists(a / f));
  }
  CHECK(slurp(a / "best_matrix.txt") == slurp(b / "best_matrix.txt"));
  CHECK(slurp(a / "trace.csv") == slurp(b / "trace.csv"));
  const auto report = nlohmann::json::parse(slurp(a / "report.json"));
  CHECK(std::abs(report["beta"]["value"].get<double>() - std::sqrt(2.0)) < 1e-6);
  const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
  CHECK(manifest["command"].get<std::string>().find("search --n 2 --restarts 5 --seed 3") != std::string::npos);
  CHECK(manifest.contains("version"));
  CHECK(slurp(a / "trace.csv").rfind("evaluation,beta\n", 0) == 0);
  const auto doc = read_matrix_file(a / "best_matrix.json");
  CHECK(doc.matrix.has_unit_rows(1e-12));
}

TEST_CASE("bench") {
  const auto r = call({"bench", "--n", "20", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  const double naive = j["rows"][0]["vertices_per_second"].get<double>();
  const double gray = j["rows"][1]["vertices_per_second"].get<double>();
  MESSAGE("gray/naive throughput at n = 20: " << gray / naive);
  CHECK(gray >= 3 * naive);
  CHECK(j["rows"][0]["beta"].get<double>() == doctest::Approx(j["rows"][1]["beta"].get<double>()).epsilon(1e-9));
}
