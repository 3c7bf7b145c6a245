#include "cpsplit/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace cpsplit;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "cpsplit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cpsplit_test_" + name);
}

}  // namespace

TEST_CASE("run writes a CSV with one row per cell") {
  const Outcome o = call({"run", "--case", "sod", "--cells", "100"});
  CHECK(o.code == kExitOk);
  const auto l = lines(o.out);
  REQUIRE(l.size() == 101);
  CHECK(l[0] == "x,rho,u,p,e");
  // 17 significant digits in scientific notation.
  const std::string first = l[1].substr(0, l[1].find(','));
  CHECK(first.size() == 23);
  CHECK(first[first.size() - 4] == 'e');
  double x = 0, rho = 0, u = 0, p = 0, e = 0;
  CHECK(std::sscanf(l[1].c_str(), "%lf,%lf,%lf,%lf,%lf", &x, &rho, &u, &p, &e) == 5);
  CHECK(x == doctest::Approx(-9.9));
  CHECK(rho == doctest::Approx(1.0));
}

TEST_CASE("runs are deterministic") {
  const Outcome a = call({"run", "--case", "lax", "--cells", "60", "--order", "2"});
  const Outcome b = call({"run", "--case", "lax", "--cells", "60", "--order", "2"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("EOC table and report formats") {
  const Outcome e = call({"run", "--case", "smooth", "--cells", "20", "--format", "eoc"});
  CHECK(e.code == kExitOk);
  const auto l = lines(e.out);
  REQUIRE(l.size() == 6);
  CHECK(l[0] == "cells,h,L1,L2,Linf,eoc_L1,eoc_L2,eoc_Linf");
  CHECK(l[1].rfind("20,", 0) == 0);
  CHECK(l[5].rfind("320,", 0) == 0);
  const Outcome r = call({"run", "--case", "sonic-point", "--cells", "100", "--format", "report"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("L1") != std::string::npos);
}

TEST_CASE("list-cases covers both registries") {
  const Outcome o = call({"list-cases"});
  CHECK(o.code == kExitOk);
  for (const char* n : {"sod", "lax", "blast", "shock-entropy", "shock-reflection", "ramp", "wedge", "half-cylinder"})
    CHECK(o.out.find(n) != std::string::npos);
  const Outcome t = call({"list-cases", "--tsv"});
  for (const auto& line : lines(t.out)) CHECK(line.find('\t') != std::string::npos);
  CHECK(lines(t.out).size() >= 15);
}

TEST_CASE("configuration errors exit with code 2") {
  CHECK(call({"run", "--case", "nope"}).code == kExitConfigError);
  CHECK(call({"run", "--case", "sod", "--order", "3"}).code == kExitConfigError);
  CHECK(call({"run", "--case", "sod", "--scheme", "roe"}).code == kExitConfigError);
  CHECK(call({"run", "--case", "sod", "--cells", "10", "--grid", "4x4"}).code == kExitConfigError);
  CHECK(call({"run", "--case", "wedge", "--grid", "4by4"}).code == kExitConfigError);
  CHECK(call({"run", "--case", "sod", "--cfl", "2"}).code == kExitConfigError);
  CHECK(call({"run", "--case", "sod", "--config", "/nonexistent/file.cfg"}).code == kExitConfigError);
  CHECK(call({}).code == kExitConfigError);
  CHECK(call({"verify", "everything"}).code == kExitConfigError);
}

TEST_CASE("blow-up exits with code 3") {
  const Outcome o = call({"run", "--case", "blast", "--order", "2", "--cells", "400"});
  CHECK(o.code == kExitBlowUp);
  CHECK(o.err.find("blew up") != std::string::npos);
}

TEST_CASE("command-line options override the config file") {
  const auto cfg = temp_file("precedence.cfg");
  {
    std::ofstream f(cfg);
    f << "# test config\ncase = sod\ncells = 40\n\nt_final = 0.001\n";
  }
  const Outcome a = call({"run", "--config", cfg.string()});
  CHECK(a.code == kExitOk);
  CHECK(lines(a.out).size() == 41);
  const Outcome b = call({"run", "--config", cfg.string(), "--cells", "30"});
  CHECK(lines(b.out).size() == 31);
  std::filesystem::remove(cfg);

  const auto bad = temp_file("bad.cfg");
  {
    std::ofstream f(bad);
    f << "cells 40\n";
  }
  CHECK_THROWS_AS(read_config_file(bad.string()), ConfigError);
  std::filesystem::remove(bad);
}

TEST_CASE("output file and 2D field format") {
  const auto path = temp_file("field.csv");
  const Outcome o = call({"run", "--case", "ramp", "--grid", "12x6", "--t-final", "0.05", "--out", path.string()});
  CHECK(o.code == kExitOk);
  std::ifstream in(path);
  std::string first, second, header;
  std::getline(in, first);
  std::getline(in, second);
  std::getline(in, header);
  CHECK(first == "12,6");
  CHECK(second.rfind("contour,", 0) == 0);
  CHECK(header == "x,y,rho,u,v,p");
  int rows = 0;
  for (std::string l; std::getline(in, l);) ++rows;
  CHECK(rows == 72);
  in.close();
  std::filesystem::remove(path);
}

TEST_CASE("helpers") {
  CHECK(parse_grid("240x80") == std::pair{240, 80});
  CHECK_THROWS_AS(parse_grid("0x3"), ConfigError);
  CHECK_THROWS_AS(parse_grid("12x"), ConfigError);
  CHECK(parse_format("eoc") == OutputFormat::Eoc);
  CHECK_THROWS_AS(parse_format("json"), ConfigError);
  CHECK(scheme_label(SchemeKind::TvsFds) == "TVS-FDS");
}
