#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fockparse/cli.hpp"
#include "support.hpp"

using namespace fockparse;
using namespace fockparse::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("fockparse_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
  const auto p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string kExample = data_path("example.cfg");

}  // namespace

TEST_CASE("check") {
  Run r = run({"check", kExample});
  CHECK(r.code == 0);
  CHECK(r.out == "cnf=true crf=true tnf=true\n");

  r = run({"check", data_path("mixed.cfg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("tnf=false") != std::string::npos);
  CHECK(r.out.find("A has right-hand sides") != std::string::npos);

  CHECK(run({"check", data_path("missing.cfg")}).code == 2);
  const auto dir = scratch("check");
  CHECK(run({"check", write(dir, "bad.cfg", "S -> a -> b\n")}).code == 2);
  r = run({"check", write(dir, "eps.cfg", "S ->\n")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("cnf=true crf=false tnf=false\nviolation\tS ->\tcrf: ", 0) == 0);
}

TEST_CASE("to-tnf") {
  const auto dir = scratch("tnf");
  Run r = run({"to-tnf", data_path("mixed.cfg")});
  CHECK(r.code == 0);
  const std::string converted = write(dir, "converted.cfg", r.out);
  CHECK(run({"check", converted}).out.rfind("cnf=true crf=true tnf=true", 0) == 0);

  r = run({"to-tnf", kExample});
  CHECK(r.code == 0);
  CHECK(r.out == read_data("example.cfg"));

  r = run({"to-tnf", data_path("epsilon.cfg")});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("parse and iparse") {
  Run r = run({"parse", kExample, "the", "mouse", "ate", "cheese"});
  CHECK(r.code == 0);
  CHECK(r.out == read_data("table1.trace"));
  CHECK(run({"parse", kExample, "the mouse ate cheese"}).out == r.out);

  r = run({"iparse", kExample, "the mouse ate cheese"});
  CHECK(r.code == 0);
  CHECK(r.out == read_data("iparse.txt"));

  r = run({"parse", kExample, "mouse the ate cheese"});
  CHECK(r.code == 1);
  CHECK(r.err.find("stack") != std::string::npos);

  r = run({"iparse", kExample, "the mouse cheese"});
  CHECK(r.code == 1);
  CHECK(r.out == "@empty\nNP(D(the),[N])\nS(NP(D(the),N(mouse)),[VP])\n");
}

TEST_CASE("embed") {
  Run r = run({"embed", kExample, kT1});
  CHECK(r.code == 0);
  CHECK(r.out == read_data("t1.fock"));
  CHECK(run({"embed", kExample, kT2}).out == read_data("t2.fock"));
  CHECK(run({"embed", kExample, "S(NP)"}).code == 2);
  CHECK(run({"embed", kExample, "NP(D(the)"}).code == 2);
}

TEST_CASE("trajectory and pca") {
  const auto dir = scratch("traj");
  Run r = run({"trajectory", kExample, "the mouse ate cheese", "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::vector<std::string> files;
  for (int j = 0; j < 5; ++j) {
    const auto p = dir / ("step" + std::to_string(j) + ".fock");
    REQUIRE(std::filesystem::exists(p));
    files.push_back(p.string());
  }
  CHECK(read_data("t1.fock") == [&] {
    std::ifstream in(files[1]);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  CHECK(r.out.find("523") != std::string::npos);

  std::vector<std::string> args{"pca"};
  args.insert(args.end(), files.begin(), files.end());
  args.insert(args.end(), {"--k", "3"});
  r = run(args);
  CHECK(r.code == 0);
  std::istringstream csv(r.out);
  std::vector<std::string> rows;
  for (std::string l; std::getline(csv, l);) rows.push_back(l);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "label,pc1,pc2,pc3");
  CHECK(rows[1].rfind("step0,", 0) == 0);
  CHECK(run(args).out == r.out);

  args.back() = "9";
  CHECK(run(args).code == 1);
  CHECK(run({"pca", (dir / "nope.fock").string()}).code == 2);

  CHECK(run({"trajectory", kExample, "mouse", "--out", dir.string()}).code == 1);
}

TEST_CASE("theorem-check") {
  Run r = run({"theorem-check", "--seed", "42", "--cases", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("seed=42") != std::string::npos);
  CHECK(r.out.find("1000/1000 ok\n") != std::string::npos);
  CHECK(run({"theorem-check", "--seed", "42", "--cases", "1000"}).out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"parse", kExample}).code == 2);
  CHECK(run({"theorem-check", "--seed", "x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
