#include "commdeg/algebra_io.hpp"
#include "commdeg/cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace commdeg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "commdeg");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string &text, const std::string &needle) {
  return text.find(needle) != std::string::npos;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "commdeg_test_cli") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string &name, const std::string &text = {}) const {
    const auto p = (path / name).string();
    if (!text.empty())
      std::ofstream(p) << text;
    return p;
  }
};

} // namespace

TEST_CASE("validate") {
  TempDir tmp;
  const auto h1 = tmp.file("h1.alg", "field q=2\ndim 3\nbracket 1 2 -> 0 0 1\n");
  const Run ok = run({"validate", h1});
  CHECK(ok.code == kExitOk);
  CHECK(has(ok.out, "dim L^2 = 1, dim Z = 1, class 2"));

  const auto swapped = tmp.file("swapped.alg", "field q=2\ndim 3\nbracket 2 1 -> 0 0 1\n");
  const Run parse = run({"validate", swapped});
  CHECK(parse.code == kExitParse);
  CHECK(has(parse.err, "expected i < j"));
  CHECK(has(parse.err, "line 3"));

  const auto bad = tmp.file(
      "bad.alg", "field q=2\ndim 3\nbracket 1 2 -> 1 0 0\nbracket 1 3 -> 0 0 1\n");
  const Run jac = run({"validate", bad});
  CHECK(jac.code == kExitInvalidAlgebra);
  CHECK(has(jac.err, "(1, 2, 3)"));

  const Run missing = run({"validate", tmp.file("missing.alg")});
  CHECK(missing.code == kExitParse);
}

TEST_CASE("make") {
  const Run h1 = run({"make", "heisenberg", "1", "--q", "2"});
  CHECK(h1.code == kExitOk);
  CHECK(has(h1.out, "dim 3\n"));
  CHECK(has(h1.out, "bracket 1 2 -> 0 0 1\n"));
  CHECK(std::count(h1.out.begin(), h1.out.end(), '\n') == 4); // basis comment + 3

  const Run l55 = run({"make", "l55", "--q", "3"});
  CHECK(l55.code == kExitOk);
  CHECK(has(l55.out, "dim 5\n"));
  CHECK(has(l55.out, "bracket 1 2 -> 0 0 1 0 0\n"));
  CHECK(has(l55.out, "bracket 1 3 -> 0 0 0 0 1\n"));
  CHECK(has(l55.out, "bracket 2 4 -> 0 0 0 0 1\n"));

  CHECK(run({"make", "heisenberg", "0", "--q", "2"}).code == kExitBadParameter);
  CHECK(run({"make", "heisenberg", "1", "--q", "6"}).code == kExitBadParameter);
  CHECK(run({"make", "dodecahedron", "--q", "2"}).code == kExitBadParameter);
  CHECK(run({"make", "abelian", "--q", "2"}).code == kExitBadParameter);
  CHECK(run({"make", "abelian", "three", "--q", "2"}).code == kExitBadParameter);
  CHECK(run({"make", "affine", "--q", "4", "--modulus", "1,0,1"}).code == kExitBadParameter);
  CHECK(run({"make", "affine", "--q", "4", "--modulus", "1,1,1"}).code == kExitOk);
}

TEST_CASE("make writes files that round-trip") {
  TempDir tmp;
  const auto l43 = tmp.file("l43.alg"), h1 = tmp.file("h1.alg"), cp = tmp.file("cp.alg"),
             sum = tmp.file("sum.alg");
  REQUIRE(run({"make", "l43", "--q", "2", "--out", l43}).code == kExitOk);
  REQUIRE(run({"make", "heisenberg", "1", "--q", "2", "--out", h1}).code == kExitOk);
  CHECK(read_algebra_file(l43) == make_L43(Field::make(2)));
  CHECK(read_algebra_file(h1) == make_heisenberg(Field::make(2), 1));

  REQUIRE(run({"make", "cprod", l43, "4", h1, "3", "--out", cp}).code == kExitOk);
  const LieAlgebra c = read_algebra_file(cp);
  CHECK(c.dim() == 6);
  CHECK(c == central_product(make_L43(Field::make(2)), 3, make_heisenberg(Field::make(2), 1), 2));
  CHECK(run({"validate", cp}).code == kExitOk);
  // z1 = 1 is not central in L43.
  CHECK(run({"make", "cprod", l43, "1", h1, "3"}).code == kExitBadParameter);

  REQUIRE(run({"make", "sum", l43, h1, "--out", sum}).code == kExitOk);
  CHECK(read_algebra_file(sum).dim() == 7);

  // Deterministic bytes.
  const Run a = run({"make", "l55", "--q", "9"}), b = run({"make", "l55", "--q", "9"});
  CHECK(a.out == b.out);
}

TEST_CASE("degree") {
  TempDir tmp;
  const auto h1 = tmp.file("h1.alg"), a4 = tmp.file("a4.alg"), l55 = tmp.file("l55.alg"),
             cp = tmp.file("cp.alg"), big = tmp.file("big.alg");
  run({"make", "heisenberg", "1", "--q", "2", "--out", h1});
  run({"make", "abelian", "4", "--q", "3", "--out", a4});
  run({"make", "l55", "--q", "2", "--out", l55});
  run({"make", "cprod", l55, "5", h1, "3", "--out", cp});

  for (const char *m : {"auto", "rank", "pairs", "centralizer"}) {
    const Run r = run({"degree", h1, "--method", m});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "d = 5/8 (0.625000)"));
  }
  CHECK(has(run({"degree", a4}).out, "d = 1/1 (1.000000)"));

  const Run all = run({"degree", cp, "--all-methods"});
  CHECK(all.code == kExitOk);
  CHECK(has(all.out, "d = 41/128"));
  CHECK(has(all.out, "method rank-sum: d = 41/128"));
  CHECK(has(all.out, "method pair-count: d = 41/128"));
  CHECK(has(all.out, "method centralizer-sum: d = 41/128"));
  CHECK(has(all.out, "all methods agree"));

  const Run w1 = run({"degree", cp, "--workers", "1"}), w4 = run({"degree", cp, "--workers", "4"});
  CHECK(w1.out == w4.out);

  run({"make", "abelian", "11", "--q", "2", "--out", big});
  CHECK(run({"degree", big, "--method", "pairs"}).code == kExitBudget);
  CHECK(run({"degree", h1, "--budget", "3"}).code == kExitBudget);
  CHECK(run({"degree", h1, "--method", "fastest"}).code == kExitBadParameter);
}

TEST_CASE("verify") {
  TempDir tmp;
  const Run v2 = run({"verify", "--q", "2", "--dim", "2"});
  CHECK(v2.code == kExitOk);
  CHECK(has(v2.out, "@spectrum 5/8 3\n"));
  CHECK(has(v2.out, "@spectrum 1/1 1\n"));
  CHECK(has(v2.out, "all theorem checks passed"));

  const Run v3 = run({"verify", "--q", "2", "--dim", "3", "--workers", "2"});
  CHECK(v3.code == kExitOk);
  CHECK(has(v3.out, "candidates: 512"));
  CHECK(has(v3.out, "valid: 120"));
  CHECK(has(v3.out, "@spectrum 11/32 28\n"));
  CHECK(has(v3.out, "@spectrum 7/16 42\n"));
  CHECK(has(v3.out, "@spectrum 5/8 49\n"));

  CHECK(run({"verify", "--q", "2", "--dim", "4"}).code == kExitBudget);
  CHECK(run({"verify", "--q", "2", "--dim", "3", "--budget", "100"}).code == kExitBudget);
  CHECK(run({"verify", "--q", "6", "--dim", "2"}).code == kExitBadParameter);
  CHECK(run({"verify", "--q", "2"}).code == kExitBadParameter);
}

TEST_CASE("sequence and asymptotic") {
  const Run s = run({"sequence", "--q", "2", "--count", "3"});
  CHECK(s.code == kExitOk);
  CHECK(has(s.out, "m=1: 5/8 (0.625000)"));
  CHECK(has(s.out, "m=2: 17/32"));
  CHECK(has(s.out, "m=3: 65/128"));

  const Run h = run({"asymptotic", "heisenberg", "--q", "3"});
  CHECK(h.code == kExitOk);
  CHECK(has(h.out, "@limit 1/3\n"));
  CHECK(has(run({"asymptotic", "heisenberg-power", "--q", "2", "--k", "4"}).out,
            "@limit 1/16\n"));
  CHECK(has(run({"asymptotic", "class3-even", "--q", "2"}).out, "@limit 5/16\n"));
  CHECK(run({"asymptotic", "tori", "--q", "2"}).code == kExitBadParameter);
  CHECK(run({"sequence", "--q", "2", "--count", "0"}).code == kExitBadParameter);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitBadParameter);
  CHECK(run({"frobnicate"}).code == kExitBadParameter);
  CHECK(run({"--help"}).code == kExitOk);
}
