#include "doctest.h"
#include "json.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

Run xray(const std::string& args) {
  const std::string cmd = std::string("XRAY_COLOR=0 ") + XRAY_EXE + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has(const std::string& text, const std::string& what) { return text.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("generate, validate and compute the circle example") {
  REQUIRE(xray("gen cpn --n 3 --matrix 0,1,2,3 -o cli_cp3.json").code == 0);
  const Run v = xray("validate cli_cp3.json");
  CHECK(v.code == 0);
  const Run c = xray("chambers cli_cp3.json");
  CHECK(c.code == 0);
  CHECK(has(c.out, "EXTERIOR"));
  const Run inv = xray("invariants cli_cp3.json");
  CHECK(inv.code == 0);
  CHECK(has(inv.out, "1 + 2t^2 + t^4"));
  CHECK_FALSE(has(inv.out, "FAIL"));
  const Run o = xray("oracle cli_cp3.json");
  CHECK(o.code == 0);
  CHECK(has(o.out, "PASS circle-regular"));
}

TEST_CASE("output is deterministic") {
  REQUIRE(xray("gen cpn --n 4 --matrix \"0,4,2,8/5,12/5;0,0,4,3/4,19/10\" -o cli_a.json").code == 0);
  REQUIRE(xray("gen cpn --n 4 --matrix \"0,4,2,8/5,12/5;0,0,4,3/4,19/10\" -o cli_b.json").code == 0);
  CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
  const Run j1 = xray("invariants cli_a.json --format json");
  const Run j2 = xray("invariants cli_b.json --format json");
  CHECK(j1.code == 0);
  CHECK(j1.out == j2.out);
  const auto doc = nlohmann::json::parse(j1.out);
  CHECK(doc["rows"].size() > 0);
  CHECK(xray("render cli_a.json -o cli_a.svg").code == 0);
  CHECK(xray("render cli_b.json -o cli_b.svg").code == 0);
  CHECK(slurp("cli_a.svg") == slurp("cli_b.svg"));
  CHECK(has(slurp("cli_a.svg"), "<svg"));
}

TEST_CASE("a corrupted seed is reported") {
  REQUIRE(xray("gen cpn --n 3 --matrix 0,1,2,3 -o cli_seed.json").code == 0);
  auto doc = nlohmann::json::parse(slurp("cli_seed.json"));
  doc["vertex_data"]["{1}"]["signature"] = 3;
  std::ofstream("cli_seed.json") << doc.dump(2);
  const Run v = xray("validate cli_seed.json");
  CHECK(v.code == 1);
  CHECK(has(v.out, "FAIL ["));
  CHECK(xray("oracle cli_seed.json").code == 1);
  const Run o = xray("oracle --unchecked cli_seed.json");
  CHECK(o.code == 1);
  CHECK(has(o.out, "FAIL isolated-seeds"));
}

TEST_CASE("toric generator and rendering limits") {
  REQUIRE(xray("gen delzant --cube 2 -o cli_cube.json").code == 0);
  CHECK(xray("invariants cli_cube.json --which sig").code == 0);
  REQUIRE(xray("gen delzant --simplex 3 -o cli_s3.json").code == 0);
  const Run r = xray("render cli_s3.json -o cli_s3.svg");
  CHECK(r.code == 1);
  CHECK(has(r.out, "d ≤ 2"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(xray("").code == 2);
  CHECK(xray("frobnicate").code == 2);
  CHECK(xray("invariants").code == 2);
  CHECK(xray("invariants cli_cp3.json --format yaml").code == 2);
  CHECK(xray("gen cpn --n 3").code == 2);
  CHECK(xray("--help").code == 0);
  CHECK(xray("validate no_such_file.json").code == 1);
}
