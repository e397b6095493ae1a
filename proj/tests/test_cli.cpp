#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "radon/svg.hpp"

#ifndef RADONLAB_BIN
#define RADONLAB_BIN "radonlab"
#endif

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RADONLAB_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze produces the full exact report for t^3") {
    auto r = run_cli("analyze --poly t^3 --n 1");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["newton"]["distance"] == "3");
    CHECK(j["zero_order"]["value"] == 0);
    CHECK(j["zero_order"]["exactness"] == "exact");
    CHECK(j["indices"]["predicted_h"]["value"] == "1/3");
    // B is the trapezoid with top edge at y = 1/3
    auto verts = j["regions"]["B"]["vertices"];
    CHECK(verts[2][1] == "1/3");
    CHECK(verts[3] == Json::array({"1/3", "1/3"}));
    // Y family apexes (1/3,1/3,1/3) and (2/3,2/3,1/3)
    auto y = j["regions"]["Y_family"]["triangles"][0]["vertices"];
    CHECK(y[0] == Json::array({"1/3", "1/3", "1/3"}));
    CHECK(y[1] == Json::array({"2/3", "2/3", "1/3"}));
  }

  TEST_CASE("analyze of t1^2+t2^2 reports the A triangle (h = 1 >= 1/3)") {
    auto r = run_cli("analyze --poly \"t1^2 + t2^2\" --n 2");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["newton"]["distance"] == "1");
    CHECK(j["indices"]["predicted_h"]["value"] == "1");
    CHECK(j["regions"]["B"]["name"] == "A");
    CHECK(j["regions"].contains("Y34_family"));
  }

  TEST_CASE("zero polynomial is an input error citing the nonzero requirement") {
    auto r = run_cli("analyze --poly 0 --n 1");
    CHECK(r.exit_code == 2);
  }

  TEST_CASE("gradient-condition violations exit with code 2") {
    CHECK(run_cli("analyze --poly \"1 + t1^2\" --n 1").exit_code == 2);
    CHECK(run_cli("analyze --poly \"t1 + t1^3\" --n 1").exit_code == 2);
  }

  TEST_CASE("region with violated Z hypothesis exits 3") {
    auto r = run_cli("region --n 2 --h 1/6 --g 1/2 --o 4");
    // g >= 1/max(o,2) only skips Z with a warning; requesting a bad Y is the hard error
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.contains("warnings"));
  }

  TEST_CASE("classify matches the region geometry") {
    // h = g = 3/5 >= 1/3: Y3/Y4 tent with diagonal apex 1/3
    auto bounded = run_cli("classify --poly \"t1^2 t2 + t1 t2^3\" --n 2 --p 2 --q 2 --s 3/10");
    REQUIRE(bounded.exit_code == 0);
    CHECK(bounded.out.find("Bounded [theorem 1.5]") == 0);
    auto unbounded =
        run_cli("classify --poly \"t1^2 t2 + t1 t2^3\" --n 2 --p 2 --q 2 --s 7/10");
    REQUIRE(unbounded.exit_code == 0);
    CHECK(unbounded.out.find("Unbounded [theorem 1.1 part 2]") == 0);
    // between the tent and h: nothing licensed either way
    auto unknown =
        run_cli("classify --poly \"t1^2 t2 + t1 t2^3\" --n 2 --p 2 --q 2 --s 1/2");
    REQUIRE(unknown.exit_code == 0);
    CHECK(unknown.out.find("Unknown") == 0);
    CHECK(unknown.out.find("bounded below s = 1/3") != std::string::npos);
  }

  TEST_CASE("report JSON is byte-identical across runs") {
    auto a = run_cli("analyze --poly \"t1^2 - 2 t1 t2 + t2^2\" --n 2");
    auto b = run_cli("analyze --poly \"t1^2 - 2 t1 t2 + t2^2\" --n 2");
    CHECK(a.out == b.out);
  }

  TEST_CASE("sublevel subcommand writes the pinned CSV header") {
    std::string csv = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/radon_test_curve.csv";
    auto r = run_cli("sublevel --poly t^2 --n 1 --radius 1 --samples 20000 --kmin 6 --kmax 14 "
                     "--seed 5 --csv " + csv);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "k,epsilon,measure,stderr,samples,seed");
    std::remove(csv.c_str());
  }

  TEST_CASE("region/plot round trip produces deterministic SVG") {
    std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    std::string doc = dir + "/radon_test_regions.json";
    auto r = run_cli("region --n 2 --h 1/6 --g 1/6 --o 2 --output " + doc);
    REQUIRE(r.exit_code == 0);
    auto svg1 = run_cli("plot --input " + doc + " --select B");
    auto svg2 = run_cli("plot --input " + doc + " --select B");
    REQUIRE(svg1.exit_code == 0);
    CHECK(svg1.out == svg2.out);
    CHECK(svg1.out.find("<svg") != std::string::npos);
    CHECK(svg1.out.find("1/4") != std::string::npos);  // labeled exact vertex
    auto svgJ = run_cli("plot --input " + doc + " --select J");
    REQUIRE(svgJ.exit_code == 0);
    CHECK(svgJ.out.find("5/14") != std::string::npos);
    CHECK(svgJ.out.find("11/14") != std::string::npos);
    auto slice = run_cli("plot --input " + doc + " --select Y_family --axis z --at 1/12");
    REQUIRE(slice.exit_code == 0);
    CHECK(slice.out.find("<line") != std::string::npos);
    auto missing = run_cli("plot --input " + doc + " --select Nope");
    CHECK(missing.exit_code == 2);
    std::remove(doc.c_str());
  }

  TEST_CASE("unknown flags exit 2") {
    CHECK(run_cli("analyze --poly t^2 --n 1 --nonsense").exit_code == 2);
  }
}
