#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "psp/service.hpp"
#include "psp/render.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run psp_cli(const std::string& args) {
  std::string cmd = std::string(PSP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = ::popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), got);
  int st = ::pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

psp::Json json_of(const std::string& args) { return psp::Json::parse(psp_cli(args + " --format json").out); }

}  // namespace

TEST_CASE("cover command") {
  Run r = psp_cli("cover --a2 6 --a3 13 -s 6");
  CHECK(r.code == 0);
  CHECK(r.out == "X=47 k=2 Y=8 SG(4,2)\n");
  CHECK(psp_cli("cover --a2 3 --a3 6 -s 3").out.rfind("X=10 ", 0) == 0);
  CHECK(psp_cli("cover --a2 2 --a3 3 -s 1").out.rfind("X=3 ", 0) == 0);
  CHECK(psp_cli("cover --a2 55 --a3 954 -s 54").out == "X=108 k=-1 Y=108\n");
}

TEST_CASE("text and json agree") {
  for (const char* args : {"cover --a2 6 --a3 13 -s 6", "cover --a2 39 --a3 520 -s 54", "cover --a2 9 --a3 14 -s 8"}) {
    std::string text = psp_cli(args).out;
    psp::Json j = json_of(args);
    std::smatch m;
    REQUIRE(std::regex_search(text, m, std::regex(R"(X=(-?\d+) k=(-?\d+) Y=(-?\d+))")));
    CHECK(j["cover"]["X"] == std::stoll(m[1]));
    CHECK(j["cover"]["k"] == std::stoll(m[2]));
    CHECK(j["cover"]["Y"] == std::stoll(m[3]));
  }
  psp::Json j = json_of("osg -n 30 -p 1");
  CHECK(psp_cli("osg -n 30 -p 1").out == "OSG(30,1) = {1,34,352} y=" + std::to_string(j["y"].get<long>()) + "\n");
}

TEST_CASE("sg command") {
  Run r = psp_cli("sg --a2 14 --a3 33 -n 8");
  CHECK(r.code == 0);
  CHECK(r.out == "SG(8,2) break 22 (order 4) non-canonical\n");
  r = psp_cli("sg --a2 38 --a3 97 --series");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "SG(19,2) break 71 (order 4) non-canonical\n"
        "SG(15,4) break 67 (order 6) non-canonical\n"
        "SG(14,6) break 67 canonical\n");
  CHECK(psp_cli("sg --a2 6 --a3 13 -n 3").code == 1);
  CHECK(psp_cli("sg --a2 6 --a3 13 -n 3 --format json").code == 1);
}

TEST_CASE("bad input exits 2") {
  CHECK(psp_cli("cover --a2 13 --a3 6 -s 6").code == 2);
  CHECK(psp_cli("cover --a2 6 --a3 13").code == 2);
  CHECK(psp_cli("cover --a2 six --a3 13 -s 3").code == 2);
  CHECK(psp_cli("tables mopt -s 17").code == 2);
  CHECK(psp_cli("frobnicate").code == 2);
  CHECK(psp_cli("verify t999").code == 2);
  CHECK(psp_cli("cover --a2 6 --a3 13 -s 6 --format xml").code == 2);
  CHECK(psp_cli("--help").code == 0);
}

TEST_CASE("osg command") {
  CHECK(psp_cli("osg -n 37 -p 1 --sg1").out == "SG1(37,1) = {1,42,519} y=488\n");
  CHECK(psp_cli("osg -n 35 -p 1 --sg1").code == 1);
  CHECK(psp_cli("osg -n 48 -p 2").out == "OSG(48,2) = {1,80,850} y=" +
                                            std::to_string(json_of("osg -n 48 -p 2")["bases"][0]["y"].get<long>()) +
                                            "\n");
}

TEST_CASE("tables command") {
  psp::Json j = json_of("tables mopt -s 54");
  CHECK(j["X_opt"] == 9852);
  j = json_of("tables maximal -s 54");
  CHECK(j["a2"] == 39);
  CHECK(j["a3"] == 520);
  j = json_of("tables scan -s 54");
  CHECK(j["argmax_k"] == 17);
  j = json_of("tables key1p -n 5 -p 3");
  CHECK(j["cases"]["1a"].size() == 3);
  CHECK(j["cases"]["2b"].size() == 6);
  j = json_of("tables bounds -n 8 -p 2 --a3 33");
  CHECK(j["a2_lower"] == "9");
  CHECK(j["a2_upper"] == 25);
}

TEST_CASE("diagram command") {
  const std::string path = std::string(PSP_TMP_DIR) + "/cli_diagram.svg";
  Run r = psp_cli("diagram --a2 14 --a3 33 -n 8 -p 2 --from 0 --to 66 --svg " + path);
  CHECK(r.code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::ifstream gold(PSP_GOLDEN_DIR "/diagram_14_33_n8.svg", std::ios::binary);
  std::stringstream gs;
  gs << gold.rdbuf();
  CHECK(ss.str() == gs.str());
  CHECK(r.out.find("T2(6) 18..22") != std::string::npos);

  CHECK(psp_cli("diagram --a2 14 --a3 33 -n 8 --svg /nonexistent-dir/x.svg").code == 2);

  r = psp_cli("diagram --a2 14 --a3 33 -n 8 --from 10 --to 5 --svg " + path);
  CHECK(r.code == 0);
}

TEST_CASE("diagram json threads match the service") {
  for (const char* q : {"--a2 14 --a3 33 -n 8", "--a2 30 --a3 82 -n 12", "--a2 30 --a3 38 -n 4"}) {
    psp::Json cli = json_of(std::string("diagram ") + q);
    std::istringstream is(q);
    std::string flag, a2, a3, n;
    is >> flag >> a2 >> flag >> a3 >> flag >> n;
    psp::Json svc = psp::Json::parse(psp::handle_request("/analyze", {{"a2", a2}, {"a3", a3}, {"n", n}}).body);
    CHECK(cli["threads"] == svc["threads"]);
    CHECK(cli["marks"] == svc["marks"]);
  }
}

TEST_CASE("pp and verify commands") {
  Run r = psp_cli("pp -s 40");
  CHECK(r.code == 0);
  CHECK(r.out.find("pp(40) = 3.89587") != std::string::npos);
  CHECK(r.out.find("4633/1296") != std::string::npos);
  r = psp_cli("verify t700 --s-max 12");
  CHECK(r.code == 0);
  CHECK(r.out.find("13/13 pass") != std::string::npos);
  psp::Json j = json_of("verify pp");
  CHECK(j["passed"] == true);
}
