#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AFFCRYS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  for (size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const Run r = run("enumerate --type B1:3 --level 1");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 7);
  const Run j = run("enumerate --type B1:3 --level 2 --format json");
  CHECK(j.code == 0);
  const auto v = nlohmann::json::parse(j.out);
  CHECK(v["size"] == 27);
  CHECK(v["elements"].size() == 27);
}

TEST_CASE("map") {
  const Run r = run("map --type B1:3 --level 2 --direction coord-bracket 0,1,0\\|0\\|0,0,1");
  CHECK(r.code == 0);
  CHECK(r.out == "[0,1,0|0|0,0,1]\n");
  const Run back = run("map --type B1:3 --level 2 --direction bracket-coord '[0,1,0|0|0,0,1]'");
  CHECK(back.out == "0,1,0|0|0,0,1\n");
  const Run s = run("map --type C1:2 --level 1 --direction coord-slice 0,1\\|1,0");
  REQUIRE(s.code == 0);
  std::string slice = s.out.substr(0, s.out.size() - 1);
  const Run c = run("map --type C1:2 --level 1 --direction slice-coord '" + slice + "'");
  CHECK(c.out == "0,1|1,0\n");
  const Run g = run("map --type C1:2 --direction wall-path 'lambda=1,1,0; cols='");
  CHECK(g.code == 0);
  CHECK(g.out.find("N=0") != std::string::npos);
}

TEST_CASE("graph") {
  const Run r = run("graph --type B1:3 --weight 3,0,0,0 --depth 2 --model wall --format json");
  REQUIRE(r.code == 0);
  const auto g = nlohmann::json::parse(r.out);
  int out0 = 0;
  for (const auto& e : g["edges"])
    if (e["src"] == 0) {
      ++out0;
      CHECK(e["color"] == 0);
    }
  CHECK(out0 == 1);
  const Run d = run("graph --type C1:2 --weight 1,1,0 --depth 0 --model path --format json");
  CHECK(nlohmann::json::parse(d.out)["nodes"].size() == 1);
}

TEST_CASE("verify reports and exit codes") {
  const Run ok = run("verify --suite psi --type B1:3 --level 3");
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["pass"] == true);
  CHECK(j["failures"] == 0);
  CHECK(run("verify --suite iso --type C1:2 --weight 1,1,0").code == 0);
}

TEST_CASE("bad arguments exit 2, domain errors exit 1") {
  CHECK(run("enumerate --type Z1:3 --level 1").code == 2);
  CHECK(run("enumerate --type B1:3").code == 2);
  CHECK(run("graph --type B1:3 --weight 1,-1,0,0").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("map --type B1:3 --level 1 --direction coord-slice 9,9").code == 2);
  CHECK(run("map --type B1:3 --level 1 --direction coord-slice 0,0,0\\|1\\|0,0,1").code == 1);
  CHECK(run("frobnicate").code == 2);
}
