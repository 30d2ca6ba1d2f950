#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "../vendor/json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DIGITBLOCKS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("count") {
  auto r = run("count --word 11 --base 2 --n 7");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run("count --word 011@2 --n 3").out == "1\n");
  r = run("count --word 11 --n 7 --json");
  CHECK(nlohmann::json::parse(r.out)["count"] == 2);
}

TEST_CASE("closed-form") {
  auto r = run("closed-form --word 1 --base 2 --kernel deg2");
  CHECK(r.code == 0);
  CHECK(r.out == "1/2·gamma + log 2 - 1/2·log pi ≈ 0.409390070086\n");
  r = run("closed-form --word 0 --kernel deg3 --json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rendered"] == "1/2·gamma - 1/2·log 2 + 1/2·log pi - 1/2");
  CHECK(j["closed_form"]["terms"].size() == 4);
  CHECK(run("closed-form --word 1 --base 3 --kernel qbase").code == 0);
  CHECK(run("closed-form --word 1 --kernel qk --k 2").code == 0);
  CHECK(run("closed-form --word 1 --base 3 --kernel deg2").code == 2);
}

TEST_CASE("partial-sum") {
  const auto r = run("partial-sum --word 1 --kernel deg2 --terms 1e5 --mode parallel");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["terms"] == 100000);
  CHECK(j["mode"] == "parallel");
  CHECK(j["kernel"]["type"] == "deg2");
  CHECK(j["value"].get<double>() < 0.409390070086);
  CHECK(j["value"].get<double>() + j["tail_bound"].get<double>() > 0.409390070086);
  CHECK(run("partial-sum --word 1 --terms 0").code == 2);
  CHECK(run("partial-sum --word 1 --terms lots").code == 2);
}

TEST_CASE("digamma") {
  auto r = run("digamma --p 1 --q 2");
  CHECK(r.out == "-1.96351002602\n");
  r = run("digamma --p 1 --q 4 --gauss --json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["gauss"]["terms"].size() == 4);
  CHECK(run("digamma --p 1 --q 1 --gauss").code == 2);
  CHECK(run("digamma --p 0 --q 3").code == 2);
}

TEST_CASE("transform") {
  auto r = run("transform --period 1 --length 8");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["values"][4] == "3/1");
  {
    std::ofstream f("cli_transform_input.json");
    f << R"({"values": ["1", "0", "1", "1", "2"]})";
  }
  r = run("transform --direction inverse --input cli_transform_input.json");
  j = nlohmann::json::parse(r.out);
  CHECK(j["values"] == nlohmann::json::array({"1/1", "-1/1", "0/1", "1/1", "2/1"}));
  r = run("transform --direction detect --word 1");
  j = nlohmann::json::parse(r.out);
  CHECK(j["detected"] == true);
  CHECK(j["period"] == nlohmann::json::array({"1/1", "0/1"}));
  CHECK(run("transform --period 1").code == 2);
  CHECK(run("transform --direction detect --word 1 --limit 3").code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --suite special").code == 0);
  auto r = run("verify --suite special --json");
  CHECK(nlohmann::json::parse(r.out)["pass"] == true);
  CHECK(run("verify --suite special --tolerance-scale 1e-9").code == 1);
  {
    std::ofstream f("cli_verify.cfg");
    f << "override.C07.psi(1/02) = 0.5\n";
  }
  CHECK(run("verify --suite special --config cli_verify.cfg").code == 1);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("verify --config missing.cfg").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("count --word 2 --n 3").code == 2);
  CHECK(run("count --word 1 --base 17 --n 3").code == 2);
  CHECK(run("count --n 3").code == 2);
  CHECK(run("--help").code == 0);
}
