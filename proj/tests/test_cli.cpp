#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef HURWITZ_CLI_PATH
#error "HURWITZ_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(HURWITZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_cache(const char* name) {
  const auto p = std::filesystem::temp_directory_path() / (std::string("hurwitz_cli_") + name + ".json");
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST_CASE("table") {
  const Result both = run("table --g-max 1 --n-max 3 --method both");
  CHECK(both.code == 0);
  CHECK(both.out.find("7 cases, all equal") != std::string::npos);

  const Result oracle = run("table --g-max 0 --n-max 1 --method oracle --format csv");
  CHECK(oracle.code == 0);
  CHECK(oracle.out == "g,mu,method,value\n0,1,oracle,1/1\n");

  const Result json = run("table --g-max 1 --n-max 2 --method recursion --format json");
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  REQUIRE(j.size() == 3);
  CHECK(j[1]["mu"] == nlohmann::json::array({2}));
  CHECK(j[1]["recursion"] == "1/2");

  const Result csv = run("table --g-max 1 --n-max 3 --format csv");
  CHECK(csv.out.find("0,1;1;1,recursion,4/1\n0,1;1;1,oracle,4/1\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("table --g-max -1").code == 64);
  CHECK(run("table --n-max 0").code == 64);
  CHECK(run("table --method nope").code == 64);
  CHECK(run("table --format xml").code == 64);
  CHECK(run("").code == 64);
  CHECK(run("frobnicate").code == 64);
  CHECK(run("check nope").code == 64);
  CHECK(run("--help").code == 0);
  CHECK(run("wkg 0 2").code == 65);
  CHECK(run("wkg 0 1").code == 65);
  CHECK(run("table --g-max 1 --n-max 3 --trunc-order 9").code == 65);
  CHECK(run("table --g-max 20").code == 65);
}

TEST_CASE("wkg") {
  const Result a = run("wkg 0 3");
  CHECK(a.code == 0);
  CHECK(a.out == "{\"g\":0,\"k\":3,\"terms\":[{\"a\":[2,2,2],\"c\":\"1/1\"}]}\n");
  CHECK(run("wkg 0 3").out == a.out);

  const Result b = run("wkg 1 1");
  CHECK(b.code == 0);
  const auto j = nlohmann::json::parse(b.out);
  for (const auto& t : j["terms"]) CHECK(t["a"][0] != 1);

  const Result higher = run("wkg 1 1 --trunc-order 20");
  CHECK(higher.out == b.out);
}

TEST_CASE("check suites") {
  const Result times = run("check times");
  CHECK(times.code == 0);
  CHECK(times.out.find("t_3 = 3/1") != std::string::npos);
  CHECK(times.out.find("t_4 = 1/3") != std::string::npos);
  CHECK(run("check series").code == 0);
  CHECK(run("check elsv").code == 0);
  CHECK(run("check bm --g-max 1 --n-max 4").code == 0);
}

TEST_CASE("cache transparency") {
  const std::string path = temp_cache("transparency");
  const Result cold = run("check bm --g-max 2 --n-max 4 --format json");
  const Result fill = run("check bm --g-max 2 --n-max 4 --format json --cache " + path);
  const Result warm = run("check bm --g-max 2 --n-max 4 --format json", "HURWITZ_CACHE=" + path);
  CHECK(cold.code == 0);
  CHECK(fill.out == cold.out);
  CHECK(warm.out == cold.out);
  CHECK(std::filesystem::exists(path));

  // a corrupted fingerprint is ignored and the result recomputed
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  for (std::size_t pos = 0; (pos = text.find("lambert:", pos)) != std::string::npos; pos += 8) text.replace(pos, 8, "lambX:");
  {
    std::ofstream out(path);
    out << text;
  }
  const Result corrupted = run("check bm --g-max 2 --n-max 4 --format json --cache " + path);
  CHECK(corrupted.code == 0);
  CHECK(corrupted.out == cold.out);

  // the flag wins over the environment
  const std::string bogus = temp_cache("bogus");
  {
    std::ofstream out(bogus);
    out << "garbage";
  }
  const Result flag = run("check bm --g-max 1 --n-max 3 --format json --cache " + path, "HURWITZ_CACHE=" + bogus);
  CHECK(flag.code == 0);
  std::filesystem::remove(path);
  std::filesystem::remove(bogus);
}

TEST_CASE("determinism") {
  CHECK(run("table --g-max 2 --n-max 4 --format csv").out == run("table --g-max 2 --n-max 4 --format csv").out);
  CHECK(run("table --g-max 1 --n-max 4 --format json").out == run("table --g-max 1 --n-max 4 --format json").out);
}
