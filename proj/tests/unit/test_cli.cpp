#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string data(const char* name) { return (std::filesystem::path(DEMORGAN_TEST_DATA) / name).string(); }

Run run(const std::string& args) {
  const std::string cmd = std::string(DEMORGAN_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "demorgan_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("is-demorgan reports a witness") {
  const auto r = run("is-demorgan " + data("cspan.json") + " --topology trivial");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("false\n", 0) == 0);
  CHECK(has(r.out, "closed_sieve: {f}"));
  CHECK(has(r.out, "criterion: {f, g}"));

  const auto j = nlohmann::json::parse(run("is-demorgan " + data("cspan.json") + " --json").out);
  CHECK(j["result"] == false);
  CHECK(j["witness"]["object"] == "c");

  const auto t = run("is-demorgan " + data("cspan_fg.json"));
  CHECK(t.out == "true\n");
}

TEST_CASE("all decision methods agree") {
  for (const char* file : {"cspan.json", "cspan_fg.json", "cspan_empty_a.json", "mon2.json"}) {
    for (const char* cmd : {"is-demorgan", "is-boolean"}) {
      for (const char* topo : {"file", "trivial", "dense", "demorgan"}) {
        CAPTURE(file);
        CAPTURE(cmd);
        CAPTURE(topo);
        const auto r = run(std::string(cmd) + " " + data(file) + " --method all --json --topology " + topo);
        CHECK(r.status == 0);
        CHECK(nlohmann::json::parse(r.out)["agree"] == true);
      }
    }
  }
}

TEST_CASE("demorganize writes a site document") {
  const auto out = scratch("demorganized.json");
  const auto r = run("demorganize " + data("cspan.json") + " --topology trivial -o " + out.string());
  CHECK(r.status == 0);
  CHECK(has(r.out, "c: {f, g}"));
  const auto again = run("topology compare " + out.string() + " " + data("cspan_fg.json"));
  CHECK(has(again.out, "equal: true"));

  const auto b = run("booleanize " + data("mon2.json") + " --json");
  CHECK(nlohmann::json::parse(b.out)["covers"]["*"].size() == 2);
}

TEST_CASE("frame commands") {
  const auto r = run("frame classify " + data("frm5.json"));
  CHECK(r.status == 0);
  CHECK(has(r.out, "de_morgan: false"));
  CHECK(has(r.out, "boolean: false"));
  CHECK(has(r.out, "extremally_disconnected: false"));

  const auto out = scratch("quotient.json");
  const auto d = run("frame demorganize " + data("frm5.json") + " -o " + out.string());
  CHECK(has(d.out, "quotient boolean: true"));
  const auto q = run("heyting check " + out.string() + " --json");
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j["elements"] == 4);
  CHECK(j["boolean"] == true);

  const auto n = run("frame nuclei " + data("ch3.json") + " --json");
  CHECK(nlohmann::json::parse(n.out)["count"] == 4);
}

TEST_CASE("site commands") {
  CHECK(run("validate " + data("cspan.json")).out.rfind("valid category: 3 objects, 5 arrows", 0) == 0);
  CHECK(run("ore " + data("cspan.json")).out.rfind("false", 0) == 0);
  CHECK(run("ore " + data("mon2.json")).out == "true\n");
  const auto s = nlohmann::json::parse(run("sieves " + data("cspan.json") + " c --json").out);
  CHECK(s["sieves"].size() == 5);
  CHECK(run("dense-topology " + data("mon2.json")).out == "*: {e}\n");
  CHECK(run("demorgan-topology " + data("cspan.json")).out == "a:; b:; c: {f, g}\n");
  CHECK(run("topology generate " + data("cspan_fg.json")).out == "a:; b:; c: {f, g}\n");
  CHECK(has(run("topology validate " + data("cspan_fg.json")).out, "valid topology"));
  const auto e = nlohmann::json::parse(run("enumerate-topologies " + data("mon2.json") + " --json").out);
  CHECK(e["count"] == 3);
  const auto rep = nlohmann::json::parse(run("report " + data("cspan.json") + " --json").out);
  CHECK(rep["right_ore"] == false);
  CHECK(rep["de_morgan"]["oracle"] == false);
  CHECK(rep["countroc_witness"]["object"] == "c");
}

TEST_CASE("exit codes") {
  CHECK(run("topology validate " + data("cspan_bad_cover.json")).status == 2);
  CHECK(run("validate " + data("unknown_name.json")).status == 2);
  CHECK(run("validate " + data("malformed.json")).status == 2);
  CHECK(run("validate " + data("missing.json")).status == 2);
  CHECK(run("is-demorgan " + data("cspan.json") + " --method nonsense").status == 2);
  CHECK(run("--max-sieve-arrows 2 dense-topology " + data("cspan.json")).status == 3);
  CHECK(run("enumerate-topologies " + data("cspan.json") + " --max-enum-arrows 1").status == 3);
  CHECK(run("--help").status == 0);
}
