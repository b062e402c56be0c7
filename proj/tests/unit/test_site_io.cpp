#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "demorgan/catalog.hpp"
#include "demorgan/site_io.hpp"
#include "support/helpers.hpp"

using namespace demorgan;
using testing_helpers::sieve;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(DEMORGAN_TEST_DATA) / name; }

}  // namespace

TEST_CASE("reading site documents") {
  const auto plain = read_site(data("cspan.json"));
  CHECK(plain.category() == fixtures::cspan());
  CHECK_FALSE(plain.topology.has_value());

  const auto fg = read_site(data("cspan_fg.json"));
  REQUIRE(fg.topology.has_value());
  const auto& C = fg.category();
  CHECK(*fg.topology == generate_topology(fg.space, {sieve(C, "c", {"f", "g"})}));

  const auto empty = read_site(data("cspan_empty_a.json"));
  REQUIRE(empty.topology.has_value());
  CHECK(empty.topology->covers(empty_sieve(empty.category().object("a"))));

  const auto nested = parse_site(R"({"objects": ["a"], "topology": {"covers": {"a": [[]]}}})");
  REQUIRE(nested.topology.has_value());
  CHECK_FALSE(no_empty_covers(*nested.topology));

  const auto m = read_site(data("mon2.json"));
  CHECK(m.category() == fixtures::mon2());
}

TEST_CASE("parse errors") {
  try {
    read_site(data("unknown_name.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'h'") != std::string::npos);
  }
  try {
    read_site(data("malformed.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(read_site(data("does_not_exist.json")), ParseError);
  CHECK_THROWS_AS(parse_site(R"({"arrows": []})"), ParseError);
  CHECK_THROWS_AS(parse_site(R"({"objects": ["a"], "version": 2})"), ParseError);
  CHECK_THROWS_AS(parse_site(R"({"objects": ["a"], "covers": {"b": [[]]}})"), ParseError);
  CHECK_THROWS_AS(parse_site(R"({"objects": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_site(R"({"objects": ["a"], "arrows": [{"name": "f", "dom": "a", "cod": "b"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_frame(R"({"elements": ["0"], "leq": [["0", "1"]]})"), ParseError);
  CHECK_THROWS_AS(parse_frame(R"({"elements": ["0"], "leq": [["0"]]})"), ParseError);
}

TEST_CASE("site documents round-trip") {
  for (const auto& [name, C] : fixtures::all()) {
    CAPTURE(name);
    const auto space = SieveSpace::build(C);
    for (const auto& J : enumerate_topologies(space)) {
      const auto text = write_site(J.category(), &J);
      const auto back = parse_site(text);
      CHECK(back.category() == J.category());
      REQUIRE(back.topology.has_value());
      CHECK(*back.topology == J);
      CHECK(write_site(back.category(), &*back.topology) == text);
    }
    const auto bare = parse_site(write_site(C));
    CHECK(bare.category() == C);
    CHECK_FALSE(bare.topology.has_value());
  }
}

TEST_CASE("topology documents against an existing category") {
  const auto site = read_site(data("cspan.json"));
  const auto J = read_topology(data("cspan_fg.json"), site.space);
  CHECK(J == generate_topology(site.space, {sieve(site.category(), "c", {"f", "g"})}));
  CHECK(parse_topology(R"({})", site.space) == trivial_topology(site.space));
  CHECK_THROWS_AS(read_topology(data("mon2.json"), site.space), ValidationError);
}

TEST_CASE("frame documents") {
  const auto H = from_poset(read_frame(data("frm5.json")));
  CHECK(H == fixtures::frm5().algebra());
  CHECK(from_poset(parse_frame(write_frame(H))) == H);
  for (const auto& G : frame_catalog(6)) CHECK(from_poset(parse_frame(write_frame(G.algebra()))) == G.algebra());
}
