#include "doctest.h"

#include <map>

#include "demorgan/catalog.hpp"
#include "support/oracles.hpp"

using namespace demorgan;

namespace {

ErrorKind kind_of(const RawCategory& raw) {
  try {
    validate_category(raw);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ErrorKind::DuplicateName;
}

RawCategory cspan_raw() { return RawCategory{{"a", "b", "c"}, {{"f", "a", "c"}, {"g", "b", "c"}}, {}, {}}; }

}  // namespace

TEST_CASE("cospan has five arrows with synthesized identities") {
  const auto C = fixtures::cspan();
  CHECK(C.object_count() == 3);
  CHECK(C.arrow_count() == 5);
  CHECK(C.non_identity_arrow_count() == 2);
  for (auto c : C.objects()) {
    CHECK(C.name(C.identity(c)) == "id_" + C.name(c));
    CHECK(C.is_identity(C.identity(c)));
  }
  CHECK_FALSE(C.compose(C.arrow("f"), C.arrow("g")).has_value());
  CHECK(C.compose(C.arrow("id_a"), C.arrow("f")) == C.arrow("f"));
  CHECK(C.compose(C.arrow("f"), C.arrow("id_c")) == C.arrow("f"));
}

TEST_CASE("idempotent monoid has two arrows") {
  const auto C = fixtures::mon2();
  CHECK(C.arrow_count() == 2);
  const auto e = C.arrow("e");
  CHECK(C.compose(e, e) == e);
}

TEST_CASE("composite of a non-composable pair is rejected") {
  auto raw = cspan_raw();
  raw.compose.push_back({"f", "g", "f"});
  CHECK(kind_of(raw) == ErrorKind::NotComposable);
}

TEST_CASE("validation errors") {
  SUBCASE("dangling object") {
    CHECK(kind_of(RawCategory{{"a"}, {{"f", "a", "b"}}, {}, {}}) == ErrorKind::DanglingReference);
  }
  SUBCASE("dangling arrow in composite") {
    CHECK(kind_of(RawCategory{{"a"}, {{"e", "a", "a"}}, {{"e", "x", "e"}}, {}}) == ErrorKind::DanglingReference);
  }
  SUBCASE("duplicate names") {
    CHECK(kind_of(RawCategory{{"a", "a"}, {}, {}, {}}) == ErrorKind::DuplicateName);
    CHECK(kind_of(RawCategory{{"a"}, {{"e", "a", "a"}, {"e", "a", "a"}}, {}, {}}) == ErrorKind::DuplicateName);
  }
  SUBCASE("missing composite") {
    CHECK(kind_of(RawCategory{{"a"}, {{"e", "a", "a"}}, {}, {}}) == ErrorKind::MissingComposite);
  }
  SUBCASE("ill-typed composite") {
    CHECK(kind_of(RawCategory{{"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}}, {{"f", "g", "f"}}, {}}) ==
          ErrorKind::IllTypedComposite);
  }
  SUBCASE("conflicting composite") {
    CHECK(kind_of(RawCategory{{"a"}, {{"e", "a", "a"}}, {{"e", "e", "e"}, {"e", "e", "id_a"}}, {}}) ==
          ErrorKind::ConflictingComposite);
  }
  SUBCASE("broken associativity") {
    // x then y = y, y then x = x but x then x = id breaks (x y) x = x (y x).
    RawCategory raw{{"*"},
                    {{"x", "*", "*"}, {"y", "*", "*"}},
                    {{"x", "x", "id_*"}, {"x", "y", "y"}, {"y", "x", "x"}, {"y", "y", "y"}},
                    {}};
    CHECK(kind_of(raw) == ErrorKind::BrokenAssociativity);
  }
  SUBCASE("declared identity that is not an identity") {
    RawCategory raw{{"*"}, {{"i", "*", "*"}, {"e", "*", "*"}}, {{"e", "e", "e"}, {"i", "i", "i"}, {"e", "i", "e"},
                                                               {"i", "e", "i"}}, {{"*", "i"}}};
    CHECK(kind_of(raw) == ErrorKind::BrokenIdentity);
  }
  SUBCASE("bound") {
    RawCategory raw;
    for (int i = 0; i < 65; ++i) raw.objects.push_back("o" + std::to_string(i));
    CHECK_THROWS_AS(validate_category(raw), BoundExceeded);
  }
}

TEST_CASE("validation is idempotent") {
  for (const auto& [name, C] : fixtures::all()) {
    CAPTURE(name);
    CHECK(validate_category(C.to_raw()) == C);
  }
}

TEST_CASE("arrows into an object") {
  const auto C = fixtures::cspan();
  CHECK(arrow_names(C, arrows_into(C, C.object("c"))) == std::vector<std::string>{"f", "g", "id_c"});
  CHECK(arrow_names(C, arrows_into(C, C.object("a"))) == std::vector<std::string>{"id_a"});
  const auto M = fixtures::mon2();
  CHECK(arrow_names(M, arrows_into(M, M.object("*"))) == std::vector<std::string>{"id", "e"});
  CHECK_THROWS_AS(arrows_into(C, ObjectId{7}), ValidationError);
  CHECK_THROWS_AS(C.object("z"), ValidationError);
  CHECK_THROWS_AS(C.arrow("z"), ValidationError);
}

TEST_CASE("monomorphisms") {
  const auto C = fixtures::cspan();
  CHECK(is_mono(C, C.arrow("f")));
  const auto M = fixtures::mon2();
  // id then e = e then e, so e is not monic.
  CHECK_FALSE(is_mono(M, M.arrow("e")));
  for (const auto& [name, X] : fixtures::all()) {
    CAPTURE(name);
    for (auto c : X.objects()) CHECK(is_mono(X, X.identity(c)));
    for (auto f : X.arrows()) CHECK(is_mono(X, f) == oracle::is_mono(X, f));
  }
}

TEST_CASE("right Ore condition") {
  CHECK_FALSE(right_ore(fixtures::cspan()));
  CHECK(right_ore(fixtures::mon2()));
  CHECK(right_ore(fixtures::discrete(3)));
  CHECK_FALSE(right_ore(fixtures::ordinal_injections_op()));
  for (const auto& [name, C] : fixtures::all()) {
    CAPTURE(name);
    CHECK(right_ore(C) == oracle::right_ore(C));
  }
  for (const auto& C : enumerate_small_categories(3, 3)) CHECK(right_ore(C) == oracle::right_ore(C));
}

TEST_CASE("opposite is an involution") {
  for (const auto& [name, C] : fixtures::all()) {
    CAPTURE(name);
    const auto op = opposite(C);
    CHECK(op.arrow_count() == C.arrow_count());
    CHECK(opposite(op) == validate_category(C.to_raw()));
  }
}

TEST_CASE("small category counts match the known sequences") {
  // Monoids of order 1..5 up to isomorphism.
  const std::vector<std::size_t> monoids{1, 2, 7, 35, 228};
  std::vector<std::size_t> got(5, 0);
  for (const auto& C : enumerate_small_categories(1, 4)) ++got[C.non_identity_arrow_count()];
  CHECK(got == monoids);

  // Categories with 1..4 arrows in total up to isomorphism.
  const std::vector<std::size_t> by_total{1, 3, 11, 55};
  std::vector<std::size_t> totals(4, 0);
  for (const auto& C : enumerate_small_categories(4, 3)) {
    if (C.arrow_count() <= 4) ++totals[C.arrow_count() - 1];
  }
  CHECK(totals == by_total);
}

TEST_CASE("enumerated categories are pairwise non-isomorphic") {
  // Explicit search over object and arrow bijections.
  const auto cats = enumerate_small_categories(3, 2);
  auto iso = [](const FiniteCategory& A, const FiniteCategory& B) {
    if (A.object_count() != B.object_count() || A.arrow_count() != B.arrow_count()) return false;
    std::vector<std::uint32_t> op(A.object_count());
    std::iota(op.begin(), op.end(), 0U);
    do {
      std::vector<std::uint32_t> ap(A.arrow_count());
      std::iota(ap.begin(), ap.end(), 0U);
      do {
        bool ok = true;
        for (auto f : A.arrows()) {
          const ArrowId g{ap[f.index]};
          if (B.dom(g).index != op[A.dom(f).index] || B.cod(g).index != op[A.cod(f).index]) ok = false;
        }
        for (auto f : A.arrows()) {
          for (auto g : A.arrows()) {
            if (!ok) break;
            const auto h = A.compose(f, g);
            const auto k = B.compose(ArrowId{ap[f.index]}, ArrowId{ap[g.index]});
            if (h.has_value() != k.has_value() || (h && ap[h->index] != k->index)) ok = false;
          }
        }
        if (ok) return true;
      } while (std::next_permutation(ap.begin(), ap.end()));
    } while (std::next_permutation(op.begin(), op.end()));
    return false;
  };
  for (std::size_t i = 0; i < cats.size(); ++i) {
    for (std::size_t j = i + 1; j < cats.size(); ++j) CHECK_FALSE(iso(cats[i], cats[j]));
  }
}
