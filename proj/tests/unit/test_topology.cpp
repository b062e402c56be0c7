#include "doctest.h"

#include "demorgan/catalog.hpp"
#include "demorgan/topology.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace demorgan;
using testing_helpers::covers;
using testing_helpers::sieve;

namespace {

using Strings = std::vector<std::string>;

oracle::Family family(const GrothendieckTopology& J) {
  oracle::Family F(J.category().object_count());
  for (auto c : J.category().objects()) {
    for (const auto& S : J.covering_sieves(c)) F[c.index].insert(S.members.bits());
  }
  return F;
}

// Least brute-force topology containing every seed.
oracle::Family least_containing(const std::vector<oracle::Family>& all, const oracle::Family& seeds) {
  std::optional<oracle::Family> least;
  for (const auto& J : all) {
    bool contains = true;
    for (std::size_t c = 0; c < seeds.size(); ++c) {
      for (auto s : seeds[c]) contains = contains && J[c].count(s);
    }
    if (!contains) continue;
    if (!least) {
      least = J;
      continue;
    }
    for (std::size_t c = 0; c < J.size(); ++c) {
      std::set<oracle::Bits> both;
      for (auto s : J[c]) {
        if ((*least)[c].count(s)) both.insert(s);
      }
      (*least)[c] = both;
    }
  }
  return *least;
}

std::size_t optional_sieve_count(const FiniteCategory& C) {
  std::size_t n = 0;
  for (auto c : C.objects()) n += oracle::sieves(C, c).size() - 1;
  return n;
}

// Categories small enough for exhaustive search over cover families.
std::vector<FiniteCategory> tiny() {
  std::vector<FiniteCategory> out;
  for (auto& C : testing_helpers::sweep(3, 3)) {
    if (optional_sieve_count(C) <= 11) out.push_back(std::move(C));
  }
  return out;
}

struct Cspan {
  std::shared_ptr<const SieveSpace> space = SieveSpace::build(fixtures::cspan());
  const FiniteCategory& C = space->category();
};

}  // namespace

TEST_CASE("validating cover families") {
  Cspan s;
  auto maxes = [&] {
    std::vector<Sieve> out;
    for (auto c : s.C.objects()) out.push_back(maximal_sieve(s.C, c));
    return out;
  };
  CHECK(validate_topology(s.space, maxes()) == trivial_topology(s.space));

  auto fg = maxes();
  fg.push_back(sieve(s.C, "c", {"f", "g"}));
  CHECK(covers(validate_topology(s.space, fg)) == Strings{"c:{f, g}"});

  auto f = maxes();
  f.push_back(sieve(s.C, "c", {"f"}));
  try {
    validate_topology(s.space, f);
    FAIL("expected a stability violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotStable);
    CHECK(std::string(e.what()).find("arrow g") != std::string::npos);
  }

  try {
    validate_topology(s.space, {maximal_sieve(s.C, s.C.object("a"))});
    FAIL("expected a maximality violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotMaximalClosed);
  }

  // Covering by the empty sieve forces every sieve to cover, through transitivity.
  auto m = SieveSpace::build(fixtures::mon2());
  const auto& M = m->category();
  try {
    validate_topology(m, {maximal_sieve(M, M.object("*")), empty_sieve(M.object("*"))});
    FAIL("expected a transitivity violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotTransitive);
  }
}

TEST_CASE("generated topologies") {
  Cspan s;
  CHECK(covers(generate_topology(s.space, {sieve(s.C, "c", {"f", "g"})})) == Strings{"c:{f, g}"});
  CHECK(generate_topology(s.space, {}) == trivial_topology(s.space));

  const auto J = generate_topology(s.space, {empty_sieve(s.C.object("a"))});
  const auto all = oracle::all_topologies(s.C);
  oracle::Family seeds(3);
  seeds[s.C.object("a").index].insert(0);
  CHECK(family(J) == least_containing(all, seeds));
  CHECK_FALSE(J.covers(sieve(s.C, "c", {"g"})));
  CHECK_FALSE(J.covers(sieve(s.C, "c", {"f", "g"})));
  CHECK_FALSE(no_empty_covers(J));
}

TEST_CASE("enumeration and generation agree with exhaustive search") {
  for (const auto& C : tiny()) {
    const auto space = SieveSpace::build(C);
    const auto all = oracle::all_topologies(C);
    const auto got = enumerate_topologies(space);
    std::set<oracle::Family> want(all.begin(), all.end());
    std::set<oracle::Family> have;
    for (const auto& J : got) have.insert(family(J));
    CHECK(have == want);
    CHECK(got.size() == all.size());

    for (auto c : C.objects()) {
      for (const auto& R : space->sieves_on(c)) {
        oracle::Family seeds(C.object_count());
        seeds[c.index].insert(R.members.bits());
        CHECK(family(generate_topology(space, {R})) == least_containing(all, seeds));
      }
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
      for (std::size_t k = 0; k < got.size(); ++k) {
        const auto& A = got[i];
        const auto& B = got[k];
        const auto fa = family(A);
        const auto fb = family(B);
        bool le = true;
        oracle::Family meet(C.object_count());
        oracle::Family both = fa;
        for (std::size_t o = 0; o < fa.size(); ++o) {
          for (auto x : fa[o]) {
            if (fb[o].count(x)) meet[o].insert(x);
            else le = false;
          }
          both[o].insert(fb[o].begin(), fb[o].end());
        }
        CHECK(leq_topology(A, B) == le);
        CHECK(family(meet_topology(A, B)) == meet);
        CHECK(family(join_topology(A, B)) == least_containing(all, both));
      }
    }
  }
}

TEST_CASE("lattice operations") {
  Cspan s;
  const auto T = trivial_topology(s.space);
  const auto G = generate_topology(s.space, {sieve(s.C, "c", {"f", "g"})});
  CHECK(leq_topology(T, G));
  CHECK(leq_topology(G, dense_topology(s.space)));
  CHECK(leq_topology(G, G));
  CHECK(meet_topology(G, T) == T);
  CHECK(join_topology(G, T) == G);
  CHECK(join_topology(T, G) == G);

  const auto other = trivial_topology(SieveSpace::build(fixtures::mon2()));
  CHECK_THROWS_AS(leq_topology(T, other), ValidationError);
  CHECK_THROWS_AS(join_topology(T, other), ValidationError);
}

TEST_CASE("closure of sieves") {
  Cspan s;
  const auto T = trivial_topology(s.space);
  CHECK(closure_of_sieve(T, sieve(s.C, "c", {"f"})) == sieve(s.C, "c", {"f"}));
  CHECK(is_closed(T, sieve(s.C, "c", {"f"})));
  const auto G = generate_topology(s.space, {sieve(s.C, "c", {"f", "g"})});
  CHECK(closure_of_sieve(G, sieve(s.C, "c", {"f", "g"})) == maximal_sieve(s.C, s.C.object("c")));
  CHECK_FALSE(is_closed(G, sieve(s.C, "c", {"f", "g"})));
  for (const auto& J : enumerate_topologies(s.space)) {
    for (auto c : s.C.objects()) {
      CHECK(is_closed(J, maximal_sieve(s.C, c)));
      for (const auto& R : s.space->sieves_on(c)) {
        oracle::Bits want = 0;
        for (auto f : s.C.arrows()) {
          if (s.C.cod(f) == c && J.covers(make_sieve(s.C, s.C.dom(f), ArrowSet(oracle::pullback(s.C, f, R.members.bits())))))
            want |= oracle::bit(f);
        }
        CHECK(closure_of_sieve(J, R).members.bits() == want);
      }
    }
  }
}

TEST_CASE("empty covers") {
  Cspan s;
  CHECK(no_empty_covers(trivial_topology(s.space)));
  CHECK_FALSE(no_empty_covers(generate_topology(s.space, {empty_sieve(s.C.object("a"))})));
  CHECK(no_empty_covers(dense_topology(s.space)));
}

TEST_CASE("dense topology") {
  auto m = SieveSpace::build(fixtures::mon2());
  CHECK(covers(dense_topology(m)) == Strings{"*:{e}"});
  Cspan s;
  CHECK(covers(dense_topology(s.space)) == Strings{"c:{f, g}"});
  for (const auto& C : testing_helpers::sweep(3, 3)) {
    const auto space = SieveSpace::build(C);
    const auto D = dense_topology(space);
    for (auto c : C.objects()) {
      for (const auto& R : space->sieves_on(c)) {
        bool stable = true;
        for (auto f : C.arrows()) {
          if (C.cod(f) == c && oracle::pullback(C, f, R.members.bits()) == 0) stable = false;
        }
        CHECK(D.covers(R) == stable);
        if (right_ore(C) && !R.empty()) CHECK(stable);
      }
    }
  }
}

TEST_CASE("De Morgan topology") {
  CHECK(demorgan_topology(SieveSpace::build(fixtures::mon2())) ==
        trivial_topology(SieveSpace::build(fixtures::mon2())));
  Cspan s;
  CHECK(covers(demorgan_topology(s.space)) == Strings{"c:{f, g}"});
  const auto D3 = SieveSpace::build(fixtures::discrete(3));
  CHECK(demorgan_topology(D3) == trivial_topology(D3));
}

TEST_CASE("reduced site") {
  Cspan s;
  const auto T = trivial_topology(s.space);
  CHECK(reduced_site(T) == T);

  const auto J = generate_topology(s.space, {empty_sieve(s.C.object("a"))});
  const auto R = reduced_site(J);
  const auto& K = R.category();
  CHECK(K.object_count() == 2);
  CHECK(K.find_object("b").has_value());
  CHECK(K.find_object("c").has_value());
  CHECK_FALSE(K.find_object("a").has_value());
  CHECK(K.non_identity_arrow_count() == 1);
  CHECK(K.find_arrow("g").has_value());
  CHECK(no_empty_covers(R));
  CHECK(oracle::is_topology(K, family(R)));
  CHECK(covers(R).empty());
  CHECK(R == trivial_topology(R.space_ptr()));
  CHECK(reduced_site(R) == R);

  const auto all_empty = generate_topology(s.space, {empty_sieve(s.C.object("c"))});
  CHECK_THROWS_AS(reduced_site(all_empty), ValidationError);
}

TEST_CASE("reduced sites over small categories") {
  for (const auto& C : testing_helpers::sweep(3, 3)) {
    const auto space = SieveSpace::build(C);
    for (const auto& J : enumerate_topologies(space)) {
      bool all_covered = true;
      for (auto c : C.objects()) all_covered = all_covered && J.covers(empty_sieve(c));
      if (all_covered) {
        CHECK_THROWS_AS(reduced_site(J), ValidationError);
        continue;
      }
      const auto R = reduced_site(J);
      CHECK(no_empty_covers(R));
      CHECK(oracle::is_topology(R.category(), family(R)));
      CHECK(reduced_site(R) == R);
    }
  }
}

TEST_CASE("De Morgan and Boolean decisions on the reference sites") {
  Cspan s;
  const auto T = trivial_topology(s.space);
  CHECK_FALSE(is_demorgan_general(T));
  const auto w = demorgan_witness_general(T);
  REQUIRE(w.has_value());
  CHECK(w->sieve == sieve(s.C, "c", {"f"}));
  CHECK(w->criterion == sieve(s.C, "c", {"f", "g"}));
  CHECK_FALSE(is_demorgan_reduced(T));

  const auto G = generate_topology(s.space, {sieve(s.C, "c", {"f", "g"})});
  CHECK(is_demorgan_general(G));
  CHECK(is_demorgan_reduced(G));
  CHECK(is_boolean_general(G));
  CHECK(is_boolean_reduced(G));

  auto m = SieveSpace::build(fixtures::mon2());
  const auto TM = trivial_topology(m);
  CHECK(is_demorgan_general(TM));
  CHECK(is_demorgan_reduced(TM));
  CHECK_FALSE(is_boolean_general(TM));
  CHECK_FALSE(is_boolean_reduced(TM));
  const auto bw = boolean_witness_general(TM);
  REQUIRE(bw.has_value());
  CHECK(bw->sieve == sieve(m->category(), "*", {"e"}));

  const auto A = generate_topology(s.space, {empty_sieve(s.C.object("a"))});
  CHECK(is_demorgan_general(A));
  CHECK(is_demorgan_reduced(A));
}

TEST_CASE("site DeMorganization and Booleanization") {
  Cspan s;
  const auto T = trivial_topology(s.space);
  const auto G = generate_topology(s.space, {sieve(s.C, "c", {"f", "g"})});
  CHECK(demorganize_site(T) == G);
  CHECK(booleanize_site(T) == G);
  CHECK(demorganize_site(G) == G);
  CHECK(booleanize_site(G) == G);

  auto m = SieveSpace::build(fixtures::mon2());
  CHECK(demorganize_site(trivial_topology(m)) == trivial_topology(m));
  CHECK(covers(booleanize_site(trivial_topology(m))) == Strings{"*:{e}"});
}

TEST_CASE("non-De Morgan witness") {
  Cspan s;
  const auto w = countroc_witness(trivial_topology(s.space));
  REQUIRE(w.has_value());
  CHECK(s.C.name(w->object) == "c");
  CHECK(s.C.name(w->f) == "f");
  CHECK(s.C.name(w->g) == "g");
  CHECK_FALSE(countroc_witness(trivial_topology(SieveSpace::build(fixtures::mon2()))).has_value());
  CHECK_FALSE(countroc_witness(generate_topology(s.space, {sieve(s.C, "c", {"f", "g"})})).has_value());
}

TEST_CASE("enumeration bounds and small cases") {
  const auto one = SieveSpace::build(fixtures::discrete(1));
  CHECK(enumerate_topologies(one).size() == 2);
  const auto all = enumerate_topologies(SieveSpace::build(fixtures::cspan()));
  CHECK(all.front() == trivial_topology(SieveSpace::build(fixtures::cspan())));
  for (const auto& J : all) {
    std::vector<Sieve> listed;
    for (auto c : J.category().objects()) {
      for (const auto& S : J.covering_sieves(c)) listed.push_back(S);
    }
    CHECK(validate_topology(J.space_ptr(), listed) == J);
  }
  CHECK_THROWS_AS(enumerate_topologies(SieveSpace::build(fixtures::cspan()), 1), BoundExceeded);
}

TEST_CASE("criteria over small categories") {
  for (const auto& C : testing_helpers::sweep(3, 3)) {
    const auto space = SieveSpace::build(C);
    const auto M = demorgan_topology(space);
    const auto D = dense_topology(space);
    const auto& K = space->category();
    CHECK(right_ore(K) == is_demorgan_general(trivial_topology(space)));

    std::vector<Sieve> bs;
    for (auto c : K.objects()) {
      for (const auto& R : space->sieves_on(c)) bs.push_back(b_sieve(K, R));
    }
    CHECK(generate_topology(space, bs) == D);

    for (const auto& J : enumerate_topologies(space)) {
      const bool dm = is_demorgan_general(J);
      const bool bo = is_boolean_general(J);
      CHECK(dm == is_demorgan_reduced(J));
      CHECK(bo == is_boolean_reduced(J));
      if (countroc_witness(J)) CHECK_FALSE(dm);
      if (!no_empty_covers(J)) continue;
      CHECK(dm == leq_topology(M, J));
      CHECK(bo == leq_topology(D, J));
      if (right_ore(K)) CHECK(dm);
    }
  }
}
