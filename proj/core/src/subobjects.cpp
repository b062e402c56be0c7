#include "demorgan/subobjects.hpp"

#include <stdexcept>

namespace demorgan {

namespace {

ArrowSet pointwise_implication(const FiniteCategory& C, const Sieve& R, const Sieve& S) {
  ArrowSet out;
  for (auto f : C.arrows_into(R.base)) {
    if (pullback_sieve(C, f, R).members.subset_of(pullback_sieve(C, f, S).members)) out.insert(f);
  }
  return out;
}

void check_operations(const GrothendieckTopology& J, const ClosedSieveAlgebra& A) {
  const auto& C = J.category();
  const auto& H = A.algebra;
  const auto& R = A.carrier;
  if (R[H.bottom()] != closure_of_sieve(J, empty_sieve(A.base))) {
    throw std::logic_error("bottom of the closed sieve algebra is not the closure of the empty sieve");
  }
  for (Element a = 0; a < H.size(); ++a) {
    for (Element b = 0; b < H.size(); ++b) {
      if (R[H.meet(a, b)].members != (R[a].members & R[b].members)) {
        throw std::logic_error("closed sieve meet differs from intersection");
      }
      if (R[H.join(a, b)] != closure_of_sieve(J, Sieve{A.base, R[a].members | R[b].members})) {
        throw std::logic_error("closed sieve join differs from closure of the union");
      }
      if (R[H.implies(a, b)].members != pointwise_implication(C, R[a], R[b])) {
        throw std::logic_error("closed sieve implication differs from the pointwise formula");
      }
    }
  }
}

template <class Law>
std::optional<OracleWitness> first_violation(const GrothendieckTopology& J, Law law) {
  for (auto c : J.category().objects()) {
    const auto A = closed_sieve_algebra(J, c);
    for (Element p = 0; p < A.algebra.size(); ++p) {
      if (!law(A.algebra, p)) return OracleWitness{c, A.carrier[p]};
    }
  }
  return std::nullopt;
}

}  // namespace

ClosedSieveAlgebra closed_sieve_algebra(const GrothendieckTopology& J, ObjectId c) {
  const auto& C = J.category();
  ClosedSieveAlgebra A{c, {}, {}};
  for (const auto& R : J.space().sieves_on(c)) {
    if (is_closed(J, R)) A.carrier.push_back(R);
  }
  RawOrder order;
  for (const auto& R : A.carrier) order.elements.push_back(format_sieve(C, R));
  for (std::size_t i = 0; i < A.carrier.size(); ++i) {
    for (std::size_t k = 0; k < A.carrier.size(); ++k) {
      if (i != k && A.carrier[i].members.subset_of(A.carrier[k].members)) {
        order.leq.emplace_back(order.elements[i], order.elements[k]);
      }
    }
  }
  A.algebra = from_poset(order);
  check_operations(J, A);
  return A;
}

std::optional<OracleWitness> oracle_demorgan_witness(const GrothendieckTopology& J) {
  return first_violation(J, [](const HeytingAlgebra& H, Element p) {
    return H.join(H.neg(p), H.neg(H.neg(p))) == H.top();
  });
}

std::optional<OracleWitness> oracle_boolean_witness(const GrothendieckTopology& J) {
  return first_violation(J, [](const HeytingAlgebra& H, Element p) { return H.join(p, H.neg(p)) == H.top(); });
}

bool oracle_is_demorgan(const GrothendieckTopology& J) {
  for (auto c : J.category().objects()) {
    if (!is_de_morgan_algebra(closed_sieve_algebra(J, c).algebra)) return false;
  }
  return true;
}

bool oracle_is_boolean(const GrothendieckTopology& J) {
  for (auto c : J.category().objects()) {
    if (!is_boolean_algebra(closed_sieve_algebra(J, c).algebra)) return false;
  }
  return true;
}

GrothendieckTopology frame_as_site(const Frame& F, std::size_t max_sieve_arrows) {
  const auto& H = F.algebra();
  const auto n = static_cast<Element>(H.size());
  auto arrow_name = [&](Element a, Element b) { return H.name(a) + "<=" + H.name(b); };

  RawCategory raw;
  raw.objects = H.names();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a != b && H.leq(a, b)) raw.arrows.push_back({arrow_name(a, b), H.name(a), H.name(b)});
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || !H.leq(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (c == b || !H.leq(b, c)) continue;
        raw.compose.push_back({arrow_name(a, b), arrow_name(b, c), arrow_name(a, c)});
      }
    }
  }
  auto space = SieveSpace::build(validate_category(raw), max_sieve_arrows);
  const auto& C = space->category();

  std::vector<Sieve> covers;
  for (auto c : C.objects()) {
    for (const auto& S : space->sieves_on(c)) {
      Element join = H.bottom();
      for (auto f : S.members) join = H.join(join, H.element(C.name(C.dom(f))));
      if (join == H.element(C.name(c))) covers.push_back(S);
    }
  }
  return validate_topology(std::move(space), covers);
}

}  // namespace demorgan
