#pragma once

// Independent check of the site criteria: the subobject algebra of each
// sheafified representable is the Heyting algebra of J-closed sieves on its
// object, and the sheaf topos satisfies De Morgan's law (excluded middle)
// exactly when each of these algebras does.

#include <optional>
#include <vector>

#include "demorgan/frames.hpp"
#include "demorgan/heyting.hpp"
#include "demorgan/topology.hpp"

namespace demorgan {

struct ClosedSieveAlgebra {
  ObjectId base;
  std::vector<Sieve> carrier;  // element i of `algebra` is carrier[i]
  HeytingAlgebra algebra;
};

/// Closed sieves ordered by inclusion. Lattice operations come from the
/// order alone and are checked against intersection, closure of the union and
/// the pointwise implication {f | f*(R) within f*(S)}; any disagreement throws
/// std::logic_error.
ClosedSieveAlgebra closed_sieve_algebra(const GrothendieckTopology& J, ObjectId c);

struct OracleWitness {
  ObjectId object;
  Sieve element;  // a closed sieve p with not p or not not p (resp. p or not p) below top
};

std::optional<OracleWitness> oracle_demorgan_witness(const GrothendieckTopology& J);
std::optional<OracleWitness> oracle_boolean_witness(const GrothendieckTopology& J);
bool oracle_is_demorgan(const GrothendieckTopology& J);
bool oracle_is_boolean(const GrothendieckTopology& J);

/// The frame as a poset category (an arrow "a<=b" for each a < b) with its
/// canonical topology: S covers c iff the domains of S join to c.
GrothendieckTopology frame_as_site(const Frame& F, std::size_t max_sieve_arrows = kDefaultMaxSieveArrows);

}  // namespace demorgan
