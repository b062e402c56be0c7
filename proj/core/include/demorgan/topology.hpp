#pragma once

// Grothendieck topologies on a finite category, stored extensionally as the
// full set of covering sieves on every object.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "demorgan/sieves.hpp"

namespace demorgan {

/// Whole-lattice enumeration refuses categories with more non-identity arrows.
inline constexpr std::size_t kDefaultMaxEnumArrows = 6;

class GrothendieckTopology {
 public:
  using Covers = std::vector<std::vector<char>>;  // object -> sieve index -> covering?

  const SieveSpace& space() const { return *space_; }
  const std::shared_ptr<const SieveSpace>& space_ptr() const { return space_; }
  const FiniteCategory& category() const { return space_->category(); }

  bool covers(const Sieve& R) const { return covers_[R.base.index][space_->index_of(R)] != 0; }
  bool covers(ObjectId c, SieveSpace::Index i) const { return covers_[c.index][i] != 0; }

  /// Covering sieves on c in sieve-space order.
  std::vector<Sieve> covering_sieves(ObjectId c) const;
  std::size_t cover_count() const;

  const Covers& cover_table() const { return covers_; }

  /// Same category (structurally) and same covering sieves.
  friend bool operator==(const GrothendieckTopology& a, const GrothendieckTopology& b);

 private:
  friend class TopologyAccess;
  GrothendieckTopology(std::shared_ptr<const SieveSpace> space, Covers covers)
      : space_(std::move(space)), covers_(std::move(covers)) {}

  std::shared_ptr<const SieveSpace> space_;
  Covers covers_;
};

/// Checks maximality, stability, transitivity and superset closure, in that
/// order, of exactly the listed cover sets. Throws ValidationError with a
/// witness (object, sieve, arrow) for the first violated axiom.
GrothendieckTopology validate_topology(std::shared_ptr<const SieveSpace> space, const std::vector<Sieve>& covers);

/// Only maximal sieves cover.
GrothendieckTopology trivial_topology(std::shared_ptr<const SieveSpace> space);

/// Smallest topology in which every seed covers, by fixpoint saturation.
GrothendieckTopology generate_topology(std::shared_ptr<const SieveSpace> space, const std::vector<Sieve>& seeds);

/// Throws ValidationError(CategoryMismatch) for topologies on different categories.
bool leq_topology(const GrothendieckTopology& J1, const GrothendieckTopology& J2);
GrothendieckTopology meet_topology(const GrothendieckTopology& J1, const GrothendieckTopology& J2);
GrothendieckTopology join_topology(const GrothendieckTopology& J1, const GrothendieckTopology& J2);

/// {f into base(R) | f*(R) covers dom f}.
Sieve closure_of_sieve(const GrothendieckTopology& J, const Sieve& R);
bool is_closed(const GrothendieckTopology& J, const Sieve& R);

bool no_empty_covers(const GrothendieckTopology& J);

/// Covers are exactly the stably non-empty sieves.
GrothendieckTopology dense_topology(std::shared_ptr<const SieveSpace> space);

/// Generated by M_R for every sieve R of the category.
GrothendieckTopology demorgan_topology(std::shared_ptr<const SieveSpace> space);

/// Full subcategory on the objects not covered by the empty sieve, with the
/// induced topology: S covers c iff the sieve S generates in the ambient
/// category, together with R_c, covers c. Returns J itself when J has no
/// empty covers. Throws ValidationError(EmptyReduction) if every object is
/// covered by the empty sieve.
GrothendieckTopology reduced_site(const GrothendieckTopology& J);

/// A J-closed sieve whose criterion sieve fails to cover its base.
struct CriterionWitness {
  std::shared_ptr<const FiniteCategory> category;  // the category the sieves live in
  ObjectId object;
  Sieve sieve;
  Sieve criterion;
};

/// Sh(C, J) is De Morgan, decided on (C, J) directly: for every J-closed R the
/// sieve {f | f*(R) = R_d, or every g with g*(f*(R)) = R_e lies in R_d} covers.
bool is_demorgan_general(const GrothendieckTopology& J);
std::optional<CriterionWitness> demorgan_witness_general(const GrothendieckTopology& J);

/// Decided on the reduced site as M <= J~. Witness sieves live in the reduced
/// category and need not be closed.
bool is_demorgan_reduced(const GrothendieckTopology& J);
std::optional<CriterionWitness> demorgan_witness_reduced(const GrothendieckTopology& J);

/// Sh(C, J) is Boolean: for every J-closed R, {f | f*(R) = R_d or f in R} covers.
bool is_boolean_general(const GrothendieckTopology& J);
std::optional<CriterionWitness> boolean_witness_general(const GrothendieckTopology& J);

/// On the reduced site: B_R covers for every closed R. When the reduced
/// category is right Ore the result is cross-checked against "every non-empty
/// closed sieve is maximal"; a disagreement throws std::logic_error.
bool is_boolean_reduced(const GrothendieckTopology& J);
std::optional<CriterionWitness> boolean_witness_reduced(const GrothendieckTopology& J);

/// Join of J~ with the De Morgan topology of the reduced category.
GrothendieckTopology demorganize_site(const GrothendieckTopology& J);

/// Join of J~ with the dense topology of the reduced category. Also checks
/// that the dense topology is generated by the sieves B_R (std::logic_error if not).
GrothendieckTopology booleanize_site(const GrothendieckTopology& J);

/// Every Grothendieck topology on the category, deduplicated and ordered by
/// number of covers, then by cover table. Throws BoundExceeded above
/// `max_enum_arrows` non-identity arrows.
std::vector<GrothendieckTopology> enumerate_topologies(std::shared_ptr<const SieveSpace> space,
                                                       std::size_t max_enum_arrows = kDefaultMaxEnumArrows);

struct CountrocWitness {
  ObjectId object;
  ArrowId f;
  ArrowId g;
};

/// An object whose only cover is the maximal sieve, with arrows f, g into it
/// such that f*((g)) is empty. Such a witness rules out De Morgan's law.
/// Returns nullopt when J has an empty cover.
std::optional<CountrocWitness> countroc_witness(const GrothendieckTopology& J);

/// "a: {..} {..}; b: ..." listing non-maximal covers; maximal sieves implied.
std::string format_topology(const GrothendieckTopology& J);

}  // namespace demorgan
