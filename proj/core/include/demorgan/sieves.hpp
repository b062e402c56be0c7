#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "demorgan/fincat.hpp"

namespace demorgan {

class GrothendieckTopology;

/// Sieve enumeration refuses objects with more incoming arrows than this.
inline constexpr std::size_t kDefaultMaxSieveArrows = 16;

/// A set of arrows into `base`, closed under precomposition.
struct Sieve {
  ObjectId base;
  ArrowSet members;

  bool contains(ArrowId f) const { return members.contains(f); }
  bool empty() const { return members.empty(); }
  friend bool operator==(const Sieve&, const Sieve&) = default;
  friend auto operator<=>(const Sieve&, const Sieve&) = default;
};

Sieve maximal_sieve(const FiniteCategory& C, ObjectId c);
Sieve empty_sieve(ObjectId c);

/// Throws ValidationError(NotASieve / WrongCodomain) if `members` is not a sieve on c.
Sieve make_sieve(const FiniteCategory& C, ObjectId c, ArrowSet members);

/// Smallest sieve on c containing `gens`. Throws WrongCodomain.
Sieve generate_sieve(const FiniteCategory& C, ObjectId c, ArrowSet gens);

/// f*(R) = {g | g then f in R}. Throws BaseMismatch unless cod(f) = base(R).
Sieve pullback_sieve(const FiniteCategory& C, ArrowId f, const Sieve& R);

bool is_stably_nonempty(const FiniteCategory& C, const Sieve& R);

/// M_R: arrows along which R pulls back to the empty sieve or to a stably
/// non-empty sieve.
Sieve m_sieve(const FiniteCategory& C, const Sieve& R);

/// B_R: arrows in R together with arrows along which R pulls back to empty.
Sieve b_sieve(const FiniteCategory& C, const Sieve& R);

/// R_c: arrows into c whose domain is covered by the empty sieve.
Sieve r_sieve(const GrothendieckTopology& J, ObjectId c);

/// All sieves on c, ordered by size then bitmask (empty first, maximal last).
/// Throws BoundExceeded when c has more than `max_arrows` incoming arrows.
std::vector<Sieve> enumerate_sieves(const FiniteCategory& C, ObjectId c,
                                    std::size_t max_arrows = kDefaultMaxSieveArrows);

/// "{f, g}" with arrows in index order.
std::string format_sieve(const FiniteCategory& C, const Sieve& R);

/// Index of every sieve of a category with precomputed pullbacks. Topologies
/// store their covers as bit vectors over these indices.
class SieveSpace {
 public:
  using Index = std::uint32_t;

  static std::shared_ptr<const SieveSpace> build(std::shared_ptr<const FiniteCategory> C,
                                                 std::size_t max_sieve_arrows = kDefaultMaxSieveArrows);
  static std::shared_ptr<const SieveSpace> build(FiniteCategory C,
                                                 std::size_t max_sieve_arrows = kDefaultMaxSieveArrows);

  const FiniteCategory& category() const { return *category_; }
  const std::shared_ptr<const FiniteCategory>& category_ptr() const { return category_; }
  std::size_t max_sieve_arrows() const { return max_sieve_arrows_; }

  std::span<const Sieve> sieves_on(ObjectId c) const { return sieves_[c.index]; }
  std::size_t count(ObjectId c) const { return sieves_[c.index].size(); }
  const Sieve& sieve(ObjectId c, Index i) const { return sieves_[c.index][i]; }

  /// Throws ValidationError(NotASieve) for a set that is not a sieve on its base.
  Index index_of(const Sieve& R) const;
  Index index_of(ObjectId c, ArrowSet members) const;

  Index empty_index(ObjectId) const { return 0; }
  Index maximal_index(ObjectId c) const { return static_cast<Index>(sieves_[c.index].size() - 1); }

  /// Index on dom(f) of f*(R_i) for the i-th sieve R_i on cod(f).
  Index pullback(ArrowId f, Index i) const { return pullbacks_[f.index][i]; }

 private:
  SieveSpace() = default;

  std::shared_ptr<const FiniteCategory> category_;
  std::size_t max_sieve_arrows_ = kDefaultMaxSieveArrows;
  std::vector<std::vector<Sieve>> sieves_;
  std::vector<std::unordered_map<std::uint64_t, Index>> lookup_;
  std::vector<std::vector<Index>> pullbacks_;
};

}  // namespace demorgan
