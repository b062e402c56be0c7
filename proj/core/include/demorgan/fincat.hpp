#pragma once

// Finite categories given by an explicit composition table.
//
// Arrows compose in diagrammatic order: compose(f, g) is "f then g", defined
// exactly when cod(f) == dom(g). Identities are ordinary arrows of the table.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "demorgan/error.hpp"

namespace demorgan {

struct ObjectId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

struct ArrowId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ArrowId&, const ArrowId&) = default;
};

/// Upper limit on the number of arrows (including identities) of a category.
inline constexpr std::size_t kMaxArrows = 64;

/// A set of arrows of one category, as a bitmask over arrow indices.
class ArrowSet {
 public:
  constexpr ArrowSet() = default;
  constexpr explicit ArrowSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ArrowSet single(ArrowId a) { return ArrowSet(std::uint64_t{1} << a.index); }

  constexpr bool contains(ArrowId a) const { return (bits_ >> a.index) & 1U; }
  constexpr void insert(ArrowId a) { bits_ |= std::uint64_t{1} << a.index; }
  constexpr void erase(ArrowId a) { bits_ &= ~(std::uint64_t{1} << a.index); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(ArrowSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr ArrowSet operator|(ArrowSet a, ArrowSet b) { return ArrowSet(a.bits_ | b.bits_); }
  friend constexpr ArrowSet operator&(ArrowSet a, ArrowSet b) { return ArrowSet(a.bits_ & b.bits_); }
  friend constexpr ArrowSet operator-(ArrowSet a, ArrowSet b) { return ArrowSet(a.bits_ & ~b.bits_); }
  constexpr ArrowSet& operator|=(ArrowSet o) { bits_ |= o.bits_; return *this; }
  constexpr ArrowSet& operator&=(ArrowSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(ArrowSet, ArrowSet) = default;
  friend constexpr auto operator<=>(ArrowSet a, ArrowSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = ArrowId;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr ArrowId operator*() const {
      return ArrowId{static_cast<std::uint32_t>(std::countr_zero(rest_))};
    }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Unvalidated category description, as read from a file or built in code.
struct RawCategory {
  struct Arrow {
    std::string name;
    std::string dom;
    std::string cod;
  };
  struct Composite {
    std::string first;
    std::string then;
    std::string equals;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<Composite> compose;
  /// Optional object -> identity arrow name. Missing identities are
  /// synthesized as "id_<object>".
  std::vector<std::pair<std::string, std::string>> identities;
};

class FiniteCategory {
 public:
  std::size_t object_count() const { return object_names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t non_identity_arrow_count() const { return arrows_.size() - object_names_.size(); }

  std::vector<ObjectId> objects() const;
  std::vector<ArrowId> arrows() const;

  const std::string& name(ObjectId c) const { return object_names_.at(c.index); }
  const std::string& name(ArrowId f) const { return arrows_.at(f.index).name; }

  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;
  /// Throws ValidationError(UnknownObject / UnknownArrow).
  ObjectId object(const std::string& name) const;
  ArrowId arrow(const std::string& name) const;

  ObjectId dom(ArrowId f) const { return arrows_[f.index].dom; }
  ObjectId cod(ArrowId f) const { return arrows_[f.index].cod; }
  ArrowId identity(ObjectId c) const { return identities_[c.index]; }
  bool is_identity(ArrowId f) const { return identities_[dom(f).index] == f; }

  /// "f then g"; nullopt unless cod(f) == dom(g).
  std::optional<ArrowId> compose(ArrowId f, ArrowId g) const {
    const auto r = table_[f.index * arrows_.size() + g.index];
    if (r < 0) return std::nullopt;
    return ArrowId{static_cast<std::uint32_t>(r)};
  }

  /// All arrows with codomain c (the maximal sieve on c).
  ArrowSet arrows_into(ObjectId c) const { return into_[c.index]; }
  /// All arrows with domain d.
  ArrowSet arrows_from(ObjectId d) const { return from_[d.index]; }
  /// Every arrow of the form "h then f" (the sieve generated by f).
  ArrowSet principal_sieve(ArrowId f) const { return principal_[f.index]; }

  /// Description that validates back to an equal category: identities and
  /// every non-identity composite listed explicitly.
  RawCategory to_raw() const;

  /// Structural equality: same names, typing and composition table.
  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

 private:
  friend FiniteCategory validate_category(const RawCategory& raw);

  struct ArrowInfo {
    std::string name;
    ObjectId dom;
    ObjectId cod;
  };

  std::vector<std::string> object_names_;
  std::vector<ArrowInfo> arrows_;
  std::vector<ArrowId> identities_;
  std::vector<std::int32_t> table_;  // arrow_count x arrow_count, -1 if undefined
  std::vector<ArrowSet> into_;
  std::vector<ArrowSet> from_;
  std::vector<ArrowSet> principal_;
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::unordered_map<std::string, std::uint32_t> arrow_index_;
};

/// Checks typing, identity laws and associativity; synthesizes identities.
/// Throws ValidationError naming the offending arrows.
FiniteCategory validate_category(const RawCategory& raw);

/// Throws ValidationError(UnknownObject) when c is not an object of C.
ArrowSet arrows_into(const FiniteCategory& C, ObjectId c);

bool is_mono(const FiniteCategory& C, ArrowId r);

/// Every cospan a -f-> c <-g- b completes to a commutative square.
bool right_ore(const FiniteCategory& C);

/// Names of the arrows in a set, in index order.
std::vector<std::string> arrow_names(const FiniteCategory& C, ArrowSet s);

}  // namespace demorgan
