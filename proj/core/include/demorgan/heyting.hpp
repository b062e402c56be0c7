#pragma once

// Finite Heyting algebras given by their order. Meets, joins and implications
// are tabulated once at construction.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "demorgan/error.hpp"

namespace demorgan {

/// Index of an element of a HeytingAlgebra.
using Element = std::uint32_t;

/// Unvalidated order: element names and pairs (a, b) meaning a <= b.
/// Reflexive-transitive closure is implied.
struct RawOrder {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
};

class HeytingAlgebra {
 public:
  std::size_t size() const { return names_.size(); }
  const std::string& name(Element a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(const std::string& name) const;
  /// Throws ValidationError(UnknownElement).
  Element element(const std::string& name) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element implies(Element a, Element b) const { return imp_[a * size() + b]; }
  Element neg(Element a) const { return implies(a, bottom_); }

  /// Same names, same order.
  friend bool operator==(const HeytingAlgebra& a, const HeytingAlgebra& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  friend HeytingAlgebra from_poset(const RawOrder& raw);

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> imp_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Closes the order, then tabulates meets, joins and implications by search.
/// Throws ValidationError: NotAPartialOrder, NotALattice(pair), NotResiduated(pair).
HeytingAlgebra from_poset(const RawOrder& raw);

/// Builds from a strict or non-strict order matrix (leq[a][b] != 0 means a <= b).
HeytingAlgebra from_order_matrix(const std::vector<std::string>& names, const std::vector<std::vector<char>>& leq);

/// Throws ValidationError(UnknownElement) for indices out of range.
Element implication(const HeytingAlgebra& H, Element a, Element b);
Element negation(const HeytingAlgebra& H, Element a);

/// not p or not not p = 1 for every p.
bool is_de_morgan_algebra(const HeytingAlgebra& H);
/// p or not p = 1 for every p.
bool is_boolean_algebra(const HeytingAlgebra& H);

bool is_complemented(const HeytingAlgebra& H, Element a);

/// For each r with r != 0 and not r != 0 some complemented f has f and r = 0
/// while every nonzero x disjoint from f meets r.
bool has_de_morgan_property(const HeytingAlgebra& H);

/// The only r meeting every nonzero element is 1.
bool has_boolean_property(const HeytingAlgebra& H);

/// Elements consistent with h: {h' | h' and h != 0}, ascending.
std::vector<Element> cons(const HeytingAlgebra& H, Element h);

/// Fixpoints of double negation with the induced order. Element names are
/// kept; the i-th element is the i-th regular element of H in index order.
HeytingAlgebra regular_elements(const HeytingAlgebra& H);
std::vector<Element> regular_element_indices(const HeytingAlgebra& H);

/// Sub-order of H on the given elements (names kept, order as given).
HeytingAlgebra induced_suborder(const HeytingAlgebra& H, const std::vector<Element>& elements);

/// True if some bijection of elements preserves and reflects the order.
bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b);

/// All lattices with 1..max_size elements up to isomorphism, each built from
/// a partial order on its non-extremal elements with 0 and 1 adjoined.
/// Elements are named "0", "1" and "x1".."x<n-2>".
std::vector<RawOrder> lattice_catalog(std::size_t max_size);

/// All Heyting algebras with 1..max_size elements up to isomorphism: the
/// members of the lattice catalog that are residuated.
std::vector<HeytingAlgebra> heyting_catalog(std::size_t max_size);

}  // namespace demorgan
