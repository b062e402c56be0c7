#pragma once

// Finite frames and their nuclei. Every finite Heyting algebra is a frame, so
// a Frame is a thin wrapper; nuclei are tables over its element indices.

#include <utility>
#include <vector>

#include "demorgan/heyting.hpp"

namespace demorgan {

class Frame {
 public:
  explicit Frame(HeytingAlgebra algebra) : algebra_(std::move(algebra)) {}

  const HeytingAlgebra& algebra() const { return algebra_; }
  std::size_t size() const { return algebra_.size(); }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  HeytingAlgebra algebra_;
};

/// Inflationary, idempotent, meet-preserving endomap, as a table indexed by element.
struct Nucleus {
  std::vector<Element> table;

  Element operator()(Element a) const { return table[a]; }
  friend bool operator==(const Nucleus&, const Nucleus&) = default;
};

/// Throws ValidationError: NotInflationary(a), NotIdempotent(a), NotMeetPreserving(a, b),
/// or UnknownElement for a table of the wrong size or with out-of-range values.
Nucleus validate_nucleus(const Frame& F, std::vector<Element> table);

Nucleus identity_nucleus(const Frame& F);
Nucleus top_nucleus(const Frame& F);

/// x -> (a -> x).
Nucleus open_nucleus(const Frame& F, Element a);
/// x -> a or x.
Nucleus closed_nucleus(const Frame& F, Element a);

/// Pointwise order.
bool nucleus_leq(const Frame& F, const Nucleus& j, const Nucleus& k);
/// Pointwise meet.
Nucleus nucleus_meet(const Frame& F, const Nucleus& j, const Nucleus& k);
/// Least nucleus above both: its fixset is the intersection of the fixsets.
Nucleus nucleus_join(const Frame& F, const Nucleus& j, const Nucleus& k);

/// The nucleus whose fixpoints are exactly `fixed` (must be closed under
/// meets and under x -> s for s in the set); x maps to the least fixed element above it.
Nucleus nucleus_from_fixset(const Frame& F, const std::vector<Element>& fixed);

/// All nuclei, in lexicographic table order. Throws BoundExceeded above `max_size` elements.
std::vector<Nucleus> enumerate_nuclei(const Frame& F, std::size_t max_size = 8);

/// Fixed elements of j in index order.
std::vector<Element> fixpoints(const Frame& F, const Nucleus& j);

/// The frame of fixed elements: meets inherited, joins j(a or b). The i-th
/// element is the i-th fixpoint, under its original name.
Frame fixset(const Frame& F, const Nucleus& j);

/// j(0) = 0.
bool is_dense_nucleus(const Frame& F, const Nucleus& j);

/// c(j(0)).
Nucleus closure_nucleus(const Frame& F, const Nucleus& j);

struct DenseClosedFactorization {
  Nucleus closed;    // c(j(0)) on F
  Frame closed_part; // fixset of `closed`
  Nucleus residual;  // j restricted to the closed part; dense there
};

DenseClosedFactorization dense_closed_factorization(const Frame& F, const Nucleus& j);

/// Up-closure of the meet of `generators` (an empty list generates {1}).
std::vector<Element> filter_generated(const Frame& F, const std::vector<Element>& generators);

/// Nucleus of the quotient by the generated filter: the open nucleus on its
/// least element, since finite filters are principal.
Nucleus quotient_by_filter(const Frame& F, const std::vector<Element>& generators);

struct DeMorganization {
  Nucleus nucleus;
  Frame quotient;
};

/// Quotient by the filter generated by {u or not u | u regular}.
DeMorganization demorganize_frame(const Frame& F);

/// The closure of every open sublocale is open.
bool is_extremally_disconnected(const Frame& F);
/// Every open sublocale is closed.
bool is_almost_discrete(const Frame& F);

/// All finite distributive lattices with at most max_size elements, up to isomorphism.
std::vector<Frame> frame_catalog(std::size_t max_size);

}  // namespace demorgan
