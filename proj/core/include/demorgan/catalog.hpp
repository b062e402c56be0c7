#pragma once

// Named fixture categories and frames, and exhaustive enumeration of small
// categories up to isomorphism.

#include <string>
#include <vector>

#include "demorgan/fincat.hpp"
#include "demorgan/frames.hpp"

namespace demorgan {

struct NamedCategory {
  std::string name;
  FiniteCategory category;
};

namespace fixtures {

/// a -f-> c <-g- b.
FiniteCategory cspan();
/// One object with an idempotent e (e then e = e).
FiniteCategory mon2();
FiniteCategory discrete(std::size_t objects);
/// a -f-> b.
FiniteCategory arrow();
/// a <-f- c -g-> b.
FiniteCategory span();
/// f, g : a -> b.
FiniteCategory parallel_pair();
/// One object, s then s = id.
FiniteCategory z2();
/// One object, {1, a, b} with x then y = x for x, y non-identity.
FiniteCategory left_zero_monoid();
/// One object, {1, a, b} with x then y = y for x, y non-identity.
FiniteCategory right_zero_monoid();
/// a -> b -> d, a -> c -> d with the square commuting.
FiniteCategory commutative_square();
/// a -> b -> c with the composite.
FiniteCategory chain3();
/// Three arrows into one object from three distinct objects.
FiniteCategory three_cospan();
/// Finite ordinals 0, 1, 2 and order-preserving injections, opposite category.
FiniteCategory ordinal_injections_op();
/// One object, {1, x, y, 0} with every product of non-identities equal to 0.
FiniteCategory zero_monoid();

/// Every fixture above (discrete with 1 and 3 objects).
std::vector<NamedCategory> all();

/// Chain 0 < m < 1.
Frame ch3();
/// Down-sets of the poset x < z > y: {}, {x}, {y}, {x,y}, {x,y,z}.
Frame frm5();
/// Two-element frame.
Frame two();
/// Four-element Boolean algebra.
Frame boolean4();

}  // namespace fixtures

/// Category with the same objects and arrow names, arrows reversed.
FiniteCategory opposite(const FiniteCategory& C);

/// Monoid on {identity} + elements given by a multiplication table over the
/// non-identity elements: table[i][j] is the name of "i then j" (may be the identity).
FiniteCategory monoid(const std::string& identity, const std::vector<std::string>& elements,
                      const std::vector<std::vector<std::string>>& table);

/// All categories with 1..max_objects objects and at most max_arrows
/// non-identity arrows, one per isomorphism class. Objects are named o0.., arrows a0...
std::vector<FiniteCategory> enumerate_small_categories(std::size_t max_objects, std::size_t max_arrows);

}  // namespace demorgan
