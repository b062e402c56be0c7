#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "demorgan/catalog.hpp"
#include "demorgan/topology.hpp"

namespace testing_helpers {

inline demorgan::ArrowSet arrows(const demorgan::FiniteCategory& C, std::initializer_list<const char*> names) {
  demorgan::ArrowSet s;
  for (const char* n : names) s.insert(C.arrow(n));
  return s;
}

/// The sieve on `object` with exactly the named members.
inline demorgan::Sieve sieve(const demorgan::FiniteCategory& C, const char* object,
                             std::initializer_list<const char*> names) {
  return demorgan::make_sieve(C, C.object(object), arrows(C, names));
}

/// Every non-maximal covering sieve, as "object:{members}" strings.
inline std::vector<std::string> covers(const demorgan::GrothendieckTopology& J) {
  std::vector<std::string> out;
  const auto& C = J.category();
  for (auto c : C.objects()) {
    for (const auto& S : J.covering_sieves(c)) {
      if (S.members != C.arrows_into(c)) out.push_back(C.name(c) + ":" + demorgan::format_sieve(C, S));
    }
  }
  return out;
}

/// Small categories for property sweeps: every fixture plus every category
/// with at most `max_objects` objects and `max_arrows` non-identity arrows.
inline std::vector<demorgan::FiniteCategory> sweep(std::size_t max_objects, std::size_t max_arrows) {
  std::vector<demorgan::FiniteCategory> out;
  for (auto& nc : demorgan::fixtures::all()) {
    if (nc.category.non_identity_arrow_count() <= 6) out.push_back(std::move(nc.category));
  }
  for (auto& C : demorgan::enumerate_small_categories(max_objects, max_arrows)) out.push_back(std::move(C));
  return out;
}

}  // namespace testing_helpers
