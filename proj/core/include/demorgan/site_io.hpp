#pragma once

// JSON documents for sites and frames.
//
// Site:  {"version": 1,
//         "objects": ["a", ...],
//         "arrows": [{"name": "f", "dom": "a", "cod": "c"}, ...],
//         "compose": [{"first": "f", "then": "g", "equals": "h"}, ...],
//         "identities": {"a": "id_a", ...},            (optional)
//         "covers": {"c": [["f", "g"], []], ...}}      (optional)
// Each cover entry lists generators of a sieve; [] is the empty sieve. The
// topology is the one generated by the listed sieves. "covers" may also be
// nested as {"topology": {"covers": ...}}.
//
// Frame: {"elements": ["0", "m", "1"], "leq": [["0", "m"], ["m", "1"]]}

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "demorgan/heyting.hpp"
#include "demorgan/topology.hpp"

namespace demorgan {

struct SiteDocument {
  std::shared_ptr<const SieveSpace> space;
  /// The listed cover sieves, each generated from its entry, before saturation.
  std::optional<std::vector<Sieve>> cover_seeds;
  std::optional<GrothendieckTopology> topology;

  const FiniteCategory& category() const { return space->category(); }
};

/// Throws ParseError (malformed JSON, with its byte position; unknown names in
/// covers) or ValidationError from category validation.
SiteDocument parse_site(std::string_view text, std::size_t max_sieve_arrows = kDefaultMaxSieveArrows);
SiteDocument read_site(const std::filesystem::path& path, std::size_t max_sieve_arrows = kDefaultMaxSieveArrows);

/// Covers of a site document read against an existing sieve space. A document
/// that also describes a category must describe the same one
/// (ValidationError(CategoryMismatch) otherwise). A document without covers
/// gives the trivial topology.
GrothendieckTopology parse_topology(std::string_view text, std::shared_ptr<const SieveSpace> space);
GrothendieckTopology read_topology(const std::filesystem::path& path, std::shared_ptr<const SieveSpace> space);

/// Every arrow, identity and non-identity composite is listed; covers list
/// every non-maximal covering sieve by its members.
std::string write_site(const FiniteCategory& C, const GrothendieckTopology* J = nullptr);

RawOrder parse_frame(std::string_view text);
RawOrder read_frame(const std::filesystem::path& path);
std::string write_frame(const HeytingAlgebra& H);

}  // namespace demorgan
