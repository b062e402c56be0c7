#include "demorgan/topology.hpp"

#include <algorithm>
#include <set>

namespace demorgan {

class TopologyAccess {
 public:
  static GrothendieckTopology make(std::shared_ptr<const SieveSpace> space, GrothendieckTopology::Covers covers) {
    return GrothendieckTopology(std::move(space), std::move(covers));
  }
};

namespace {

using Index = SieveSpace::Index;
using Covers = GrothendieckTopology::Covers;

Covers empty_covers(const SieveSpace& space) {
  Covers covers(space.category().object_count());
  for (auto c : space.category().objects()) covers[c.index].assign(space.count(c), 0);
  return covers;
}

Covers maximal_covers(const SieveSpace& space) {
  auto covers = empty_covers(space);
  for (auto c : space.category().objects()) covers[c.index][space.maximal_index(c)] = 1;
  return covers;
}

// Largest sieve contained in an arbitrary set of arrows into c.
ArrowSet sieve_interior(const FiniteCategory& C, ArrowSet s) {
  ArrowSet out;
  for (auto f : s) {
    if (C.principal_sieve(f).subset_of(s)) out.insert(f);
  }
  return out;
}

// Arrows into c along which sieve i pulls back to a cover.
ArrowSet closure_set(const SieveSpace& space, const Covers& covers, ObjectId c, Index i) {
  const auto& C = space.category();
  ArrowSet out;
  for (auto h : C.arrows_into(c)) {
    if (covers[C.dom(h).index][space.pullback(h, i)]) out.insert(h);
  }
  return out;
}

// Closes a family of covers under supersets, pullbacks and transitivity.
// Every sieve added is forced by the axioms, so the fixpoint is the least
// topology containing the input.
void saturate(const SieveSpace& space, Covers& covers) {
  const auto& C = space.category();
  for (auto c : C.objects()) covers[c.index][space.maximal_index(c)] = 1;

  bool changed = true;
  while (changed) {
    changed = false;

    for (auto c : C.objects()) {
      auto& row = covers[c.index];
      for (Index i = 0; i < row.size(); ++i) {
        if (!row[i]) continue;
        const auto members = space.sieve(c, i).members;
        for (Index k = i + 1; k < row.size(); ++k) {
          if (!row[k] && members.subset_of(space.sieve(c, k).members)) {
            row[k] = 1;
            changed = true;
          }
        }
      }
    }

    for (auto f : C.arrows()) {
      const auto& from = covers[C.cod(f).index];
      auto& to = covers[C.dom(f).index];
      for (Index i = 0; i < from.size(); ++i) {
        if (!from[i]) continue;
        const auto j = space.pullback(f, i);
        if (!to[j]) {
          to[j] = 1;
          changed = true;
        }
      }
    }

    for (auto c : C.objects()) {
      auto& row = covers[c.index];
      for (Index i = 0; i < row.size(); ++i) {
        if (row[i]) continue;
        const auto inner = sieve_interior(C, closure_set(space, covers, c, i));
        if (row[space.index_of(c, inner)]) {
          row[i] = 1;
          changed = true;
        }
      }
    }
  }
}

bool same_category(const GrothendieckTopology& a, const GrothendieckTopology& b) {
  return a.space_ptr() == b.space_ptr() || a.category() == b.category();
}

void require_same_category(const GrothendieckTopology& a, const GrothendieckTopology& b) {
  if (!same_category(a, b)) {
    throw ValidationError(ErrorKind::CategoryMismatch, "topologies live on different categories");
  }
}

std::vector<Index> r_indices(const GrothendieckTopology& J) {
  const auto& space = J.space();
  std::vector<Index> out;
  for (auto c : J.category().objects()) out.push_back(space.index_of(r_sieve(J, c)));
  return out;
}

bool is_closed_index(const GrothendieckTopology& J, ObjectId c, Index i) {
  return closure_set(J.space(), J.cover_table(), c, i) == J.space().sieve(c, i).members;
}

// Membership of f in the sieve {f | f*(R) = R_d or (for all g: g*(f*(R)) = R_e
// implies g in R_d)}.
bool in_demorgan_criterion(const GrothendieckTopology& J, const std::vector<Index>& r_idx, ArrowId f, Index R) {
  const auto& space = J.space();
  const auto& C = J.category();
  const auto d = C.dom(f);
  const auto pf = space.pullback(f, R);
  if (pf == r_idx[d.index]) return true;
  const auto& Rd = space.sieve(d, r_idx[d.index]);
  for (auto g : C.arrows_into(d)) {
    if (space.pullback(g, pf) == r_idx[C.dom(g).index] && !Rd.contains(g)) return false;
  }
  return true;
}

template <class Membership>
std::optional<CriterionWitness> first_failure(const GrothendieckTopology& J, Membership member) {
  const auto& space = J.space();
  const auto& C = J.category();
  for (auto c : C.objects()) {
    for (Index i = 0; i < space.count(c); ++i) {
      if (!is_closed_index(J, c, i)) continue;
      Sieve criterion{c, {}};
      for (auto f : C.arrows_into(c)) {
        if (member(f, i)) criterion.members.insert(f);
      }
      if (!J.covers(criterion)) return CriterionWitness{space.category_ptr(), c, space.sieve(c, i), criterion};
    }
  }
  return std::nullopt;
}

std::optional<GrothendieckTopology> try_reduce(const GrothendieckTopology& J) {
  try {
    return reduced_site(J);
  } catch (const ValidationError& e) {
    if (e.kind() == ErrorKind::EmptyReduction) return std::nullopt;
    throw;
  }
}

std::vector<Sieve> all_sieves(const SieveSpace& space) {
  std::vector<Sieve> out;
  for (auto c : space.category().objects()) {
    for (const auto& R : space.sieves_on(c)) out.push_back(R);
  }
  return out;
}

std::string cover_key(const Covers& covers) {
  std::string key;
  for (const auto& row : covers) {
    key.append(row.begin(), row.end());
    key.push_back('|');
  }
  return key;
}

}  // namespace

std::vector<Sieve> GrothendieckTopology::covering_sieves(ObjectId c) const {
  std::vector<Sieve> out;
  for (Index i = 0; i < covers_[c.index].size(); ++i) {
    if (covers_[c.index][i]) out.push_back(space_->sieve(c, i));
  }
  return out;
}

std::size_t GrothendieckTopology::cover_count() const {
  std::size_t n = 0;
  for (const auto& row : covers_) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), 1));
  return n;
}

bool operator==(const GrothendieckTopology& a, const GrothendieckTopology& b) {
  return same_category(a, b) && a.covers_ == b.covers_;
}

GrothendieckTopology validate_topology(std::shared_ptr<const SieveSpace> space, const std::vector<Sieve>& listed) {
  const auto& C = space->category();
  auto covers = empty_covers(*space);
  for (const auto& S : listed) covers[S.base.index][space->index_of(S)] = 1;

  for (auto c : C.objects()) {
    if (!covers[c.index][space->maximal_index(c)]) {
      throw ValidationError(ErrorKind::NotMaximalClosed, "maximal sieve on " + C.name(c) + " does not cover");
    }
  }
  for (auto c : C.objects()) {
    for (Index i = 0; i < space->count(c); ++i) {
      if (!covers[c.index][i]) continue;
      for (auto f : C.arrows_into(c)) {
        const auto j = space->pullback(f, i);
        if (!covers[C.dom(f).index][j]) {
          throw ValidationError(ErrorKind::NotStable,
                                "object " + C.name(c) + ", sieve " + format_sieve(C, space->sieve(c, i)) +
                                    ", arrow " + C.name(f) + ": pullback " +
                                    format_sieve(C, space->sieve(C.dom(f), j)) + " does not cover " +
                                    C.name(C.dom(f)));
        }
      }
    }
  }
  for (auto c : C.objects()) {
    for (Index i = 0; i < space->count(c); ++i) {
      if (covers[c.index][i]) continue;
      const auto local = closure_set(*space, covers, c, i);
      for (Index k = 0; k < space->count(c); ++k) {
        if (covers[c.index][k] && space->sieve(c, k).members.subset_of(local)) {
          throw ValidationError(ErrorKind::NotTransitive,
                                "object " + C.name(c) + ", sieve " + format_sieve(C, space->sieve(c, i)) +
                                    " is locally covered along the cover " +
                                    format_sieve(C, space->sieve(c, k)) + " but does not cover");
        }
      }
    }
  }
  for (auto c : C.objects()) {
    for (Index i = 0; i < space->count(c); ++i) {
      if (!covers[c.index][i]) continue;
      const auto small = space->sieve(c, i).members;
      for (Index k = 0; k < space->count(c); ++k) {
        if (!covers[c.index][k] && small.subset_of(space->sieve(c, k).members)) {
          throw ValidationError(ErrorKind::NotSupersetClosed,
                                "object " + C.name(c) + ", sieve " + format_sieve(C, space->sieve(c, k)) +
                                    " contains the cover " + format_sieve(C, space->sieve(c, i)) +
                                    " but does not cover");
        }
      }
    }
  }
  return TopologyAccess::make(std::move(space), std::move(covers));
}

GrothendieckTopology trivial_topology(std::shared_ptr<const SieveSpace> space) {
  auto covers = maximal_covers(*space);
  return TopologyAccess::make(std::move(space), std::move(covers));
}

GrothendieckTopology generate_topology(std::shared_ptr<const SieveSpace> space, const std::vector<Sieve>& seeds) {
  auto covers = maximal_covers(*space);
  for (const auto& S : seeds) covers[S.base.index][space->index_of(S)] = 1;
  saturate(*space, covers);
  return TopologyAccess::make(std::move(space), std::move(covers));
}

bool leq_topology(const GrothendieckTopology& J1, const GrothendieckTopology& J2) {
  require_same_category(J1, J2);
  const auto& a = J1.cover_table();
  const auto& b = J2.cover_table();
  for (std::size_t c = 0; c < a.size(); ++c) {
    for (std::size_t i = 0; i < a[c].size(); ++i) {
      if (a[c][i] && !b[c][i]) return false;
    }
  }
  return true;
}

GrothendieckTopology meet_topology(const GrothendieckTopology& J1, const GrothendieckTopology& J2) {
  require_same_category(J1, J2);
  std::vector<Sieve> both;
  const auto& C = J1.category();
  for (auto c : C.objects()) {
    for (Index i = 0; i < J1.space().count(c); ++i) {
      if (J1.covers(c, i) && J2.covers(c, i)) both.push_back(J1.space().sieve(c, i));
    }
  }
  return validate_topology(J1.space_ptr(), both);
}

GrothendieckTopology join_topology(const GrothendieckTopology& J1, const GrothendieckTopology& J2) {
  require_same_category(J1, J2);
  auto covers = J1.cover_table();
  const auto& other = J2.cover_table();
  for (std::size_t c = 0; c < covers.size(); ++c) {
    for (std::size_t i = 0; i < covers[c].size(); ++i) covers[c][i] = covers[c][i] || other[c][i];
  }
  saturate(J1.space(), covers);
  return TopologyAccess::make(J1.space_ptr(), std::move(covers));
}

Sieve closure_of_sieve(const GrothendieckTopology& J, const Sieve& R) {
  const auto i = J.space().index_of(R);
  return Sieve{R.base, closure_set(J.space(), J.cover_table(), R.base, i)};
}

bool is_closed(const GrothendieckTopology& J, const Sieve& R) { return closure_of_sieve(J, R) == R; }

bool no_empty_covers(const GrothendieckTopology& J) {
  for (auto c : J.category().objects()) {
    if (J.covers(c, J.space().empty_index(c))) return false;
  }
  return true;
}

GrothendieckTopology dense_topology(std::shared_ptr<const SieveSpace> space) {
  std::vector<Sieve> covers;
  for (const auto& R : all_sieves(*space)) {
    if (is_stably_nonempty(space->category(), R)) covers.push_back(R);
  }
  return validate_topology(std::move(space), covers);
}

GrothendieckTopology demorgan_topology(std::shared_ptr<const SieveSpace> space) {
  std::vector<Sieve> seeds;
  for (const auto& R : all_sieves(*space)) seeds.push_back(m_sieve(space->category(), R));
  return generate_topology(std::move(space), seeds);
}

GrothendieckTopology reduced_site(const GrothendieckTopology& J) {
  const auto& C = J.category();
  std::vector<ObjectId> kept;
  for (auto c : C.objects()) {
    if (!J.covers(c, J.space().empty_index(c))) kept.push_back(c);
  }
  if (kept.size() == C.object_count()) return J;
  if (kept.empty()) {
    throw ValidationError(ErrorKind::EmptyReduction, "every object is covered by the empty sieve");
  }

  std::vector<char> keep(C.object_count(), 0);
  for (auto c : kept) keep[c.index] = 1;
  RawCategory raw;
  for (auto c : kept) {
    raw.objects.push_back(C.name(c));
    raw.identities.emplace_back(C.name(c), C.name(C.identity(c)));
  }
  for (auto f : C.arrows()) {
    if (keep[C.dom(f).index] && keep[C.cod(f).index]) {
      raw.arrows.push_back({C.name(f), C.name(C.dom(f)), C.name(C.cod(f))});
    }
  }
  for (auto f : C.arrows()) {
    if (!keep[C.dom(f).index] || !keep[C.cod(f).index] || C.is_identity(f)) continue;
    for (auto g : C.arrows_from(C.cod(f))) {
      if (!keep[C.cod(g).index] || C.is_identity(g)) continue;
      raw.compose.push_back({C.name(f), C.name(g), C.name(*C.compose(f, g))});
    }
  }
  auto space = SieveSpace::build(validate_category(raw), J.space().max_sieve_arrows());
  const auto& sub = space->category();

  std::vector<Sieve> covers;
  for (auto c : sub.objects()) {
    const auto ambient_c = C.object(sub.name(c));
    const auto r = r_sieve(J, ambient_c);
    for (const auto& S : space->sieves_on(c)) {
      ArrowSet gens;
      for (auto f : S.members) gens.insert(C.arrow(sub.name(f)));
      auto generated = generate_sieve(C, ambient_c, gens);
      generated.members |= r.members;
      if (J.covers(generated)) covers.push_back(S);
    }
  }
  return validate_topology(std::move(space), covers);
}

bool is_demorgan_general(const GrothendieckTopology& J) { return !demorgan_witness_general(J).has_value(); }

std::optional<CriterionWitness> demorgan_witness_general(const GrothendieckTopology& J) {
  const auto r_idx = r_indices(J);
  return first_failure(J, [&](ArrowId f, Index R) { return in_demorgan_criterion(J, r_idx, f, R); });
}

bool is_demorgan_reduced(const GrothendieckTopology& J) { return !demorgan_witness_reduced(J).has_value(); }

std::optional<CriterionWitness> demorgan_witness_reduced(const GrothendieckTopology& J) {
  const auto reduced = try_reduce(J);
  if (!reduced) return std::nullopt;  // degenerate topos
  const auto M = demorgan_topology(reduced->space_ptr());
  if (leq_topology(M, *reduced)) return std::nullopt;
  const auto& sub = reduced->category();
  for (const auto& R : all_sieves(reduced->space())) {
    const auto MR = m_sieve(sub, R);
    if (!reduced->covers(MR)) return CriterionWitness{reduced->space().category_ptr(), R.base, R, MR};
  }
  // M is generated by the M_R, so some generator must fail to cover.
  throw std::logic_error("De Morgan topology exceeds J~ but every generator covers");
}

bool is_boolean_general(const GrothendieckTopology& J) { return !boolean_witness_general(J).has_value(); }

std::optional<CriterionWitness> boolean_witness_general(const GrothendieckTopology& J) {
  const auto r_idx = r_indices(J);
  const auto& space = J.space();
  const auto& C = J.category();
  return first_failure(J, [&](ArrowId f, Index R) {
    return space.pullback(f, R) == r_idx[C.dom(f).index] || space.sieve(C.cod(f), R).contains(f);
  });
}

bool is_boolean_reduced(const GrothendieckTopology& J) { return !boolean_witness_reduced(J).has_value(); }

std::optional<CriterionWitness> boolean_witness_reduced(const GrothendieckTopology& J) {
  const auto reduced = try_reduce(J);
  if (!reduced) return std::nullopt;
  const auto& sub = reduced->category();
  const auto& space = reduced->space();
  std::optional<CriterionWitness> witness;
  bool only_maximal_closed = true;
  for (auto c : sub.objects()) {
    for (Index i = 0; i < space.count(c); ++i) {
      const auto& R = space.sieve(c, i);
      if (!is_closed_index(*reduced, c, i)) continue;
      if (!R.empty() && i != space.maximal_index(c)) only_maximal_closed = false;
      const auto B = b_sieve(sub, R);
      if (!witness && !reduced->covers(B)) witness = CriterionWitness{space.category_ptr(), c, R, B};
    }
  }
  if (right_ore(sub) && only_maximal_closed == witness.has_value()) {
    throw std::logic_error("right Ore shortcut disagrees with the B_R criterion");
  }
  return witness;
}

GrothendieckTopology demorganize_site(const GrothendieckTopology& J) {
  const auto reduced = reduced_site(J);
  return join_topology(reduced, demorgan_topology(reduced.space_ptr()));
}

GrothendieckTopology booleanize_site(const GrothendieckTopology& J) {
  const auto reduced = reduced_site(J);
  const auto D = dense_topology(reduced.space_ptr());
  std::vector<Sieve> b_sieves;
  for (const auto& R : all_sieves(reduced.space())) b_sieves.push_back(b_sieve(reduced.category(), R));
  if (generate_topology(reduced.space_ptr(), b_sieves) != D) {
    throw std::logic_error("dense topology differs from the topology generated by the B_R");
  }
  return join_topology(reduced, D);
}

std::vector<GrothendieckTopology> enumerate_topologies(std::shared_ptr<const SieveSpace> space,
                                                       std::size_t max_enum_arrows) {
  const auto& C = space->category();
  if (C.non_identity_arrow_count() > max_enum_arrows) {
    throw BoundExceeded("category has " + std::to_string(C.non_identity_arrow_count()) +
                        " non-identity arrows; topology enumeration is capped at " + std::to_string(max_enum_arrows));
  }
  std::set<std::string> seen;
  std::vector<Covers> found;
  std::vector<Covers> frontier{maximal_covers(*space)};
  saturate(*space, frontier.front());
  seen.insert(cover_key(frontier.front()));
  found.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<Covers> next;
    for (const auto& base : frontier) {
      for (auto c : C.objects()) {
        for (Index i = 0; i < space->count(c); ++i) {
          if (base[c.index][i]) continue;
          auto grown = base;
          grown[c.index][i] = 1;
          saturate(*space, grown);
          if (seen.insert(cover_key(grown)).second) {
            found.push_back(grown);
            next.push_back(std::move(grown));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<GrothendieckTopology> out;
  out.reserve(found.size());
  for (auto& covers : found) out.push_back(TopologyAccess::make(space, std::move(covers)));
  std::sort(out.begin(), out.end(), [](const GrothendieckTopology& a, const GrothendieckTopology& b) {
    if (a.cover_count() != b.cover_count()) return a.cover_count() < b.cover_count();
    return a.cover_table() < b.cover_table();
  });
  return out;
}

std::optional<CountrocWitness> countroc_witness(const GrothendieckTopology& J) {
  if (!no_empty_covers(J)) return std::nullopt;
  const auto& C = J.category();
  for (auto c : C.objects()) {
    if (J.covering_sieves(c).size() != 1) continue;
    for (auto f : C.arrows_into(c)) {
      for (auto g : C.arrows_into(c)) {
        const auto generated = Sieve{c, C.principal_sieve(g)};
        if (pullback_sieve(C, f, generated).empty()) return CountrocWitness{c, f, g};
      }
    }
  }
  return std::nullopt;
}

std::string format_topology(const GrothendieckTopology& J) {
  const auto& C = J.category();
  std::string out;
  for (auto c : C.objects()) {
    if (!out.empty()) out += "; ";
    out += C.name(c) + ":";
    for (const auto& S : J.covering_sieves(c)) {
      if (S.base == c && S.members == C.arrows_into(c)) continue;
      out += " " + format_sieve(C, S);
    }
  }
  return out;
}

}  // namespace demorgan
