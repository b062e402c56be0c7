#include "demorgan/sieves.hpp"

#include <algorithm>

#include "demorgan/topology.hpp"

namespace demorgan {

namespace {

void require_object(const FiniteCategory& C, ObjectId c) {
  if (c.index >= C.object_count()) {
    throw ValidationError(ErrorKind::UnknownObject, "object index " + std::to_string(c.index) + " out of range");
  }
}

bool is_down_closed(const FiniteCategory& C, ArrowSet s) {
  for (auto f : s) {
    if (!C.principal_sieve(f).subset_of(s)) return false;
  }
  return true;
}

// Pullback on raw sets, with no checks.
ArrowSet pull(const FiniteCategory& C, ArrowId f, ArrowSet R) {
  ArrowSet out;
  for (auto g : C.arrows_into(C.dom(f))) {
    if (R.contains(*C.compose(g, f))) out.insert(g);
  }
  return out;
}

bool stably_nonempty(const FiniteCategory& C, ObjectId base, ArrowSet R) {
  for (auto f : C.arrows_into(base)) {
    if (pull(C, f, R).empty()) return false;
  }
  return true;
}

}  // namespace

Sieve maximal_sieve(const FiniteCategory& C, ObjectId c) {
  require_object(C, c);
  return Sieve{c, C.arrows_into(c)};
}

Sieve empty_sieve(ObjectId c) { return Sieve{c, ArrowSet{}}; }

Sieve make_sieve(const FiniteCategory& C, ObjectId c, ArrowSet members) {
  require_object(C, c);
  if (!members.subset_of(C.arrows_into(c))) {
    throw ValidationError(ErrorKind::WrongCodomain,
                          "not every arrow of " + format_sieve(C, Sieve{c, members}) + " has codomain " + C.name(c));
  }
  if (!is_down_closed(C, members)) {
    throw ValidationError(ErrorKind::NotASieve,
                          format_sieve(C, Sieve{c, members}) + " on " + C.name(c) + " is not closed under precomposition");
  }
  return Sieve{c, members};
}

Sieve generate_sieve(const FiniteCategory& C, ObjectId c, ArrowSet gens) {
  require_object(C, c);
  ArrowSet out;
  for (auto f : gens) {
    if (f.index >= C.arrow_count() || C.cod(f) != c) {
      throw ValidationError(ErrorKind::WrongCodomain,
                            "generator " + (f.index < C.arrow_count() ? C.name(f) : std::to_string(f.index)) +
                                " does not have codomain " + C.name(c));
    }
    out |= C.principal_sieve(f);
  }
  return Sieve{c, out};
}

Sieve pullback_sieve(const FiniteCategory& C, ArrowId f, const Sieve& R) {
  if (f.index >= C.arrow_count()) {
    throw ValidationError(ErrorKind::UnknownArrow, "arrow index " + std::to_string(f.index) + " out of range");
  }
  if (C.cod(f) != R.base) {
    throw ValidationError(ErrorKind::BaseMismatch,
                          "cannot pull back a sieve on " + C.name(R.base) + " along " + C.name(f));
  }
  return Sieve{C.dom(f), pull(C, f, R.members)};
}

bool is_stably_nonempty(const FiniteCategory& C, const Sieve& R) {
  return stably_nonempty(C, R.base, R.members);
}

Sieve m_sieve(const FiniteCategory& C, const Sieve& R) {
  Sieve out{R.base, {}};
  for (auto f : C.arrows_into(R.base)) {
    const auto p = pull(C, f, R.members);
    if (p.empty() || stably_nonempty(C, C.dom(f), p)) out.members.insert(f);
  }
  return out;
}

Sieve b_sieve(const FiniteCategory& C, const Sieve& R) {
  Sieve out{R.base, {}};
  for (auto f : C.arrows_into(R.base)) {
    if (R.contains(f) || pull(C, f, R.members).empty()) out.members.insert(f);
  }
  return out;
}

Sieve r_sieve(const GrothendieckTopology& J, ObjectId c) {
  const auto& C = J.category();
  require_object(C, c);
  Sieve out{c, {}};
  for (auto f : C.arrows_into(c)) {
    if (J.covers(empty_sieve(C.dom(f)))) out.members.insert(f);
  }
  return out;
}

std::vector<Sieve> enumerate_sieves(const FiniteCategory& C, ObjectId c, std::size_t max_arrows) {
  require_object(C, c);
  const auto into = C.arrows_into(c);
  const auto n = into.size();
  if (n > max_arrows) {
    throw BoundExceeded("object " + C.name(c) + " has " + std::to_string(n) +
                        " incoming arrows; sieve enumeration is capped at " + std::to_string(max_arrows));
  }
  std::vector<ArrowId> members(into.begin(), into.end());
  std::vector<Sieve> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ArrowSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.insert(members[i]);
    }
    if (is_down_closed(C, s)) out.push_back(Sieve{c, s});
  }
  std::sort(out.begin(), out.end(), [](const Sieve& a, const Sieve& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::string format_sieve(const FiniteCategory& C, const Sieve& R) {
  std::string out = "{";
  bool first = true;
  for (auto f : R.members) {
    if (!first) out += ", ";
    out += C.name(f);
    first = false;
  }
  return out + "}";
}

std::shared_ptr<const SieveSpace> SieveSpace::build(FiniteCategory C, std::size_t max_sieve_arrows) {
  return build(std::make_shared<const FiniteCategory>(std::move(C)), max_sieve_arrows);
}

std::shared_ptr<const SieveSpace> SieveSpace::build(std::shared_ptr<const FiniteCategory> C,
                                                    std::size_t max_sieve_arrows) {
  auto space = std::shared_ptr<SieveSpace>(new SieveSpace());
  space->category_ = std::move(C);
  space->max_sieve_arrows_ = max_sieve_arrows;
  const auto& cat = *space->category_;
  space->sieves_.resize(cat.object_count());
  space->lookup_.resize(cat.object_count());
  for (auto c : cat.objects()) {
    space->sieves_[c.index] = enumerate_sieves(cat, c, max_sieve_arrows);
    auto& lookup = space->lookup_[c.index];
    for (Index i = 0; i < space->sieves_[c.index].size(); ++i) {
      lookup.emplace(space->sieves_[c.index][i].members.bits(), i);
    }
  }
  space->pullbacks_.resize(cat.arrow_count());
  for (auto f : cat.arrows()) {
    const auto& on_cod = space->sieves_[cat.cod(f).index];
    auto& table = space->pullbacks_[f.index];
    table.reserve(on_cod.size());
    for (const auto& R : on_cod) {
      table.push_back(space->lookup_[cat.dom(f).index].at(pull(cat, f, R.members).bits()));
    }
  }
  return space;
}

SieveSpace::Index SieveSpace::index_of(ObjectId c, ArrowSet members) const {
  if (c.index >= sieves_.size()) {
    throw ValidationError(ErrorKind::UnknownObject, "object index " + std::to_string(c.index) + " out of range");
  }
  auto it = lookup_[c.index].find(members.bits());
  if (it == lookup_[c.index].end()) {
    throw ValidationError(ErrorKind::NotASieve,
                          format_sieve(*category_, Sieve{c, members}) + " is not a sieve on " + category_->name(c));
  }
  return it->second;
}

SieveSpace::Index SieveSpace::index_of(const Sieve& R) const { return index_of(R.base, R.members); }

}  // namespace demorgan
