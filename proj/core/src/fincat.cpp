#include "demorgan/fincat.hpp"

#include <map>
#include <set>

namespace demorgan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::IllTypedComposite: return "IllTypedComposite";
    case ErrorKind::ConflictingComposite: return "ConflictingComposite";
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::BrokenIdentity: return "BrokenIdentity";
    case ErrorKind::BrokenAssociativity: return "BrokenAssociativity";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::WrongCodomain: return "WrongCodomain";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotASieve: return "NotASieve";
    case ErrorKind::CategoryMismatch: return "CategoryMismatch";
    case ErrorKind::NotMaximalClosed: return "NotMaximalClosed";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotSupersetClosed: return "NotSupersetClosed";
    case ErrorKind::EmptyReduction: return "EmptyReduction";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotResiduated: return "NotResiduated";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotInflationary: return "NotInflationary";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& detail) {
  throw ValidationError(kind, detail);
}

}  // namespace

std::vector<ObjectId> FiniteCategory::objects() const {
  std::vector<ObjectId> out;
  out.reserve(object_count());
  for (std::uint32_t i = 0; i < object_count(); ++i) out.push_back(ObjectId{i});
  return out;
}

std::vector<ArrowId> FiniteCategory::arrows() const {
  std::vector<ArrowId> out;
  out.reserve(arrow_count());
  for (std::uint32_t i = 0; i < arrow_count(); ++i) out.push_back(ArrowId{i});
  return out;
}

std::optional<ObjectId> FiniteCategory::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return ObjectId{it->second};
}

std::optional<ArrowId> FiniteCategory::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return ArrowId{it->second};
}

ObjectId FiniteCategory::object(const std::string& name) const {
  if (auto c = find_object(name)) return *c;
  fail(ErrorKind::UnknownObject, "no object named '" + name + "'");
}

ArrowId FiniteCategory::arrow(const std::string& name) const {
  if (auto f = find_arrow(name)) return *f;
  fail(ErrorKind::UnknownArrow, "no arrow named '" + name + "'");
}

RawCategory FiniteCategory::to_raw() const {
  RawCategory raw;
  raw.objects = object_names_;
  for (const auto& a : arrows_) {
    raw.arrows.push_back({a.name, object_names_[a.dom.index], object_names_[a.cod.index]});
  }
  for (std::size_t c = 0; c < object_count(); ++c) {
    raw.identities.emplace_back(object_names_[c], arrows_[identities_[c].index].name);
  }
  for (auto f : arrows()) {
    if (is_identity(f)) continue;
    for (auto g : arrows()) {
      if (is_identity(g)) continue;
      if (auto h = compose(f, g)) raw.compose.push_back({name(f), name(g), name(*h)});
    }
  }
  return raw;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  if (&a == &b) return true;
  if (a.object_names_ != b.object_names_ || a.table_ != b.table_ ||
      a.identities_ != b.identities_ || a.arrows_.size() != b.arrows_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.name != y.name || x.dom != y.dom || x.cod != y.cod) return false;
  }
  return true;
}

FiniteCategory validate_category(const RawCategory& raw) {
  FiniteCategory C;

  for (const auto& o : raw.objects) {
    if (!C.object_index_.emplace(o, static_cast<std::uint32_t>(C.object_names_.size())).second) {
      fail(ErrorKind::DuplicateName, "object '" + o + "' declared twice");
    }
    C.object_names_.push_back(o);
  }

  auto object_ref = [&](const std::string& name, const std::string& context) {
    auto it = C.object_index_.find(name);
    if (it == C.object_index_.end()) {
      fail(ErrorKind::DanglingReference, context + " refers to unknown object '" + name + "'");
    }
    return ObjectId{it->second};
  };
  auto add_arrow = [&](const std::string& name, ObjectId dom, ObjectId cod) {
    if (!C.arrow_index_.emplace(name, static_cast<std::uint32_t>(C.arrows_.size())).second) {
      fail(ErrorKind::DuplicateName, "arrow '" + name + "' declared twice");
    }
    C.arrows_.push_back({name, dom, cod});
    return ArrowId{static_cast<std::uint32_t>(C.arrows_.size() - 1)};
  };

  for (const auto& a : raw.arrows) {
    add_arrow(a.name, object_ref(a.dom, "arrow '" + a.name + "'"),
              object_ref(a.cod, "arrow '" + a.name + "'"));
  }

  // Identities: explicit, or an existing endo named id_<c>, or synthesized.
  std::map<std::string, std::string> declared_ids;
  for (const auto& [obj, arr] : raw.identities) {
    object_ref(obj, "identity declaration");
    if (!declared_ids.emplace(obj, arr).second) {
      fail(ErrorKind::DuplicateName, "identity of '" + obj + "' declared twice");
    }
  }
  C.identities_.resize(C.object_names_.size());
  for (std::uint32_t c = 0; c < C.object_names_.size(); ++c) {
    const auto& obj = C.object_names_[c];
    auto it = declared_ids.find(obj);
    const bool declared = it != declared_ids.end();
    const std::string id_name = declared ? it->second : "id_" + obj;
    auto existing = C.arrow_index_.find(id_name);
    if (existing == C.arrow_index_.end()) {
      if (declared) {
        fail(ErrorKind::DanglingReference, "identity of '" + obj + "' names unknown arrow '" + id_name + "'");
      }
      C.identities_[c] = add_arrow(id_name, ObjectId{c}, ObjectId{c});
    } else {
      const auto& info = C.arrows_[existing->second];
      if (info.dom.index != c || info.cod.index != c) {
        fail(declared ? ErrorKind::BrokenIdentity : ErrorKind::DuplicateName,
             "arrow '" + id_name + "' cannot be the identity of '" + obj + "'");
      }
      C.identities_[c] = ArrowId{existing->second};
    }
  }

  const std::size_t n = C.arrows_.size();
  if (n > kMaxArrows) {
    throw BoundExceeded("category has " + std::to_string(n) + " arrows; at most " +
                        std::to_string(kMaxArrows) + " are supported");
  }
  C.table_.assign(n * n, -1);
  auto& table = C.table_;
  auto is_id = [&](std::uint32_t f) { return C.identities_[C.arrows_[f].dom.index].index == f; };

  for (std::uint32_t f = 0; f < n; ++f) {
    for (std::uint32_t g = 0; g < n; ++g) {
      if (C.arrows_[f].cod != C.arrows_[g].dom) continue;
      if (is_id(f)) table[f * n + g] = static_cast<std::int32_t>(g);
      else if (is_id(g)) table[f * n + g] = static_cast<std::int32_t>(f);
    }
  }

  auto arrow_ref = [&](const std::string& name) {
    auto it = C.arrow_index_.find(name);
    if (it == C.arrow_index_.end()) {
      fail(ErrorKind::DanglingReference, "composite entry refers to unknown arrow '" + name + "'");
    }
    return it->second;
  };

  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& entry : raw.compose) {
    const auto f = arrow_ref(entry.first);
    const auto g = arrow_ref(entry.then);
    const auto h = arrow_ref(entry.equals);
    const std::string pair = "('" + entry.first + "', '" + entry.then + "')";
    if (C.arrows_[f].cod != C.arrows_[g].dom) {
      fail(ErrorKind::NotComposable, "composite " + pair + " declared but cod(" + entry.first +
                                         ") = " + C.object_names_[C.arrows_[f].cod.index] +
                                         " differs from dom(" + entry.then +
                                         ") = " + C.object_names_[C.arrows_[g].dom.index]);
    }
    if (C.arrows_[h].dom != C.arrows_[f].dom || C.arrows_[h].cod != C.arrows_[g].cod) {
      fail(ErrorKind::IllTypedComposite,
           "composite " + pair + " = '" + entry.equals + "' has the wrong domain or codomain");
    }
    if (is_id(f) || is_id(g)) {
      const auto expected = table[f * n + g];
      if (expected != static_cast<std::int32_t>(h)) {
        fail(ErrorKind::BrokenIdentity, "composite " + pair + " = '" + entry.equals +
                                            "' contradicts the identity law");
      }
      continue;
    }
    if (!seen.emplace(f, g).second && table[f * n + g] != static_cast<std::int32_t>(h)) {
      fail(ErrorKind::ConflictingComposite, "composite " + pair + " declared with two values");
    }
    table[f * n + g] = static_cast<std::int32_t>(h);
  }

  for (std::uint32_t f = 0; f < n; ++f) {
    for (std::uint32_t g = 0; g < n; ++g) {
      if (C.arrows_[f].cod == C.arrows_[g].dom && table[f * n + g] < 0) {
        fail(ErrorKind::MissingComposite, "no composite declared for ('" + C.arrows_[f].name +
                                              "', '" + C.arrows_[g].name + "')");
      }
    }
  }

  for (std::uint32_t f = 0; f < n; ++f) {
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto fg = table[f * n + g];
      if (fg < 0) continue;
      for (std::uint32_t h = 0; h < n; ++h) {
        const auto gh = table[g * n + h];
        if (gh < 0) continue;
        const auto left = table[static_cast<std::size_t>(fg) * n + h];
        const auto right = table[f * n + static_cast<std::size_t>(gh)];
        if (left != right) {
          fail(ErrorKind::BrokenAssociativity, "('" + C.arrows_[f].name + "', '" + C.arrows_[g].name +
                                                   "', '" + C.arrows_[h].name + "') composes to '" +
                                                   C.arrows_[left].name + "' and '" +
                                                   C.arrows_[right].name + "'");
        }
      }
    }
  }

  C.into_.assign(C.object_names_.size(), ArrowSet{});
  C.from_.assign(C.object_names_.size(), ArrowSet{});
  for (std::uint32_t f = 0; f < n; ++f) {
    C.into_[C.arrows_[f].cod.index].insert(ArrowId{f});
    C.from_[C.arrows_[f].dom.index].insert(ArrowId{f});
  }
  C.principal_.assign(n, ArrowSet{});
  for (std::uint32_t f = 0; f < n; ++f) {
    for (auto h : C.into_[C.arrows_[f].dom.index]) {
      C.principal_[f].insert(ArrowId{static_cast<std::uint32_t>(table[h.index * n + f])});
    }
  }
  return C;
}

ArrowSet arrows_into(const FiniteCategory& C, ObjectId c) {
  if (c.index >= C.object_count()) {
    fail(ErrorKind::UnknownObject, "object index " + std::to_string(c.index) + " out of range");
  }
  return C.arrows_into(c);
}

bool is_mono(const FiniteCategory& C, ArrowId r) {
  if (r.index >= C.arrow_count()) {
    fail(ErrorKind::UnknownArrow, "arrow index " + std::to_string(r.index) + " out of range");
  }
  const auto incoming = C.arrows_into(C.dom(r));
  for (auto g : incoming) {
    for (auto h : incoming) {
      if (g == h || C.dom(g) != C.dom(h)) continue;
      if (C.compose(g, r) == C.compose(h, r)) return false;
    }
  }
  return true;
}

bool right_ore(const FiniteCategory& C) {
  for (auto c : C.objects()) {
    const auto incoming = C.arrows_into(c);
    for (auto f : incoming) {
      for (auto g : incoming) {
        // Need u into dom f, v into dom g with a common domain and u;f == v;g.
        // Equivalently the principal sieves of f and g intersect.
        if ((C.principal_sieve(f) & C.principal_sieve(g)).empty()) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> arrow_names(const FiniteCategory& C, ArrowSet s) {
  std::vector<std::string> out;
  for (auto f : s) out.push_back(C.name(f));
  return out;
}

}  // namespace demorgan
