#include "demorgan/frames.hpp"

#include <algorithm>

namespace demorgan {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& detail) { throw ValidationError(kind, detail); }

void require_element(const Frame& F, Element a) {
  if (a >= F.size()) fail(ErrorKind::UnknownElement, "element index " + std::to_string(a) + " out of range");
}

}  // namespace

Nucleus validate_nucleus(const Frame& F, std::vector<Element> table) {
  const auto& H = F.algebra();
  if (table.size() != H.size()) {
    fail(ErrorKind::UnknownElement, "nucleus table has " + std::to_string(table.size()) + " entries for a frame of " +
                                        std::to_string(H.size()) + " elements");
  }
  for (auto v : table) require_element(F, v);
  for (Element a = 0; a < H.size(); ++a) {
    if (!H.leq(a, table[a])) fail(ErrorKind::NotInflationary, "'" + H.name(a) + "' is not below its image");
  }
  for (Element a = 0; a < H.size(); ++a) {
    if (table[table[a]] != table[a]) fail(ErrorKind::NotIdempotent, "at '" + H.name(a) + "'");
  }
  for (Element a = 0; a < H.size(); ++a) {
    for (Element b = 0; b < H.size(); ++b) {
      if (table[H.meet(a, b)] != H.meet(table[a], table[b])) {
        fail(ErrorKind::NotMeetPreserving, "at ('" + H.name(a) + "', '" + H.name(b) + "')");
      }
    }
  }
  return Nucleus{std::move(table)};
}

Nucleus identity_nucleus(const Frame& F) {
  Nucleus j;
  for (Element a = 0; a < F.size(); ++a) j.table.push_back(a);
  return j;
}

Nucleus top_nucleus(const Frame& F) { return Nucleus{std::vector<Element>(F.size(), F.algebra().top())}; }

Nucleus open_nucleus(const Frame& F, Element a) {
  require_element(F, a);
  Nucleus j;
  for (Element x = 0; x < F.size(); ++x) j.table.push_back(F.algebra().implies(a, x));
  return j;
}

Nucleus closed_nucleus(const Frame& F, Element a) {
  require_element(F, a);
  Nucleus j;
  for (Element x = 0; x < F.size(); ++x) j.table.push_back(F.algebra().join(a, x));
  return j;
}

bool nucleus_leq(const Frame& F, const Nucleus& j, const Nucleus& k) {
  for (Element a = 0; a < F.size(); ++a) {
    if (!F.algebra().leq(j(a), k(a))) return false;
  }
  return true;
}

Nucleus nucleus_meet(const Frame& F, const Nucleus& j, const Nucleus& k) {
  Nucleus m;
  for (Element a = 0; a < F.size(); ++a) m.table.push_back(F.algebra().meet(j(a), k(a)));
  return m;
}

Nucleus nucleus_from_fixset(const Frame& F, const std::vector<Element>& fixed) {
  const auto& H = F.algebra();
  Nucleus j;
  for (Element a = 0; a < H.size(); ++a) {
    std::optional<Element> best;
    for (auto s : fixed) {
      if (H.leq(a, s) && (!best || H.leq(s, *best))) best = s;
    }
    if (!best) fail(ErrorKind::NotInflationary, "no fixed element above '" + H.name(a) + "'");
    j.table.push_back(*best);
  }
  return validate_nucleus(F, std::move(j.table));
}

Nucleus nucleus_join(const Frame& F, const Nucleus& j, const Nucleus& k) {
  std::vector<Element> both;
  for (Element a = 0; a < F.size(); ++a) {
    if (j(a) == a && k(a) == a) both.push_back(a);
  }
  return nucleus_from_fixset(F, both);
}

std::vector<Nucleus> enumerate_nuclei(const Frame& F, std::size_t max_size) {
  const auto& H = F.algebra();
  const auto n = H.size();
  if (n > max_size) {
    throw BoundExceeded("frame has " + std::to_string(n) + " elements; nucleus enumeration is capped at " +
                        std::to_string(max_size));
  }
  // Assign images along a linear extension so that a meet is always
  // assigned before both of its arguments.
  std::vector<Element> order(n);
  for (Element a = 0; a < n; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    std::size_t below_a = 0;
    std::size_t below_b = 0;
    for (Element x = 0; x < n; ++x) {
      below_a += H.leq(x, a);
      below_b += H.leq(x, b);
    }
    return below_a < below_b;
  });

  std::vector<Element> table(n);
  std::vector<char> assigned(n, 0);
  std::vector<Nucleus> out;
  auto extend = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      for (Element a = 0; a < n; ++a) {
        if (table[table[a]] != table[a]) return;
      }
      out.push_back(Nucleus{table});
      return;
    }
    const auto a = order[pos];
    for (Element v = 0; v < n; ++v) {
      if (!H.leq(a, v)) continue;
      table[a] = v;
      assigned[a] = 1;
      bool ok = !assigned[v] || table[v] == v;
      for (Element b = 0; b < n && ok; ++b) {
        if (!assigned[b]) continue;
        if (table[b] == a && v != a) ok = false;
        const auto m = H.meet(a, b);
        if (assigned[m] && table[m] != H.meet(v, table[b])) ok = false;
      }
      if (ok) self(self, pos + 1);
      assigned[a] = 0;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end(), [](const Nucleus& x, const Nucleus& y) { return x.table < y.table; });
  return out;
}

std::vector<Element> fixpoints(const Frame& F, const Nucleus& j) {
  std::vector<Element> out;
  for (Element a = 0; a < F.size(); ++a) {
    if (j(a) == a) out.push_back(a);
  }
  return out;
}

Frame fixset(const Frame& F, const Nucleus& j) { return Frame(induced_suborder(F.algebra(), fixpoints(F, j))); }

bool is_dense_nucleus(const Frame& F, const Nucleus& j) { return j(F.algebra().bottom()) == F.algebra().bottom(); }

Nucleus closure_nucleus(const Frame& F, const Nucleus& j) { return closed_nucleus(F, j(F.algebra().bottom())); }

DenseClosedFactorization dense_closed_factorization(const Frame& F, const Nucleus& j) {
  auto closed = closure_nucleus(F, j);
  const auto embedding = fixpoints(F, closed);
  Frame part = fixset(F, closed);
  std::vector<Element> residual;
  for (auto x : embedding) {
    const auto image = j(x);
    residual.push_back(static_cast<Element>(std::find(embedding.begin(), embedding.end(), image) - embedding.begin()));
  }
  auto r = validate_nucleus(part, std::move(residual));
  return DenseClosedFactorization{std::move(closed), std::move(part), std::move(r)};
}

std::vector<Element> filter_generated(const Frame& F, const std::vector<Element>& generators) {
  const auto& H = F.algebra();
  Element least = H.top();
  for (auto g : generators) {
    require_element(F, g);
    least = H.meet(least, g);
  }
  std::vector<Element> out;
  for (Element a = 0; a < H.size(); ++a) {
    if (H.leq(least, a)) out.push_back(a);
  }
  return out;
}

Nucleus quotient_by_filter(const Frame& F, const std::vector<Element>& generators) {
  const auto filter = filter_generated(F, generators);
  const auto& H = F.algebra();
  Element least = H.top();
  for (auto a : filter) least = H.meet(least, a);
  return open_nucleus(F, least);
}

DeMorganization demorganize_frame(const Frame& F) {
  const auto& H = F.algebra();
  std::vector<Element> generators;
  for (auto u : regular_element_indices(H)) generators.push_back(H.join(u, H.neg(u)));
  auto j = quotient_by_filter(F, generators);
  auto quotient = fixset(F, j);
  return DeMorganization{std::move(j), std::move(quotient)};
}

bool is_extremally_disconnected(const Frame& F) {
  for (Element a = 0; a < F.size(); ++a) {
    const auto closure = closure_nucleus(F, open_nucleus(F, a));
    bool open = false;
    for (Element b = 0; b < F.size() && !open; ++b) open = open_nucleus(F, b) == closure;
    if (!open) return false;
  }
  return true;
}

bool is_almost_discrete(const Frame& F) {
  for (Element a = 0; a < F.size(); ++a) {
    const auto o = open_nucleus(F, a);
    bool closed = false;
    for (Element b = 0; b < F.size() && !closed; ++b) closed = closed_nucleus(F, b) == o;
    if (!closed) return false;
  }
  return true;
}

std::vector<Frame> frame_catalog(std::size_t max_size) {
  std::vector<Frame> out;
  for (auto& H : heyting_catalog(max_size)) out.emplace_back(std::move(H));
  return out;
}

}  // namespace demorgan
