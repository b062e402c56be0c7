#include "demorgan/heyting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace demorgan {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& detail) { throw ValidationError(kind, detail); }

void require_element(const HeytingAlgebra& H, Element a) {
  if (a >= H.size()) fail(ErrorKind::UnknownElement, "element index " + std::to_string(a) + " out of range");
}

using Matrix = std::vector<std::vector<char>>;

// Least upper bound of a and b in an order matrix, if any.
std::optional<std::size_t> least_upper_bound(const Matrix& leq, std::size_t a, std::size_t b) {
  const auto n = leq.size();
  std::optional<std::size_t> best;
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[a][x] || !leq[b][x]) continue;
    if (!best || leq[x][*best]) best = x;
  }
  if (!best) return std::nullopt;
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[a][x] && leq[b][x] && !leq[*best][x]) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> greatest_lower_bound(const Matrix& leq, std::size_t a, std::size_t b) {
  const auto n = leq.size();
  std::optional<std::size_t> best;
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x][a] || !leq[x][b]) continue;
    if (!best || leq[*best][x]) best = x;
  }
  if (!best) return std::nullopt;
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[x][a] && leq[x][b] && !leq[x][*best]) return std::nullopt;
  }
  return best;
}

bool is_lattice(const Matrix& leq) {
  const auto n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!least_upper_bound(leq, a, b) || !greatest_lower_bound(leq, a, b)) return false;
    }
  }
  return n > 0;
}

}  // namespace

std::optional<Element> HeytingAlgebra::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Element HeytingAlgebra::element(const std::string& name) const {
  if (auto a = find(name)) return *a;
  fail(ErrorKind::UnknownElement, "no element named '" + name + "'");
}

HeytingAlgebra from_poset(const RawOrder& raw) {
  HeytingAlgebra H;
  const auto n = raw.elements.size();
  if (n == 0) fail(ErrorKind::NotALattice, "the empty order has no top or bottom");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(raw.elements[i], i).second) {
      fail(ErrorKind::NotAPartialOrder, "element '" + raw.elements[i] + "' listed twice");
    }
  }
  Matrix leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
  for (const auto& [a, b] : raw.leq) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(ErrorKind::UnknownElement, "order refers to unknown element '" + a + "'");
    if (ib == index.end()) fail(ErrorKind::UnknownElement, "order refers to unknown element '" + b + "'");
    leq[ia->second][ib->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i][j] && leq[j][i]) {
        fail(ErrorKind::NotAPartialOrder,
             "'" + raw.elements[i] + "' and '" + raw.elements[j] + "' are below each other");
      }
    }
  }

  H.names_ = raw.elements;
  H.leq_.resize(n * n);
  H.meet_.resize(n * n);
  H.join_.resize(n * n);
  H.imp_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) H.leq_[a * n + b] = leq[a][b];
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto m = greatest_lower_bound(leq, a, b);
      const auto j = least_upper_bound(leq, a, b);
      if (!m || !j) {
        fail(ErrorKind::NotALattice, "no " + std::string(!m ? "meet" : "join") + " for ('" + raw.elements[a] +
                                         "', '" + raw.elements[b] + "')");
      }
      H.meet_[a * n + b] = static_cast<Element>(*m);
      H.join_[a * n + b] = static_cast<Element>(*j);
    }
  }
  Element bottom = 0;
  Element top = 0;
  for (Element a = 0; a < n; ++a) {
    bottom = H.meet_[bottom * n + a];
    top = H.join_[top * n + a];
  }
  H.bottom_ = bottom;
  H.top_ = top;

  // a -> b is the maximum of {x | x and a <= b}, when that set has one.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> best;
      for (std::size_t x = 0; x < n; ++x) {
        if (!leq[H.meet_[x * n + a]][b]) continue;
        if (!best || leq[*best][x]) best = x;
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (leq[H.meet_[x * n + a]][b] && !leq[x][*best]) {
          fail(ErrorKind::NotResiduated, "no implication ('" + raw.elements[a] + "', '" + raw.elements[b] + "')");
        }
      }
      H.imp_[a * n + b] = static_cast<Element>(*best);
    }
  }
  return H;
}

HeytingAlgebra from_order_matrix(const std::vector<std::string>& names, const std::vector<std::vector<char>>& leq) {
  RawOrder raw{names, {}};
  for (std::size_t a = 0; a < leq.size(); ++a) {
    for (std::size_t b = 0; b < leq.size(); ++b) {
      if (a != b && leq[a][b]) raw.leq.emplace_back(names[a], names[b]);
    }
  }
  return from_poset(raw);
}

Element implication(const HeytingAlgebra& H, Element a, Element b) {
  require_element(H, a);
  require_element(H, b);
  return H.implies(a, b);
}

Element negation(const HeytingAlgebra& H, Element a) {
  require_element(H, a);
  return H.neg(a);
}

bool is_de_morgan_algebra(const HeytingAlgebra& H) {
  for (Element p = 0; p < H.size(); ++p) {
    if (H.join(H.neg(p), H.neg(H.neg(p))) != H.top()) return false;
  }
  return true;
}

bool is_boolean_algebra(const HeytingAlgebra& H) {
  for (Element p = 0; p < H.size(); ++p) {
    if (H.join(p, H.neg(p)) != H.top()) return false;
  }
  return true;
}

bool is_complemented(const HeytingAlgebra& H, Element a) {
  for (Element b = 0; b < H.size(); ++b) {
    if (H.meet(a, b) == H.bottom() && H.join(a, b) == H.top()) return true;
  }
  return false;
}

bool has_de_morgan_property(const HeytingAlgebra& H) {
  const auto zero = H.bottom();
  for (Element r = 0; r < H.size(); ++r) {
    if (r == zero || H.neg(r) == zero) continue;
    bool found = false;
    for (Element f = 0; f < H.size() && !found; ++f) {
      if (!is_complemented(H, f) || H.meet(f, r) != zero) continue;
      bool separates = true;
      for (Element x = 0; x < H.size() && separates; ++x) {
        if (x != zero && H.meet(x, f) == zero && H.meet(x, r) == zero) separates = false;
      }
      found = separates;
    }
    if (!found) return false;
  }
  return true;
}

bool has_boolean_property(const HeytingAlgebra& H) {
  const auto zero = H.bottom();
  for (Element r = 0; r < H.size(); ++r) {
    bool meets_all = true;
    for (Element x = 0; x < H.size() && meets_all; ++x) {
      if (x != zero && H.meet(x, r) == zero) meets_all = false;
    }
    if (meets_all && r != H.top()) return false;
  }
  return true;
}

std::vector<Element> cons(const HeytingAlgebra& H, Element h) {
  require_element(H, h);
  std::vector<Element> out;
  for (Element x = 0; x < H.size(); ++x) {
    if (H.meet(x, h) != H.bottom()) out.push_back(x);
  }
  return out;
}

std::vector<Element> regular_element_indices(const HeytingAlgebra& H) {
  std::vector<Element> out;
  for (Element a = 0; a < H.size(); ++a) {
    if (H.neg(H.neg(a)) == a) out.push_back(a);
  }
  return out;
}

HeytingAlgebra regular_elements(const HeytingAlgebra& H) { return induced_suborder(H, regular_element_indices(H)); }

HeytingAlgebra induced_suborder(const HeytingAlgebra& H, const std::vector<Element>& elements) {
  RawOrder raw;
  for (auto a : elements) raw.elements.push_back(H.name(a));
  for (auto a : elements) {
    for (auto b : elements) {
      if (a != b && H.leq(a, b)) raw.leq.emplace_back(H.name(a), H.name(b));
    }
  }
  return from_poset(raw);
}

bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  const auto n = a.size();
  if (n != b.size()) return false;
  auto signature = [](const HeytingAlgebra& H, Element x) {
    std::size_t below = 0;
    std::size_t above = 0;
    for (Element y = 0; y < H.size(); ++y) {
      below += H.leq(y, x);
      above += H.leq(x, y);
    }
    return std::pair{below, above};
  };
  std::vector<Element> image(n);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y] || signature(a, x) != signature(b, y)) continue;
      bool ok = true;
      for (Element z = 0; z < x && ok; ++z) {
        ok = a.leq(z, x) == b.leq(image[z], y) && a.leq(x, z) == b.leq(y, image[z]);
      }
      if (!ok) continue;
      used[y] = 1;
      image[x] = y;
      if (self(self, x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

std::vector<RawOrder> lattice_catalog(std::size_t max_size) {
  std::vector<RawOrder> out;
  if (max_size >= 1) out.push_back(RawOrder{{"0"}, {}});
  for (std::size_t n = 2; n <= max_size; ++n) {
    const std::size_t k = n - 2;
    // Strict orders on the inner elements compatible with their index order
    // (every poset has a linear extension), as bitmasks over pairs i < j.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::size_t> perm(k);
    std::set<std::vector<char>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Matrix lt(k, std::vector<char>(k, 0));
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if ((mask >> p) & 1U) lt[pairs[p].first][pairs[p].second] = 1;
      }
      bool transitive = true;
      for (std::size_t i = 0; i < k && transitive; ++i) {
        for (std::size_t j = 0; j < k && transitive; ++j) {
          if (!lt[i][j]) continue;
          for (std::size_t l = 0; l < k; ++l) {
            if (lt[j][l] && !lt[i][l]) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (!transitive) continue;

      // Full order: index 0 is bottom, 1 is top, inner element i is i + 2.
      Matrix leq(n, std::vector<char>(n, 0));
      for (std::size_t x = 0; x < n; ++x) {
        leq[0][x] = 1;
        leq[x][1] = 1;
        leq[x][x] = 1;
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (lt[i][j]) leq[i + 2][j + 2] = 1;
        }
      }
      if (!is_lattice(leq)) continue;

      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::vector<char> best;
      do {
        std::vector<char> code(k * k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) code[perm[i] * k + perm[j]] = lt[i][j];
        }
        if (best.empty() || code < best) best = std::move(code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(best).second) continue;

      RawOrder raw;
      raw.elements = {"0", "1"};
      for (std::size_t i = 0; i < k; ++i) raw.elements.push_back("x" + std::to_string(i + 1));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b && leq[a][b]) raw.leq.emplace_back(raw.elements[a], raw.elements[b]);
        }
      }
      out.push_back(std::move(raw));
    }
  }
  return out;
}

std::vector<HeytingAlgebra> heyting_catalog(std::size_t max_size) {
  std::vector<HeytingAlgebra> out;
  for (const auto& raw : lattice_catalog(max_size)) {
    try {
      out.push_back(from_poset(raw));
    } catch (const ValidationError& e) {
      if (e.kind() != ErrorKind::NotResiduated) throw;
    }
  }
  return out;
}

}  // namespace demorgan
