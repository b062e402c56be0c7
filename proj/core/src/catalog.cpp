#include "demorgan/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace demorgan {

namespace fixtures {

FiniteCategory cspan() {
  return validate_category(RawCategory{{"a", "b", "c"}, {{"f", "a", "c"}, {"g", "b", "c"}}, {}, {}});
}

FiniteCategory mon2() { return monoid("id", {"e"}, {{"e"}}); }

FiniteCategory discrete(std::size_t objects) {
  RawCategory raw;
  for (std::size_t i = 0; i < objects; ++i) raw.objects.push_back("x" + std::to_string(i));
  return validate_category(raw);
}

FiniteCategory arrow() { return validate_category(RawCategory{{"a", "b"}, {{"f", "a", "b"}}, {}, {}}); }

FiniteCategory span() {
  return validate_category(RawCategory{{"a", "b", "c"}, {{"f", "c", "a"}, {"g", "c", "b"}}, {}, {}});
}

FiniteCategory parallel_pair() {
  return validate_category(RawCategory{{"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}}, {}, {}});
}

FiniteCategory z2() { return monoid("id", {"s"}, {{"id"}}); }

FiniteCategory left_zero_monoid() { return monoid("id", {"a", "b"}, {{"a", "a"}, {"b", "b"}}); }

FiniteCategory right_zero_monoid() { return monoid("id", {"a", "b"}, {{"a", "b"}, {"a", "b"}}); }

FiniteCategory commutative_square() {
  return validate_category(RawCategory{
      {"a", "b", "c", "d"},
      {{"p", "a", "b"}, {"q", "a", "c"}, {"r", "b", "d"}, {"s", "c", "d"}, {"t", "a", "d"}},
      {{"p", "r", "t"}, {"q", "s", "t"}},
      {}});
}

FiniteCategory chain3() {
  return validate_category(
      RawCategory{{"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}}, {{"f", "g", "h"}}, {}});
}

FiniteCategory three_cospan() {
  return validate_category(
      RawCategory{{"a", "b", "d", "c"}, {{"f", "a", "c"}, {"g", "b", "c"}, {"k", "d", "c"}}, {}, {}});
}

FiniteCategory ordinal_injections_op() {
  // Injections [m] -> [n] named by their image; [0] is the empty ordinal.
  RawCategory ord;
  ord.objects = {"0", "1", "2"};
  ord.arrows = {{"e1", "0", "1"}, {"e2", "0", "2"}, {"l", "1", "2"}, {"u", "1", "2"}};
  ord.compose = {{"e1", "l", "e2"}, {"e1", "u", "e2"}};
  return opposite(validate_category(ord));
}

FiniteCategory zero_monoid() {
  return monoid("id", {"x", "y", "z"}, {{"z", "z", "z"}, {"z", "z", "z"}, {"z", "z", "z"}});
}

std::vector<NamedCategory> all() {
  return {
      {"cspan", cspan()},
      {"mon2", mon2()},
      {"discrete1", discrete(1)},
      {"discrete3", discrete(3)},
      {"arrow", arrow()},
      {"span", span()},
      {"parallel_pair", parallel_pair()},
      {"z2", z2()},
      {"left_zero_monoid", left_zero_monoid()},
      {"right_zero_monoid", right_zero_monoid()},
      {"commutative_square", commutative_square()},
      {"chain3", chain3()},
      {"three_cospan", three_cospan()},
      {"ordinal_injections_op", ordinal_injections_op()},
      {"zero_monoid", zero_monoid()},
  };
}

Frame ch3() { return Frame(from_poset(RawOrder{{"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}})); }

Frame frm5() {
  return Frame(from_poset(RawOrder{{"{}", "{x}", "{y}", "{x,y}", "{x,y,z}"},
                                   {{"{}", "{x}"}, {"{}", "{y}"}, {"{x}", "{x,y}"}, {"{y}", "{x,y}"},
                                    {"{x,y}", "{x,y,z}"}}}));
}

Frame two() { return Frame(from_poset(RawOrder{{"0", "1"}, {{"0", "1"}}})); }

Frame boolean4() {
  return Frame(from_poset(RawOrder{{"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}}}));
}

}  // namespace fixtures

FiniteCategory opposite(const FiniteCategory& C) {
  RawCategory raw;
  for (auto c : C.objects()) {
    raw.objects.push_back(C.name(c));
    raw.identities.emplace_back(C.name(c), C.name(C.identity(c)));
  }
  for (auto f : C.arrows()) raw.arrows.push_back({C.name(f), C.name(C.cod(f)), C.name(C.dom(f))});
  for (auto f : C.arrows()) {
    if (C.is_identity(f)) continue;
    for (auto g : C.arrows()) {
      if (C.is_identity(g)) continue;
      if (auto h = C.compose(g, f)) raw.compose.push_back({C.name(f), C.name(g), C.name(*h)});
    }
  }
  return validate_category(raw);
}

FiniteCategory monoid(const std::string& identity, const std::vector<std::string>& elements,
                      const std::vector<std::vector<std::string>>& table) {
  RawCategory raw;
  raw.objects = {"*"};
  raw.arrows.push_back({identity, "*", "*"});
  raw.identities.emplace_back("*", identity);
  for (const auto& e : elements) raw.arrows.push_back({e, "*", "*"});
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) raw.compose.push_back({elements[i], elements[j], table[i][j]});
  }
  return validate_category(raw);
}

namespace {

// Arrow values during enumeration: 0..k-1 are the non-identity arrows,
// k + o is the identity of object o, -1 is unassigned.
struct Shape {
  std::size_t n = 0;
  std::vector<int> dom;
  std::vector<int> cod;
};

class CategorySearch {
 public:
  CategorySearch(Shape shape) : s_(std::move(shape)), k_(s_.dom.size()), table_(k_ * k_, -1) {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (s_.cod[i] == s_.dom[j]) cells_.emplace_back(i, j);
      }
    }
  }

  template <class Emit>
  void run(Emit&& emit) {
    search(0, emit);
  }

  int compose(int x, int y) const {
    if (x < 0 || y < 0) return -1;
    if (x >= static_cast<int>(k_)) return y;
    if (y >= static_cast<int>(k_)) return x;
    return table_[static_cast<std::size_t>(x) * k_ + static_cast<std::size_t>(y)];
  }

  const std::vector<int>& table() const { return table_; }

 private:
  bool consistent() const {
    for (std::size_t x = 0; x < k_; ++x) {
      for (std::size_t y = 0; y < k_; ++y) {
        if (s_.cod[x] != s_.dom[y]) continue;
        const int xy = table_[x * k_ + y];
        if (xy < 0) continue;
        for (std::size_t z = 0; z < k_; ++z) {
          if (s_.cod[y] != s_.dom[z]) continue;
          const int yz = table_[y * k_ + z];
          if (yz < 0) continue;
          const int left = compose(xy, static_cast<int>(z));
          const int right = compose(static_cast<int>(x), yz);
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    }
    return true;
  }

  template <class Emit>
  void search(std::size_t pos, Emit& emit) {
    if (pos == cells_.size()) {
      emit(*this);
      return;
    }
    const auto [i, j] = cells_[pos];
    std::vector<int> candidates;
    for (std::size_t l = 0; l < k_; ++l) {
      if (s_.dom[l] == s_.dom[i] && s_.cod[l] == s_.cod[j]) candidates.push_back(static_cast<int>(l));
    }
    if (s_.dom[i] == s_.cod[j]) candidates.push_back(static_cast<int>(k_) + s_.dom[i]);
    for (int v : candidates) {
      table_[i * k_ + j] = v;
      if (consistent()) search(pos + 1, emit);
    }
    table_[i * k_ + j] = -1;
  }

  Shape s_;
  std::size_t k_;
  std::vector<int> table_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

std::vector<int> canonical_code(const Shape& s, const std::vector<int>& table) {
  const auto k = s.dom.size();
  std::vector<int> obj(s.n);
  std::vector<int> arr(k);
  std::iota(obj.begin(), obj.end(), 0);
  std::vector<int> best;
  do {
    std::iota(arr.begin(), arr.end(), 0);  // arr[new] = old
    do {
      std::vector<int> code;
      code.reserve(2 * k + k * k);
      bool abandon = false;
      for (std::size_t a = 0; a < k && !abandon; ++a) {
        code.push_back(obj[static_cast<std::size_t>(s.dom[static_cast<std::size_t>(arr[a])])]);
        code.push_back(obj[static_cast<std::size_t>(s.cod[static_cast<std::size_t>(arr[a])])]);
        // Prefix already larger than the best code: no completion can win.
        if (!best.empty() && std::lexicographical_compare(best.begin(), best.begin() + static_cast<long>(code.size()),
                                                          code.begin(), code.end())) {
          abandon = true;
        }
        if (!best.empty() && !abandon &&
            !std::equal(code.begin(), code.end(), best.begin())) {
          break;  // strictly smaller prefix; finish without further pruning
        }
      }
      if (abandon) continue;
      code.resize(0);
      for (std::size_t a = 0; a < k; ++a) {
        code.push_back(obj[static_cast<std::size_t>(s.dom[static_cast<std::size_t>(arr[a])])]);
        code.push_back(obj[static_cast<std::size_t>(s.cod[static_cast<std::size_t>(arr[a])])]);
      }
      std::vector<int> inverse(k);
      for (std::size_t a = 0; a < k; ++a) inverse[static_cast<std::size_t>(arr[a])] = static_cast<int>(a);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          const int v = table[static_cast<std::size_t>(arr[a]) * k + static_cast<std::size_t>(arr[b])];
          if (v < 0) code.push_back(-1);
          else if (v >= static_cast<int>(k)) code.push_back(static_cast<int>(k) + obj[static_cast<std::size_t>(v) - k]);
          else code.push_back(inverse[static_cast<std::size_t>(v)]);
        }
      }
      if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(arr.begin(), arr.end()));
  } while (std::next_permutation(obj.begin(), obj.end()));
  return best;
}

FiniteCategory build(const Shape& s, const std::vector<int>& table) {
  const auto k = s.dom.size();
  RawCategory raw;
  for (std::size_t o = 0; o < s.n; ++o) raw.objects.push_back("o" + std::to_string(o));
  auto arrow_name = [&](int v) {
    if (v >= static_cast<int>(k)) return "id_o" + std::to_string(v - static_cast<int>(k));
    return "a" + std::to_string(v);
  };
  for (std::size_t a = 0; a < k; ++a) {
    raw.arrows.push_back({arrow_name(static_cast<int>(a)), raw.objects[static_cast<std::size_t>(s.dom[a])],
                          raw.objects[static_cast<std::size_t>(s.cod[a])]});
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const int v = table[a * k + b];
      if (v >= 0) raw.compose.push_back({arrow_name(static_cast<int>(a)), arrow_name(static_cast<int>(b)), arrow_name(v)});
    }
  }
  return validate_category(raw);
}

}  // namespace

std::vector<FiniteCategory> enumerate_small_categories(std::size_t max_objects, std::size_t max_arrows) {
  std::vector<FiniteCategory> out;
  for (std::size_t n = 1; n <= max_objects; ++n) {
    const auto types = n * n;
    for (std::size_t k = 0; k <= max_arrows; ++k) {
      std::set<std::vector<int>> seen;
      // Non-decreasing sequences of arrow types (dom * n + cod).
      std::vector<std::size_t> seq(k, 0);
      while (true) {
        Shape shape{n, {}, {}};
        for (auto t : seq) {
          shape.dom.push_back(static_cast<int>(t / n));
          shape.cod.push_back(static_cast<int>(t % n));
        }
        CategorySearch search(shape);
        search.run([&](const CategorySearch& found) {
          auto code = canonical_code(shape, found.table());
          if (seen.insert(std::move(code)).second) out.push_back(build(shape, found.table()));
        });
        // Advance to the next non-decreasing sequence.
        std::size_t pos = k;
        while (pos > 0 && seq[pos - 1] == types - 1) --pos;
        if (pos == 0) break;
        ++seq[pos - 1];
        for (std::size_t i = pos; i < k; ++i) seq[i] = seq[pos - 1];
      }
    }
  }
  return out;
}

}  // namespace demorgan
