#include "fig/category.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

namespace fig {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::build(Kind kind, std::vector<std::vector<int>> table, int identity) {
  auto data = std::make_shared<Data>();
  data->kind = kind;
  data->identity = identity;
  data->table = std::move(table);
  const int n = static_cast<int>(data->table.size());
  data->inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (data->table[a][b] == identity)
        data->inverse[a] = b;

  // Greedy generating set in element order, words by breadth-first search.
  std::vector<bool> reached(n, false);
  auto closure = [&]() {
    std::fill(reached.begin(), reached.end(), false);
    std::deque<int> todo{identity};
    reached[identity] = true;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (int gen : data->generators) {
        int y = data->table[x][gen];
        if (!reached[y]) {
          reached[y] = true;
          todo.push_back(y);
        }
      }
    }
  };
  closure();
  for (int x = 0; x < n; ++x)
    if (!reached[x]) {
      data->generators.push_back(x);
      closure();
    }
  data->words.assign(n, {});
  std::vector<bool> seen(n, false);
  std::deque<int> todo{identity};
  seen[identity] = true;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < data->generators.size(); ++k) {
      int y = data->table[x][data->generators[k]];
      if (!seen[y]) {
        seen[y] = true;
        data->words[y] = data->words[x];
        data->words[y].push_back(static_cast<int>(k));
        todo.push_back(y);
      }
    }
  }
  FiniteGroup g;
  g.data_ = std::move(data);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return build(Kind::trivial, {{0}}, 0); }

FiniteGroup FiniteGroup::cyclic(int q) {
  if (q < 1)
    throw GroupError("cyclic group order must be at least 1, got " + std::to_string(q));
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[a][b] = (a + b) % q;
  return build(Kind::cyclic, std::move(table), 0);
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, int identity) {
  const int n = static_cast<int>(table.size());
  if (n < 1)
    throw GroupError("group table is empty");
  if (identity < 0 || identity >= n)
    throw GroupError("identity index out of range");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw GroupError("group table is not square");
    std::vector<bool> hit(n, false);
    for (int v : row) {
      if (v < 0 || v >= n)
        throw GroupError("group table entry out of range");
      if (hit[v])
        throw GroupError("group table row is not a permutation (no inverses)");
      hit[v] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw GroupError("identity index does not act as identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw GroupError("group table is not associative");
  return build(Kind::table, std::move(table), identity);
}

std::string FiniteGroup::describe() const {
  switch (kind()) {
    case Kind::trivial:
      return "trivial";
    case Kind::cyclic:
      return "cyclic(" + std::to_string(order()) + ")";
    case Kind::table:
      return "table(order " + std::to_string(order()) + ")";
  }
  return "?";
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return data_ == other.data_ || (kind() == other.kind() && identity() == other.identity() &&
                                  table() == other.table());
}

// ---------------------------------------------------------------------------
// Morphisms

std::string FiMorphism::to_string() const {
  std::ostringstream out;
  out << "[" << source << "]->[" << target << "] (";
  for (int x = 0; x < source; ++x)
    out << (x ? ", " : "") << x + 1 << "->" << injection[x] + 1 << ":" << decoration[x];
  out << ")";
  return out.str();
}

FiMorphism FiMorphism::identity(int n, const FiniteGroup& g) {
  return standard_inclusion(n, 0, g);
}

FiMorphism FiMorphism::standard_inclusion(int n, int k, const FiniteGroup& g) {
  FiMorphism f{n, n + k, std::vector<int>(n), std::vector<int>(n, g.identity())};
  for (int x = 0; x < n; ++x)
    f.injection[x] = x;
  return f;
}

namespace {

/// Points of [n] already taken; one word up to 64 points.
class PointSet {
 public:
  explicit PointSet(int n) {
    if (n > 64)
      big_.assign(static_cast<std::size_t>(n), false);
  }
  bool has(int v) const { return big_.empty() ? (small_ >> v) & 1 : big_[v]; }
  void add(int v) {
    if (big_.empty())
      small_ |= std::uint64_t{1} << v;
    else
      big_[v] = true;
  }

 private:
  std::uint64_t small_ = 0;
  std::vector<bool> big_;
};

std::size_t falling(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i)
    r *= static_cast<std::size_t>(n - i);
  return r;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i)
    r *= b;
  return r;
}

}  // namespace

std::size_t hom_count(int m, int n, const FiniteGroup& g) {
  if (m < 0 || m > n)
    return 0;
  return ipow(static_cast<std::size_t>(g.order()), m) * falling(n, m);
}

std::vector<FiMorphism> enumerate_hom(int m, int n, const FiniteGroup& g) {
  std::vector<FiMorphism> out;
  if (m < 0 || m > n)
    return out;
  out.reserve(hom_count(m, n, g));
  const std::size_t total = hom_count(m, n, g);
  for (std::size_t i = 0; i < total; ++i)
    out.push_back(hom_at(m, n, i, g));
  return out;
}

std::size_t hom_index(const FiMorphism& f, const FiniteGroup& g) {
  const int m = f.source, n = f.target;
  PointSet used(n);
  std::size_t inj = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int v = 0; v < f.injection[i]; ++v)
      if (!used.has(v))
        ++smaller;
    used.add(f.injection[i]);
    inj += static_cast<std::size_t>(smaller) * falling(n - i - 1, m - i - 1);
  }
  std::size_t dec = 0;
  for (int i = 0; i < m; ++i)
    dec = dec * static_cast<std::size_t>(g.order()) + static_cast<std::size_t>(f.decoration[i]);
  return inj * ipow(static_cast<std::size_t>(g.order()), m) + dec;
}

FiMorphism hom_at(int m, int n, std::size_t index, const FiniteGroup& g) {
  const std::size_t decorations = ipow(static_cast<std::size_t>(g.order()), m);
  std::size_t inj = index / decorations;
  std::size_t dec = index % decorations;
  FiMorphism f{m, n, std::vector<int>(m), std::vector<int>(m)};
  for (int i = m - 1; i >= 0; --i) {
    f.decoration[i] = static_cast<int>(dec % static_cast<std::size_t>(g.order()));
    dec /= static_cast<std::size_t>(g.order());
  }
  PointSet used(n);
  for (int i = 0; i < m; ++i) {
    const std::size_t block = falling(n - i - 1, m - i - 1);
    std::size_t skip = inj / block;
    inj %= block;
    for (int v = 0; v < n; ++v) {
      if (used.has(v))
        continue;
      if (skip == 0) {
        f.injection[i] = v;
        used.add(v);
        break;
      }
      --skip;
    }
  }
  return f;
}

FiMorphism compose(const FiMorphism& second, const FiMorphism& first, const FiniteGroup& g) {
  if (first.target != second.source)
    throw CompositionMismatch("compose: target " + std::to_string(first.target) +
                              " does not match source " + std::to_string(second.source));
  FiMorphism out{first.source, second.target, std::vector<int>(first.source),
                 std::vector<int>(first.source)};
  for (int x = 0; x < first.source; ++x) {
    int y = first.injection[x];
    out.injection[x] = second.injection[y];
    out.decoration[x] = g.mul(second.decoration[y], first.decoration[x]);
  }
  return out;
}

Factorization factorize(const FiMorphism& f, const FiniteGroup& g) {
  const int n = f.target;
  FiMorphism unit{n, n, f.injection, f.decoration};
  std::vector<bool> used(n, false);
  for (int v : f.injection)
    used[v] = true;
  for (int v = 0; v < n; ++v)
    if (!used[v]) {
      unit.injection.push_back(v);
      unit.decoration.push_back(g.identity());
    }
  return {std::move(unit), n - f.source};
}

std::size_t group_generator_count(int n, const FiniteGroup& g) {
  if (n == 0)
    return 0;
  return static_cast<std::size_t>(n - 1) + g.generators().size();
}

std::vector<FiMorphism> group_generators(int n, const FiniteGroup& g) {
  std::vector<FiMorphism> out;
  if (n == 0)
    return out;
  for (int i = 0; i + 1 < n; ++i) {
    FiMorphism s = FiMorphism::identity(n, g);
    std::swap(s.injection[i], s.injection[i + 1]);
    out.push_back(std::move(s));
  }
  for (int h : g.generators()) {
    FiMorphism t = FiMorphism::identity(n, g);
    t.decoration[0] = h;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::size_t> unit_word(const FiMorphism& unit, const FiniteGroup& g) {
  if (!unit.is_invertible())
    throw CompositionMismatch("unit_word: " + unit.to_string() + " is not invertible");
  const int n = unit.target;
  std::vector<std::size_t> word;

  // Permutation part: σ = σ'∘s_i peels descents; letters come out reversed.
  std::vector<int> perm = unit.injection;
  std::vector<std::size_t> reversed;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        reversed.push_back(transposition_slot(i));
        changed = true;
        break;
      }
  }
  word.assign(reversed.rbegin(), reversed.rend());

  // Decoration part: (id, h@x) = τ_x ∘ (id, h@0) ∘ τ_x with τ_x = (0 x).
  for (int x = 0; x < n; ++x) {
    int h = unit.decoration[x];
    if (h == g.identity())
      continue;
    std::vector<std::size_t> tau;
    for (int i = 0; i < x; ++i)
      tau.push_back(transposition_slot(i));
    for (int i = x - 2; i >= 0; --i)
      tau.push_back(transposition_slot(i));
    word.insert(word.end(), tau.begin(), tau.end());
    for (int letter : g.word(h))
      word.push_back(decoration_slot(n, letter));
    word.insert(word.end(), tau.begin(), tau.end());
  }
  return word;
}

}  // namespace fig
