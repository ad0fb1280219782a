#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fig/field.hpp"

namespace fig {

class CompositionMismatch : public Error {
 public:
  using Error::Error;
};

class GroupError : public Error {
 public:
  using Error::Error;
};

/// A finite group given by its multiplication table. Elements are indices;
/// their order is the canonical element order used by Hom enumeration
/// (cyclic: exponent 0..q-1; explicit table: row index).
class FiniteGroup {
 public:
  enum class Kind { trivial, cyclic, table };

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int q);
  /// Validates closure, identity, associativity and inverses.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, int identity);

  Kind kind() const { return data_->kind; }
  int order() const { return static_cast<int>(data_->table.size()); }
  int identity() const { return data_->identity; }
  int mul(int a, int b) const { return data_->table[a][b]; }
  int inverse(int a) const { return data_->inverse[a]; }
  const std::vector<std::vector<int>>& table() const { return data_->table; }

  /// Generating set, as element indices.
  const std::vector<int>& generators() const { return data_->generators; }
  /// Word in generators() (by position) whose product, left to right, is the element.
  const std::vector<int>& word(int element) const { return data_->words[element]; }

  std::string describe() const;
  bool operator==(const FiniteGroup& other) const;

 private:
  struct Data {
    Kind kind = Kind::trivial;
    int identity = 0;
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;
    std::vector<int> generators;
    std::vector<std::vector<int>> words;
  };
  static FiniteGroup build(Kind kind, std::vector<std::vector<int>> table, int identity);
  std::shared_ptr<const Data> data_;
};

/// A morphism [source] → [target] of the skeletal FI_G category: an injection
/// with one group element attached to each source point. Points are 0-based
/// internally; files and reports print them 1-based.
struct FiMorphism {
  int source = 0;
  int target = 0;
  std::vector<int> injection;
  std::vector<int> decoration;

  bool is_invertible() const { return source == target; }
  std::string to_string() const;
  bool operator==(const FiMorphism&) const = default;
  auto operator<=>(const FiMorphism&) const = default;

  static FiMorphism identity(int n, const FiniteGroup& g);
  /// The standard inclusion [n] → [n+k], x ↦ x, trivial decoration.
  static FiMorphism standard_inclusion(int n, int k, const FiniteGroup& g);
};

/// |Hom(m, n)| = |G|^m · n!/(n-m)!, and 0 when m > n.
std::size_t hom_count(int m, int n, const FiniteGroup& g);

/// All morphisms m → n in canonical order: injection tuple ascending, then
/// decoration tuple ascending in the group's element order.
std::vector<FiMorphism> enumerate_hom(int m, int n, const FiniteGroup& g);

/// Position of f in enumerate_hom(f.source, f.target, g).
std::size_t hom_index(const FiMorphism& f, const FiniteGroup& g);
FiMorphism hom_at(int m, int n, std::size_t index, const FiniteGroup& g);

/// second ∘ first; decoration at x is second.dec(first(x)) · first.dec(x).
FiMorphism compose(const FiMorphism& second, const FiMorphism& first, const FiniteGroup& g);

/// f = unit ∘ ι^k with k = target - source, unit ∈ G_target the extension of f
/// that is increasing with trivial decoration on the complement.
struct Factorization {
  FiMorphism unit;
  int k = 0;
};
Factorization factorize(const FiMorphism& f, const FiniteGroup& g);

/// Generators of G_n = G ≀ S_n: adjacent transpositions s_1..s_{n-1}, then for
/// every generator h of G the element acting by h on the first point.
std::vector<FiMorphism> group_generators(int n, const FiniteGroup& g);
std::size_t group_generator_count(int n, const FiniteGroup& g);

/// Index into group_generators(n) of the adjacent transposition swapping
/// points i and i+1 (0-based), and of the i-th group generator on point 0.
inline std::size_t transposition_slot(int i) { return static_cast<std::size_t>(i); }
inline std::size_t decoration_slot(int n, int gen) { return static_cast<std::size_t>(n - 1 + gen); }

/// A unit of G_n written as a product of group_generators(n); letters are
/// generator slots and the product reads left to right (apply the last first).
std::vector<std::size_t> unit_word(const FiMorphism& unit, const FiniteGroup& g);

}  // namespace fig
