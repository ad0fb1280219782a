#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fig/category.hpp"
#include "fig/linalg.hpp"

namespace fig {

class TruncationExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidSubmodule : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidModule : public Error {
 public:
  using Error::Error;
};

/// An FI_G-module known in degrees 0..N. Only the inclusions ι_n: V_n → V_{n+1}
/// and the actions of group_generators(n) are stored; every other morphism
/// acts through its factorization unit ∘ ι^k.
class Module {
 public:
  Module(Field field, FiniteGroup group, int truncation, std::vector<std::size_t> dims,
         std::vector<Matrix> iota, std::vector<std::vector<Matrix>> actions);

  static Module zero(const Field& field, const FiniteGroup& group, int truncation);

  const Field& field() const { return field_; }
  const FiniteGroup& group() const { return group_; }
  int truncation() const { return truncation_; }

  std::size_t dim(int n) const { return dims_.at(static_cast<std::size_t>(n)); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  /// dim(n+1) × dim(n), for 0 ≤ n < N.
  const Matrix& iota(int n) const { return iota_.at(static_cast<std::size_t>(n)); }
  /// One square matrix per entry of group_generators(n).
  const std::vector<Matrix>& actions(int n) const {
    return actions_.at(static_cast<std::size_t>(n));
  }

  /// ι^{to-from}: V_from → V_to.
  Matrix iota_chain(int from, int to) const;
  /// Action of an invertible morphism on the columns of `vectors`.
  Matrix apply_unit(const FiMorphism& unit, const Matrix& vectors) const;
  /// Action of any morphism on the columns of `vectors` (elements of V_source).
  Matrix apply(const FiMorphism& f, const Matrix& vectors) const;
  Matrix morphism_matrix(const FiMorphism& f) const;

  /// The same module forgetting degrees above `n`.
  Module truncated(int n) const;

  /// Replaces one stored matrix; used to build deliberately broken modules.
  void overwrite_action(int n, std::size_t slot, Matrix m);
  void overwrite_iota(int n, Matrix m);

 private:
  Field field_;
  FiniteGroup group_;
  int truncation_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> iota_;
  std::vector<std::vector<Matrix>> actions_;
};

/// An element of V_degree, stored as a column.
struct Element {
  int degree = 0;
  Matrix coords;
};

Element apply_morphism(const Module& v, const Element& x, const FiMorphism& f);

/// Degreewise maps φ_n: V_n → W_n for 0 ≤ n ≤ truncation.
struct ModuleMorphism {
  std::vector<Matrix> maps;
  int truncation() const { return static_cast<int>(maps.size()) - 1; }
};

/// Checks shapes and commutation with ι and every generator action, exactly.
std::vector<std::string> morphism_violations(const Module& source, const Module& target,
                                             const ModuleMorphism& phi);
bool is_module_morphism(const Module& source, const Module& target, const ModuleMorphism& phi);
ModuleMorphism identity_morphism(const Module& v);
ModuleMorphism zero_morphism(const Module& source, const Module& target);
/// second ∘ first.
ModuleMorphism compose(const ModuleMorphism& second, const ModuleMorphism& first);

/// Exact check of the functor conditions: Coxeter and G relations of G_n,
/// the wreath commutations, intertwining of ι with G_n, and triviality of
/// G-elements fixing the image of ι (and of ι²). Degrees whose dimension
/// exceeds `max_dim` are skipped.
std::vector<std::string> functor_violations(const Module& v, std::size_t max_dim = SIZE_MAX);

struct FreeModuleSpec {
  std::vector<int> degrees;
  int max_degree() const;  // -1 for the empty spec
  bool operator==(const FreeModuleSpec&) const = default;
};

/// ⊕ M(m_i): degree n has basis ⊔_i Hom(m_i, n) (generator-major, canonical
/// Hom order); morphisms act by postcomposition.
Module free_module(const FreeModuleSpec& spec, int truncation, const Field& field,
                   const FiniteGroup& group);
/// Offset of generator i's block inside degree n of free_module(spec).
std::size_t free_offset(const FreeModuleSpec& spec, std::size_t generator, int n,
                        const FiniteGroup& group);

/// The canonical generator (identity morphism) of generator i as an element.
Element free_generator(const FreeModuleSpec& spec, std::size_t generator, const Field& field,
                       const FiniteGroup& group);

Module direct_sum(const Module& a, const Module& b);
ModuleMorphism direct_sum(const ModuleMorphism& a, const ModuleMorphism& b);

/// Per-degree subspaces of an ambient module; a submodule when stable under
/// ι and the generator actions.
struct Submodule {
  std::vector<SubspaceBasis> parts;
  std::vector<std::size_t> dims() const;
  bool operator==(const Submodule&) const = default;
};

Submodule zero_submodule(const Module& v);
Submodule full_submodule(const Module& v);
bool is_submodule(const Module& v, const Submodule& w);
Submodule sum(const Submodule& a, const Submodule& b);

/// Smallest submodule containing the given elements, degrees 0..N.
Submodule submodule_span(const Module& v, const std::vector<Element>& generators);

/// 𝔪^power·W: (𝔪W)_n is the G_n-saturation of ι(W_{n-1}).
Submodule m_multiply(const Module& v, const Submodule& w, int power);

struct Realized {
  Module module;
  ModuleMorphism map;
};

/// Skip the stability check for submodules stable by construction (spans,
/// kernels and images of morphisms).
enum class Validate { yes, no };

/// W as a module in its echelon basis, with the inclusion into V.
Realized realize(const Module& v, const Submodule& w, Validate check = Validate::yes);
/// V/W on the canonical complement basis, with the projection V → V/W.
/// Throws InvalidSubmodule when W is not stable.
Realized quotient(const Module& v, const Submodule& w, Validate check = Validate::yes);

Submodule kernel_submodule(const Module& source, const ModuleMorphism& phi);
Submodule image_submodule(const Module& target, const ModuleMorphism& phi);
/// phi must be a module morphism (see is_module_morphism).
Realized kernel_of(const Module& source, const Module& target, const ModuleMorphism& phi);
Realized cokernel_of(const Module& source, const Module& target, const ModuleMorphism& phi);

/// The map M(m) → V sending the identity of Hom(m, m) to x (m = x.degree).
/// `free` must be free_module({m}) with the module's context.
ModuleMorphism yoneda_morphism(const Module& free, const Module& v, const Element& x);
/// Map from free_module(spec) to V sending generator i to images[i].
ModuleMorphism free_map(const FreeModuleSpec& spec, const Module& free, const Module& v,
                        const std::vector<Element>& images);

}  // namespace fig
