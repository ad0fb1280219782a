#pragma once

#include <vector>

#include "fig/module.hpp"

namespace fig {

/// V = coker(F¹ → F⁰): generators give F⁰, each relation is an element of F⁰
/// (coordinates in the canonical basis: generator-major, then Hom order).
struct Presentation {
  Field field = Field::rationals();
  FiniteGroup group = FiniteGroup::trivial();
  int truncation = 0;
  FreeModuleSpec generators;
  std::vector<Element> relations;

  /// Generator degrees of F¹, one per relation.
  FreeModuleSpec relation_spec() const;
  bool operator==(const Presentation& other) const;
};

struct PresentedModule {
  Presentation presentation;
  Module free;                 // F⁰
  Submodule relations;         // image of F¹ in F⁰
  Module module;               // F⁰ / relations
  ModuleMorphism projection;   // F⁰ → module

  /// gd(F⁰) and gd(F¹); −1 when empty.
  int free_degree() const { return presentation.generators.max_degree(); }
  int relation_degree() const { return presentation.relation_spec().max_degree(); }
};

/// Builds the quotient and re-checks the functor conditions on every degree
/// of dimension at most `validate_dim`. Throws InvalidModule on failure.
PresentedModule from_presentation(const Presentation& p, std::size_t validate_dim = 200);

/// The element of `presented.module` represented by a vector of F⁰.
Element project(const PresentedModule& presented, const Element& x);

}  // namespace fig
