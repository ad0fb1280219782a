#pragma once

#include <optional>
#include <vector>

#include "fig/invariants.hpp"

namespace fig {

/// A map of free modules F¹ → F⁰ given by the images of the generators of F¹.
struct FreeMap {
  Field field = Field::rationals();
  FiniteGroup group = FiniteGroup::trivial();
  int truncation = 0;
  FreeModuleSpec source;      // F¹
  FreeModuleSpec target;      // F⁰
  std::vector<Matrix> images; // images[i] ∈ F⁰ in degree source.degrees[i]

  bool operator==(const FreeMap&) const = default;
};

struct UnsupportedInput : Error {
  using Error::Error;
};

struct SyzygyWitness {
  std::vector<int> generator_degrees;  // ascending, with multiplicity
  Degree stop_degree;                  // gd(F⁰) + gd(F¹) + 1, at least gd(F¹)
  bool certified = false;              // stop_degree ≤ truncation
  bool within_stop = false;            // every generator degree ≤ stop_degree
  bool respans = false;
  bool minimal = false;
  std::vector<std::size_t> kernel_dims;
  DegreeReport quotient;               // of F⁰ / im φ, with s_max = 1
};

/// Generators of ker φ, checked by re-spanning and by dropping each in turn.
SyzygyWitness syzygy_witness(const FreeMap& phi);

struct Stabilization {
  std::optional<int> degree;  // empty when the check still fails at N − 1
  bool torsion_free = false;
  std::vector<int> failures;  // n with ι_n⁻¹(V_{n+1}) ≠ V_n
};

/// Smallest n₀ with ι_n⁻¹(V_{n+1}) = V_n for n₀ ≤ n < N, V ⊆ W.
Stabilization intersection_stabilization(const Module& w, const Submodule& v);

}  // namespace fig
