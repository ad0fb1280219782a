#pragma once

#include <optional>

#include "fig/degree.hpp"
#include "fig/module.hpp"

namespace fig {

/// Σ_a V: (Σ_a V)_n = V_{n+a}, truncation N - a. G_n acts on the first n
/// points of [n+a]; the a adjoined points are the last ones and stay fixed,
/// so ι of Σ_a V is ι_{n+a} followed by the cycle moving the new point to n.
Module shift(const Module& v, int a);

/// ι_n: V_n → V_{n+1} = (ΣV)_n, from V truncated at N-1 to ΣV.
ModuleMorphism natural_map_to_shift(const Module& v);

/// D V = coker(V → ΣV), truncation N - 1.
Module derivative(const Module& v);

struct TorsionDecomposition {
  Submodule torsion;           // V_T inside V
  Realized torsion_part;       // V_T with its inclusion
  Realized torsion_free_part;  // V_F = V / V_T with the projection
  Degree td;
  /// True when an a-priori bound on td lies below the truncation, so that
  /// no torsion is invisible at this truncation.
  bool certified = false;
};

/// (V_T)_n = ker(V_n → V_N), computed as ι_n⁻¹((V_T)_{n+1}) from the top.
TorsionDecomposition torsion_part(const Module& v, std::optional<Degree> td_bound = {});

/// Top degree n < N with ker ι_n ≠ 0.
Degree torsion_degree(const Module& v);

}  // namespace fig
