#pragma once

#include <vector>

#include "fig/degree.hpp"
#include "fig/module.hpp"

namespace fig {

/// Dimensions of a graded space in degrees 0..reliable_up_to.
struct GradedDims {
  std::vector<std::size_t> dims;
  int reliable_up_to = -1;

  /// Top degree with nonzero dimension, −∞ if none.
  Degree top() const;
  bool operator==(const GradedDims&) const = default;
};

struct H0Result {
  GradedDims dims;
  Submodule m_v;               // 𝔪V
  std::vector<Element> lifts;  // basis of a complement of 𝔪V, by degree
};

/// H₀(V)_n = V_n / 𝔪V_n.
H0Result h0(const Module& v);
Degree generating_degree(const Module& v);

/// H₀ lifts forming an irredundant generating set of V: in each degree n they
/// generate V_n / 𝔪V_n as a G_n-module and none can be dropped.
std::vector<Element> minimal_generators(const Module& v);

/// Tor_s(𝒞/𝔪, V) for s = 0..s_max from the Koszul complex
///   C_s(V)_n = ⊕_{T ⊆ [n], |T| = s} V_{[n]∖T},
///   d(v ⊗ t_0∧…∧t_{s-1}) = Σ_j (-1)^j ι_{t_j} v ⊗ (T∖t_j).
/// Degree n of Tor_s needs V only in degrees ≤ n; `windows[s]` (when given)
/// caps the degrees computed for Tor_s, otherwise the truncation is used.
std::vector<GradedDims> tor_koszul(const Module& v, int s_max, const std::vector<int>& windows = {});

/// The same groups from a free resolution built by iterated covers, one
/// M(n) per G_n-module generator of H₀ in degree n, as homology of P_•/𝔪P_•. `extra` adds that many redundant
/// generators to every cover.
std::vector<GradedDims> tor_resolution(const Module& v, int s_max, int extra = 0);

/// max_{1 ≤ s ≤ s_max} (hd_s − s); −∞ when every hd_s is −∞.
Degree regularity(const std::vector<Degree>& hd);

}  // namespace fig
