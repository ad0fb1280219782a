#include "fig/functors.hpp"

namespace fig {

Module shift(const Module& v, int a) {
  const int N = v.truncation();
  if (a < 0 || a > N)
    throw TruncationExceeded("shift by " + std::to_string(a) + " beyond truncation " +
                             std::to_string(N));
  const FiniteGroup& g = v.group();
  const std::size_t gens = g.generators().size();
  std::vector<std::size_t> dims;
  std::vector<Matrix> iota;
  std::vector<std::vector<Matrix>> actions;
  for (int n = 0; n <= N - a; ++n) {
    dims.push_back(v.dim(n + a));
    std::vector<Matrix> acts;
    if (n >= 1) {
      const auto& big = v.actions(n + a);
      for (int i = 0; i + 1 < n; ++i)
        acts.push_back(big[transposition_slot(i)]);
      for (std::size_t h = 0; h < gens; ++h)
        acts.push_back(big[decoration_slot(n + a, static_cast<int>(h))]);
    }
    actions.push_back(std::move(acts));
    if (n < N - a) {
      Matrix up = v.iota(n + a);
      const auto& top = v.actions(n + a + 1);
      for (int i = n + a - 1; i >= n; --i)
        up = top[transposition_slot(i)] * up;
      iota.push_back(std::move(up));
    }
  }
  return Module(v.field(), g, N - a, std::move(dims), std::move(iota), std::move(actions));
}

ModuleMorphism natural_map_to_shift(const Module& v) {
  if (v.truncation() < 1)
    throw TruncationExceeded("natural_map_to_shift needs truncation at least 1");
  ModuleMorphism out;
  for (int n = 0; n < v.truncation(); ++n)
    out.maps.push_back(v.iota(n));
  return out;
}

Module derivative(const Module& v) {
  Module sv = shift(v, 1);
  return cokernel_of(v.truncated(v.truncation() - 1), sv, natural_map_to_shift(v)).module;
}

Degree torsion_degree(const Module& v) {
  for (int n = v.truncation() - 1; n >= 0; --n)
    if (rank(v.iota(n)) < v.dim(n))
      return n;
  return Degree::neg_inf();
}

TorsionDecomposition torsion_part(const Module& v, std::optional<Degree> td_bound) {
  const int N = v.truncation();
  Submodule t;
  t.parts.resize(static_cast<std::size_t>(N) + 1);
  t.parts[N] = SubspaceBasis(v.field(), v.dim(N));
  for (int n = N - 1; n >= 0; --n)
    t.parts[n] = preimage(v.iota(n), t.parts[n + 1]);
  TorsionDecomposition out{t, realize(v, t, Validate::no), quotient(v, t, Validate::no), torsion_degree(v), false};
  out.certified = td_bound.has_value() && *td_bound < Degree(N);
  return out;
}

}  // namespace fig
