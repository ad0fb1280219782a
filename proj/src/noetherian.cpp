#include "fig/noetherian.hpp"

#include <algorithm>

#include "fig/functors.hpp"

namespace fig {

SyzygyWitness syzygy_witness(const FreeMap& phi) {
  const int N = phi.truncation;
  if (phi.images.size() != phi.source.degrees.size())
    throw UnsupportedInput("free map needs one image per source generator");
  Module f1 = free_module(phi.source, N, phi.field, phi.group);
  Module f0 = free_module(phi.target, N, phi.field, phi.group);
  std::vector<Element> images;
  for (std::size_t i = 0; i < phi.images.size(); ++i) {
    const int d = phi.source.degrees[i];
    if (d > N || phi.images[i].rows() != f0.dim(d) || phi.images[i].cols() != 1)
      throw UnsupportedInput("image " + std::to_string(i) + " is not an element of F0 in degree " +
                             std::to_string(d));
    images.push_back({d, phi.images[i]});
  }
  auto k = kernel_of(f1, f0, free_map(phi.source, f1, f0, images));
  const Module& kernel = k.module;

  SyzygyWitness w;
  w.kernel_dims = kernel.dims();
  auto gens = minimal_generators(kernel);
  for (const auto& g : gens)
    w.generator_degrees.push_back(g.degree);
  std::sort(w.generator_degrees.begin(), w.generator_degrees.end());

  Presentation coker{phi.field, phi.group, N, phi.target, images};
  PresentationBounds b = bounds_of(coker);
  Degree f1_degree;
  for (int d : phi.source.degrees)
    f1_degree = max(f1_degree, Degree(d));
  w.stop_degree = max(b.generators + f1_degree + 1, f1_degree);
  w.certified = w.stop_degree <= Degree(N);
  w.within_stop = std::all_of(w.generator_degrees.begin(), w.generator_degrees.end(),
                              [&](int d) { return Degree(d) <= w.stop_degree; });

  w.respans = submodule_span(kernel, gens).dims() == kernel.dims();
  // Dropping a generator of degree n can only change degrees ≥ n, and if it
  // changes anything it changes degree n.
  w.minimal = true;
  for (std::size_t i = 0; i < gens.size() && w.minimal; ++i) {
    const int n = gens[i].degree;
    Module low = kernel.truncated(n);
    std::vector<Element> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i && gens[j].degree <= n)
        rest.push_back(gens[j]);
    w.minimal = submodule_span(low, rest).parts[n].dim() < low.dim(n);
  }

  auto presented = from_presentation(coker);
  w.quotient = degree_report(presented.module, 1, b);
  return w;
}

Stabilization intersection_stabilization(const Module& w, const Submodule& v) {
  if (!is_submodule(w, v))
    throw InvalidSubmodule("intersection_stabilization: not a submodule");
  const int N = w.truncation();
  Stabilization out;
  out.torsion_free = torsion_degree(w).is_neg_inf();
  for (int n = 0; n < N; ++n)
    if (!(preimage(w.iota(n), v.parts[n + 1]) == v.parts[n]))
      out.failures.push_back(n);
  if (out.failures.empty())
    out.degree = 0;
  else if (out.failures.back() < N - 1)
    out.degree = out.failures.back() + 1;
  return out;
}

}  // namespace fig
