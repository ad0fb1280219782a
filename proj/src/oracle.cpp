#include "fig/oracle.hpp"

#include "fig/functors.hpp"
#include "fig/homology.hpp"

namespace fig {

const Matrix& DenseFunctor::at(const FiMorphism& f) const {
  return action.at({f.source, f.target}).at(hom_index(f, group));
}

DenseFunctor densify(const Module& v, int cap) {
  const int N = v.truncation();
  if (N > cap)
    throw DensifyRefused("truncation " + std::to_string(N) + " exceeds the dense cap " +
                         std::to_string(cap));
  DenseFunctor d{v.field(), v.group(), N, v.dims(), {}};
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      auto& mats = d.action[{m, n}];
      for (const auto& f : enumerate_hom(m, n, v.group()))
        mats.push_back(v.morphism_matrix(f));
    }
  return d;
}

std::vector<std::string> functoriality_violations(const DenseFunctor& d) {
  constexpr std::size_t kReported = 20;
  std::vector<std::string> out;
  std::size_t count = 0;
  auto report = [&](std::string what) {
    if (count++ < kReported)
      out.push_back(std::move(what));
  };
  const int N = d.truncation;
  for (int m = 0; m <= N; ++m)
    for (int n = m; n <= N; ++n)
      for (const auto& f : enumerate_hom(m, n, d.group)) {
        const Matrix& a = d.at(f);
        if (a.rows() != d.dims[n] || a.cols() != d.dims[m])
          report("shape of " + f.to_string());
      }
  if (count > 0)
    return out;
  for (int n = 0; n <= N; ++n)
    if (!(d.at(FiMorphism::identity(n, d.group)) == Matrix::identity(d.field, d.dims[n])))
      report("identity of [" + std::to_string(n) + "]");
  for (int l = 0; l <= N; ++l)
    for (int m = l; m <= N; ++m) {
      const auto first = enumerate_hom(l, m, d.group);
      for (int n = m; n <= N; ++n)
        for (const auto& g : enumerate_hom(m, n, d.group)) {
          const Matrix& ag = d.at(g);
          for (const auto& f : first)
            if (!(d.at(compose(g, f, d.group)) == ag * d.at(f)))
              report(g.to_string() + " after " + f.to_string());
        }
    }
  if (count > kReported)
    out.push_back(std::to_string(count - kReported) + " more");
  return out;
}

DenseInvariants dense_invariants(const DenseFunctor& d) {
  const int N = d.truncation;
  DenseInvariants out;
  for (int n = 0; n <= N; ++n) {
    Matrix images(d.field, d.dims[n], 0);
    for (int m = 0; m < n; ++m)
      for (const auto& a : d.action.at({m, n}))
        images = Matrix::hstack(images, a);
    out.m_v.push_back(SubspaceBasis::span_columns(images));
    out.h0.push_back(d.dims[n] - out.m_v.back().dim());
    if (out.h0.back() > 0)
      out.gd = n;

    Matrix kernels(d.field, 0, d.dims[n]);
    for (int t = n; t <= N; ++t)
      for (const auto& a : d.action.at({n, t}))
        kernels = Matrix::vstack(kernels, kernel_basis(a).basis());
    out.torsion.push_back(SubspaceBasis::span_rows(kernels));
    if (!out.torsion.back().is_zero())
      out.td = n;
  }
  return out;
}

OracleReport compare(const Module& v, int cap) {
  OracleReport r;
  DenseFunctor d = densify(v, cap);
  r.functoriality = functoriality_violations(d);
  const DenseInvariants dense = dense_invariants(d);

  const H0Result h = h0(v);
  const Submodule torsion = torsion_part(v).torsion;
  auto subspace = [](const SubspaceBasis& s) {
    return "dim " + std::to_string(s.dim());
  };
  for (int n = 0; n <= v.truncation(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (h.dims.dims[i] != dense.h0[i])
      r.mismatches.push_back({"h0", n, std::to_string(h.dims.dims[i]), std::to_string(dense.h0[i])});
    if (!(h.m_v.parts[i] == dense.m_v[i]))
      r.mismatches.push_back({"m_v", n, subspace(h.m_v.parts[i]), subspace(dense.m_v[i])});
    if (!(torsion.parts[i] == dense.torsion[i]))
      r.mismatches.push_back({"torsion", n, subspace(torsion.parts[i]), subspace(dense.torsion[i])});
  }
  const Degree gd = generating_degree(v), td = torsion_degree(v);
  if (gd != dense.gd)
    r.mismatches.push_back({"gd", -1, gd.to_string(), dense.gd.to_string()});
  if (td != dense.td)
    r.mismatches.push_back({"td", -1, td.to_string(), dense.td.to_string()});
  return r;
}

}  // namespace fig
