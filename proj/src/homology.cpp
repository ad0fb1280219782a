#include "fig/homology.hpp"

#include <unordered_map>

#include "detail/field_ops.hpp"

namespace fig {

Degree GradedDims::top() const {
  for (int n = static_cast<int>(dims.size()) - 1; n >= 0; --n)
    if (dims[n] != 0)
      return n;
  return Degree::neg_inf();
}

H0Result h0(const Module& v) {
  H0Result out;
  out.m_v = m_multiply(v, full_submodule(v), 1);
  out.dims.reliable_up_to = v.truncation();
  for (int n = 0; n <= v.truncation(); ++n) {
    const auto keep = out.m_v.parts[n].complement();
    out.dims.dims.push_back(keep.size());
    for (std::size_t j : keep) {
      Element e{n, Matrix(v.field(), v.dim(n), 1)};
      e.coords.set(j, 0, 1L);
      out.lifts.push_back(std::move(e));
    }
  }
  return out;
}

Degree generating_degree(const Module& v) {
  // Top degree where 𝔪V_n ≠ V_n, scanning down and stopping at the first hit.
  for (int n = v.truncation(); n >= 0; --n) {
    if (v.dim(n) == 0)
      continue;
    if (n == 0)
      return 0;
    SubspaceBasis below = image_basis(v.iota(n - 1));
    if (!saturate_subspace(below, v.actions(n)).is_full())
      return n;
  }
  return Degree::neg_inf();
}

// ---------------------------------------------------------------------------
// Koszul complex

namespace {

std::vector<std::uint32_t> subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n)
    return out;
  // Lexicographic order of the sorted element lists.
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i)
    c[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int x : c)
      mask |= 1u << x;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++c[i];
    for (int j = i + 1; j < k; ++j)
      c[j] = c[j - 1] + 1;
  }
  return out;
}

class Koszul {
 public:
  explicit Koszul(const Module& v) : v_(v) {}

  /// rank of d_s: C_s(V)_n → C_{s-1}(V)_n.
  std::size_t rank_of(int s, int n) {
    if (s <= 0 || s > n)
      return 0;
    const int a = n - s;
    if (v_.dim(a) == 0 || v_.dim(a + 1) == 0)
      return 0;
    return rank(differential(s, n));
  }

  std::size_t chain_dim(int s, int n) const {
    if (s < 0 || s > n)
      return 0;
    std::size_t c = 1;
    for (int i = 0; i < s; ++i)
      c = c * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    return c * v_.dim(n - s);
  }

  Matrix differential(int s, int n) {
    const int a = n - s;
    const std::size_t da = v_.dim(a), db = v_.dim(a + 1);
    const auto cols = subsets(n, s);
    const auto rows = subsets(n, s - 1);
    std::unordered_map<std::uint32_t, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
      row_index[rows[i]] = i;
    const auto& blocks = inclusions(a);
    Matrix out(v_.field(), rows.size() * db, cols.size() * da);
    detail::with_ops(v_.field(), [&](const auto& ops) {
      using Ops = std::decay_t<decltype(ops)>;
      auto& data = Ops::data(out);
      const std::size_t width = out.cols();
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::uint32_t t = cols[c];
        int j = 0;
        for (int x = 0; x < n; ++x) {
          if (!(t & (1u << x)))
            continue;
          const std::size_t r = row_index.at(t & ~(1u << x));
          const auto& block = Ops::data(blocks[static_cast<std::size_t>(x - j)]);
          const bool negate = j % 2 == 1;
          for (std::size_t i = 0; i < db; ++i)
            for (std::size_t k = 0; k < da; ++k) {
              const auto& e = block[i * da + k];
              data[(r * db + i) * width + c * da + k] = negate ? ops.neg(e) : e;
            }
          ++j;
        }
      }
    });
    return out;
  }

 private:
  /// E_p = (unit of the increasing map [a] → [a+1] missing p) · ι_a, p = 0..a.
  const std::vector<Matrix>& inclusions(int a) {
    auto it = cache_.find(a);
    if (it != cache_.end())
      return it->second;
    std::vector<Matrix> e(static_cast<std::size_t>(a) + 1);
    e[a] = v_.iota(a);
    const auto& acts = v_.actions(a + 1);
    for (int p = a - 1; p >= 0; --p)
      e[p] = acts[transposition_slot(p)] * e[p + 1];
    return cache_.emplace(a, std::move(e)).first->second;
  }

  const Module& v_;
  std::unordered_map<int, std::vector<Matrix>> cache_;
};

}  // namespace

std::vector<GradedDims> tor_koszul(const Module& v, int s_max, const std::vector<int>& windows) {
  const int N = v.truncation();
  auto window = [&](int s) {
    if (s < 0)
      return -1;
    if (static_cast<std::size_t>(s) < windows.size())
      return std::min(windows[s], N);
    return N;
  };
  Koszul k(v);
  std::unordered_map<long, std::size_t> ranks;
  auto rank_of = [&](int s, int n) {
    long key = static_cast<long>(s) * 1000 + n;
    auto it = ranks.find(key);
    if (it != ranks.end())
      return it->second;
    std::size_t r = k.rank_of(s, n);
    ranks.emplace(key, r);
    return r;
  };
  std::vector<GradedDims> out;
  for (int s = 0; s <= s_max; ++s) {
    GradedDims g;
    g.reliable_up_to = window(s);
    for (int n = 0; n <= g.reliable_up_to; ++n) {
      std::size_t c = k.chain_dim(s, n);
      if (c == 0) {
        g.dims.push_back(0);
        continue;
      }
      g.dims.push_back(c - rank_of(s, n) - rank_of(s + 1, n));
    }
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cover resolution

std::vector<Element> minimal_generators(const Module& v) {
  auto h = h0(v);
  // Greedy pass: keep a lift unless the G_n-span of earlier keeps already has it.
  std::vector<Element> kept;
  std::vector<SubspaceBasis> spanned = h.m_v.parts;
  for (auto& l : h.lifts) {
    auto& span = spanned[l.degree];
    if (span.contains(l.coords))
      continue;
    span = saturate_subspace(sum_subspaces(span, SubspaceBasis::span_columns(l.coords)),
                             v.actions(l.degree));
    kept.push_back(std::move(l));
  }
  // A later keep can make an earlier one redundant; one backward-looking pass
  // suffices since dropping only shrinks the spans of the rest.
  std::vector<Element> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const int n = kept[i].degree;
    SubspaceBasis others = h.m_v.parts[n];
    for (const auto& o : out)
      if (o.degree == n)
        others = sum_subspaces(others, SubspaceBasis::span_columns(o.coords));
    for (std::size_t j = i + 1; j < kept.size(); ++j)
      if (kept[j].degree == n)
        others = sum_subspaces(others, SubspaceBasis::span_columns(kept[j].coords));
    if (!saturate_subspace(others, v.actions(n)).contains(kept[i].coords))
      out.push_back(std::move(kept[i]));
  }
  return out;
}

std::vector<GradedDims> tor_resolution(const Module& v, int s_max, int extra) {
  const int N = v.truncation();
  const FiniteGroup& g = v.group();
  // specs[s] describes P_s; kernels[s] holds K_s = ker(P_{s-1} → K_{s-1}) inside P_{s-1}.
  std::vector<FreeModuleSpec> specs;
  std::vector<ModuleMorphism> kernels(1);
  Module x = v;
  for (int s = 0; s <= s_max; ++s) {
    auto lifts = minimal_generators(x);
    const std::size_t minimal = lifts.size();
    for (int e = 0; e < extra && minimal > 0; ++e) {
      const Element& l = lifts[static_cast<std::size_t>(e) % minimal];
      if (l.degree < N)
        lifts.push_back({l.degree + 1, x.iota(l.degree) * l.coords});
      else
        lifts.push_back({l.degree, Matrix(x.field(), x.dim(l.degree), 1)});
    }
    FreeModuleSpec spec;
    for (const auto& l : lifts)
      spec.degrees.push_back(l.degree);
    Module p = free_module(spec, N, v.field(), g);
    ModuleMorphism cover = free_map(spec, p, x, lifts);
    specs.push_back(spec);
    auto k = kernel_of(p, x, cover);
    x = std::move(k.module);
    kernels.push_back(std::move(k.map));
  }

  // Basis positions of P_s in degree n outside 𝔪P_s.
  auto top_positions = [&](int s, int n) {
    std::vector<std::size_t> out;
    const auto& spec = specs[s];
    for (std::size_t i = 0; i < spec.degrees.size(); ++i)
      if (spec.degrees[i] == n) {
        std::size_t off = free_offset(spec, i, n, g);
        for (std::size_t k = 0; k < hom_count(n, n, g); ++k)
          out.push_back(off + k);
      }
    return out;
  };
  // P_{s} → P_{s-1} sends generators of degree < n into 𝔪P_{s-1} in degree n,
  // so the reduced differential has the image of (K_s)_n in P_{s-1}/𝔪.
  auto reduced_rank = [&](int s, int n) -> std::size_t {
    if (s < 1)
      return 0;
    auto rows = top_positions(s - 1, n);
    const Matrix& basis = kernels[s].maps[n];
    if (rows.empty() || basis.cols() == 0)
      return 0;
    return rank(basis.select_rows(rows));
  };
  std::vector<GradedDims> out;
  for (int s = 0; s <= s_max; ++s) {
    GradedDims gd;
    gd.reliable_up_to = N;
    for (int n = 0; n <= N; ++n)
      gd.dims.push_back(top_positions(s, n).size() - reduced_rank(s, n) - reduced_rank(s + 1, n));
    out.push_back(std::move(gd));
  }
  return out;
}

Degree regularity(const std::vector<Degree>& hd) {
  Degree out = Degree::neg_inf();
  for (std::size_t s = 1; s < hd.size(); ++s)
    out = max(out, hd[s] - static_cast<int>(s));
  return out;
}

}  // namespace fig
