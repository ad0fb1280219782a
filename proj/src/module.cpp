#include "fig/module.hpp"

#include <numeric>

#include "detail/field_ops.hpp"

namespace fig {

namespace {

std::string at_degree(const std::string& what, int n) {
  return what + " at degree " + std::to_string(n);
}

void require_same_context(const Module& a, const Module& b, const char* what) {
  if (!(a.field() == b.field()) || !(a.group() == b.group()) ||
      a.truncation() != b.truncation())
    throw ContextMismatch(std::string(what) + ": modules differ in field, group or truncation");
}

}  // namespace

// ---------------------------------------------------------------------------
// Module

Module::Module(Field field, FiniteGroup group, int truncation, std::vector<std::size_t> dims,
               std::vector<Matrix> iota, std::vector<std::vector<Matrix>> actions)
    : field_(std::move(field)),
      group_(std::move(group)),
      truncation_(truncation),
      dims_(std::move(dims)),
      iota_(std::move(iota)),
      actions_(std::move(actions)) {
  if (truncation_ < 0)
    throw InvalidModule("truncation must be non-negative");
  const auto count = static_cast<std::size_t>(truncation_) + 1;
  if (dims_.size() != count || iota_.size() != count - 1 || actions_.size() != count)
    throw InvalidModule("module data does not match truncation " + std::to_string(truncation_));
  for (int n = 0; n <= truncation_; ++n) {
    const auto& acts = actions_[n];
    if (acts.size() != group_generator_count(n, group_))
      throw InvalidModule(at_degree("wrong number of action matrices", n));
    for (const auto& a : acts)
      if (a.rows() != dims_[n] || a.cols() != dims_[n] || !(a.field() == field_))
        throw InvalidModule(at_degree("action matrix has wrong shape", n));
    if (n < truncation_) {
      const auto& i = iota_[n];
      if (i.rows() != dims_[n + 1] || i.cols() != dims_[n] || !(i.field() == field_))
        throw InvalidModule(at_degree("iota has wrong shape", n));
    }
  }
}

Module Module::zero(const Field& field, const FiniteGroup& group, int truncation) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(truncation) + 1, 0);
  std::vector<Matrix> iota;
  std::vector<std::vector<Matrix>> actions;
  for (int n = 0; n <= truncation; ++n) {
    if (n < truncation)
      iota.emplace_back(field, 0, 0);
    actions.emplace_back(group_generator_count(n, group), Matrix(field, 0, 0));
  }
  return Module(field, group, truncation, std::move(dims), std::move(iota), std::move(actions));
}

std::size_t Module::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Module::iota_chain(int from, int to) const {
  if (to > truncation_)
    throw TruncationExceeded("degree " + std::to_string(to) + " beyond truncation " +
                             std::to_string(truncation_));
  Matrix out = Matrix::identity(field_, dim(from));
  for (int n = from; n < to; ++n)
    out = iota(n) * out;
  return out;
}

Matrix Module::apply_unit(const FiMorphism& unit, const Matrix& vectors) const {
  if (unit.target > truncation_)
    throw TruncationExceeded("unit in degree " + std::to_string(unit.target) +
                             " beyond truncation " + std::to_string(truncation_));
  const auto word = unit_word(unit, group_);
  Matrix out = vectors;
  const auto& acts = actions(unit.target);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = acts[*it] * out;
  return out;
}

Matrix Module::apply(const FiMorphism& f, const Matrix& vectors) const {
  if (f.target > truncation_)
    throw TruncationExceeded("morphism " + f.to_string() + " leaves truncation " +
                             std::to_string(truncation_));
  auto [unit, k] = factorize(f, group_);
  (void)k;
  return apply_unit(unit, iota_chain(f.source, f.target) * vectors);
}

Matrix Module::morphism_matrix(const FiMorphism& f) const {
  return apply(f, Matrix::identity(field_, dim(f.source)));
}

Module Module::truncated(int n) const {
  if (n > truncation_)
    throw TruncationExceeded("cannot extend truncation " + std::to_string(truncation_) + " to " +
                             std::to_string(n));
  const auto count = static_cast<std::size_t>(n) + 1;
  return Module(field_, group_, n, std::vector<std::size_t>(dims_.begin(), dims_.begin() + count),
                std::vector<Matrix>(iota_.begin(), iota_.begin() + (count - 1)),
                std::vector<std::vector<Matrix>>(actions_.begin(), actions_.begin() + count));
}

void Module::overwrite_action(int n, std::size_t slot, Matrix m) {
  actions_.at(static_cast<std::size_t>(n)).at(slot) = std::move(m);
}

void Module::overwrite_iota(int n, Matrix m) { iota_.at(static_cast<std::size_t>(n)) = std::move(m); }

Element apply_morphism(const Module& v, const Element& x, const FiMorphism& f) {
  if (x.degree != f.source)
    throw CompositionMismatch("element in degree " + std::to_string(x.degree) +
                              " cannot be moved by " + f.to_string());
  return {f.target, v.apply(f, x.coords)};
}

// ---------------------------------------------------------------------------
// Morphisms

std::vector<std::string> morphism_violations(const Module& source, const Module& target,
                                             const ModuleMorphism& phi) {
  std::vector<std::string> out;
  if (phi.truncation() != source.truncation() || source.truncation() != target.truncation()) {
    out.push_back("truncation mismatch");
    return out;
  }
  for (int n = 0; n <= source.truncation(); ++n) {
    const Matrix& m = phi.maps[n];
    if (m.rows() != target.dim(n) || m.cols() != source.dim(n)) {
      out.push_back(at_degree("map has wrong shape", n));
      continue;
    }
    if (n < source.truncation() && phi.maps[n + 1].rows() == target.dim(n + 1) &&
        phi.maps[n + 1].cols() == source.dim(n + 1) &&
        !(phi.maps[n + 1] * source.iota(n) == target.iota(n) * m))
      out.push_back(at_degree("does not commute with iota", n));
    for (std::size_t g = 0; g < source.actions(n).size(); ++g)
      if (!(m * source.actions(n)[g] == target.actions(n)[g] * m))
        out.push_back(at_degree("does not commute with generator " + std::to_string(g), n));
  }
  return out;
}

bool is_module_morphism(const Module& source, const Module& target, const ModuleMorphism& phi) {
  return morphism_violations(source, target, phi).empty();
}

ModuleMorphism identity_morphism(const Module& v) {
  ModuleMorphism out;
  for (int n = 0; n <= v.truncation(); ++n)
    out.maps.push_back(Matrix::identity(v.field(), v.dim(n)));
  return out;
}

ModuleMorphism zero_morphism(const Module& source, const Module& target) {
  require_same_context(source, target, "zero_morphism");
  ModuleMorphism out;
  for (int n = 0; n <= source.truncation(); ++n)
    out.maps.emplace_back(source.field(), target.dim(n), source.dim(n));
  return out;
}

ModuleMorphism compose(const ModuleMorphism& second, const ModuleMorphism& first) {
  if (second.maps.size() != first.maps.size())
    throw ContextMismatch("compose: truncation mismatch");
  ModuleMorphism out;
  for (std::size_t n = 0; n < first.maps.size(); ++n)
    out.maps.push_back(second.maps[n] * first.maps[n]);
  return out;
}

// ---------------------------------------------------------------------------
// Functor validity

std::vector<std::string> functor_violations(const Module& v, std::size_t max_dim) {
  std::vector<std::string> out;
  const FiniteGroup& g = v.group();
  const int N = v.truncation();
  const std::size_t gens = g.generators().size();
  for (int n = 0; n <= N; ++n) {
    const std::size_t d = v.dim(n);
    if (d == 0 || d > max_dim)
      continue;
    const auto& a = v.actions(n);
    const Matrix id = Matrix::identity(v.field(), d);
    auto fail = [&](const std::string& what) { out.push_back(at_degree(what, n)); };

    for (int i = 0; i + 1 < n; ++i) {
      const Matrix& s = a[transposition_slot(i)];
      if (!(s * s == id))
        fail("s_" + std::to_string(i + 1) + " is not an involution");
      if (i + 2 < n) {
        const Matrix& t = a[transposition_slot(i + 1)];
        Matrix st = s * t;
        if (!(st * st * st == id))
          fail("braid relation fails for s_" + std::to_string(i + 1));
      }
      for (int j = i + 2; j + 1 < n; ++j) {
        const Matrix& t = a[transposition_slot(j)];
        if (!(s * t == t * s))
          fail("s_" + std::to_string(i + 1) + " and s_" + std::to_string(j + 1) +
               " do not commute");
      }
    }

    if (n >= 1 && gens > 0) {
      // W(x) = action of x on the first point, through the chosen words.
      std::vector<Matrix> word_action;
      for (int x = 0; x < g.order(); ++x) {
        Matrix w = id;
        for (int letter : g.word(x))
          w = w * a[decoration_slot(n, letter)];
        word_action.push_back(std::move(w));
      }
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          if (!(word_action[x] * word_action[y] == word_action[g.mul(x, y)]))
            fail("group relation fails for elements " + std::to_string(x) + "," +
                 std::to_string(y));
      for (std::size_t h = 0; h < gens; ++h) {
        const Matrix& dh = a[decoration_slot(n, static_cast<int>(h))];
        for (int i = 1; i + 1 < n; ++i) {
          const Matrix& s = a[transposition_slot(i)];
          if (!(dh * s == s * dh))
            fail("decoration does not commute with s_" + std::to_string(i + 1));
        }
        if (n >= 2) {
          const Matrix& s0 = a[transposition_slot(0)];
          for (std::size_t h2 = 0; h2 < gens; ++h2) {
            Matrix moved = s0 * a[decoration_slot(n, static_cast<int>(h2))] * s0;
            if (!(dh * moved == moved * dh))
              fail("decorations on distinct points do not commute");
          }
        }
      }
    }

    if (n < N && v.dim(n + 1) <= max_dim) {
      const Matrix& i = v.iota(n);
      const auto& up = v.actions(n + 1);
      for (int t = 0; t + 1 < n; ++t)
        if (!(i * a[transposition_slot(t)] == up[transposition_slot(t)] * i))
          fail("iota does not intertwine s_" + std::to_string(t + 1));
      if (n >= 1)
        for (std::size_t h = 0; h < gens; ++h)
          if (!(i * a[decoration_slot(n, static_cast<int>(h))] ==
                up[decoration_slot(n + 1, static_cast<int>(h))] * i))
            fail("iota does not intertwine the decoration generators");
      for (int h : g.generators()) {
        FiMorphism last = FiMorphism::identity(n + 1, g);
        last.decoration[n] = h;
        if (!(v.apply_unit(last, i) == i))
          fail("decoration on the new point moves the image of iota");
      }
      if (n + 1 < N && v.dim(n + 2) <= max_dim) {
        Matrix ii = v.iota(n + 1) * i;
        if (!(v.actions(n + 2)[transposition_slot(n)] * ii == ii))
          fail("swapping the two new points moves the image of iota^2");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free modules

int FreeModuleSpec::max_degree() const {
  int out = -1;
  for (int m : degrees)
    out = std::max(out, m);
  return out;
}

std::size_t free_offset(const FreeModuleSpec& spec, std::size_t generator, int n,
                        const FiniteGroup& group) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < generator; ++i)
    off += hom_count(spec.degrees[i], n, group);
  return off;
}

Module free_module(const FreeModuleSpec& spec, int truncation, const Field& field,
                   const FiniteGroup& group) {
  for (int m : spec.degrees)
    if (m < 0)
      throw InvalidModule("negative generator degree");
  std::vector<std::size_t> dims;
  for (int n = 0; n <= truncation; ++n)
    dims.push_back(free_offset(spec, spec.degrees.size(), n, group));
  std::vector<Matrix> iota;
  std::vector<std::vector<Matrix>> actions;
  for (int n = 0; n <= truncation; ++n) {
    const auto gens = group_generators(n, group);
    std::vector<Matrix> acts(gens.size(), Matrix(field, dims[n], dims[n]));
    Matrix up(field, n < truncation ? dims[n + 1] : 0, dims[n]);
    const FiMorphism inc = FiMorphism::standard_inclusion(n, 1, group);
    for (std::size_t i = 0; i < spec.degrees.size(); ++i) {
      const int m = spec.degrees[i];
      const std::size_t off = free_offset(spec, i, n, group);
      const std::size_t off_up = free_offset(spec, i, n + 1, group);
      const std::size_t count = hom_count(m, n, group);
      for (std::size_t idx = 0; idx < count; ++idx) {
        const FiMorphism f = hom_at(m, n, idx, group);
        for (std::size_t k = 0; k < gens.size(); ++k)
          acts[k].set(off + hom_index(compose(gens[k], f, group), group), off + idx, 1L);
        if (n < truncation)
          up.set(off_up + hom_index(compose(inc, f, group), group), off + idx, 1L);
      }
    }
    actions.push_back(std::move(acts));
    if (n < truncation)
      iota.push_back(std::move(up));
  }
  return Module(field, group, truncation, std::move(dims), std::move(iota), std::move(actions));
}

Element free_generator(const FreeModuleSpec& spec, std::size_t generator, const Field& field,
                       const FiniteGroup& group) {
  const int m = spec.degrees.at(generator);
  Element e{m, Matrix(field, free_offset(spec, spec.degrees.size(), m, group), 1)};
  e.coords.set(free_offset(spec, generator, m, group) +
                   hom_index(FiMorphism::identity(m, group), group),
               0, 1L);
  return e;
}

Module direct_sum(const Module& a, const Module& b) {
  require_same_context(a, b, "direct_sum");
  std::vector<std::size_t> dims;
  std::vector<Matrix> iota;
  std::vector<std::vector<Matrix>> actions;
  for (int n = 0; n <= a.truncation(); ++n) {
    dims.push_back(a.dim(n) + b.dim(n));
    if (n < a.truncation())
      iota.push_back(Matrix::block_diag(a.iota(n), b.iota(n)));
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < a.actions(n).size(); ++k)
      acts.push_back(Matrix::block_diag(a.actions(n)[k], b.actions(n)[k]));
    actions.push_back(std::move(acts));
  }
  return Module(a.field(), a.group(), a.truncation(), std::move(dims), std::move(iota),
                std::move(actions));
}

ModuleMorphism direct_sum(const ModuleMorphism& a, const ModuleMorphism& b) {
  if (a.maps.size() != b.maps.size())
    throw ContextMismatch("direct_sum: truncation mismatch");
  ModuleMorphism out;
  for (std::size_t n = 0; n < a.maps.size(); ++n)
    out.maps.push_back(Matrix::block_diag(a.maps[n], b.maps[n]));
  return out;
}

// ---------------------------------------------------------------------------
// Submodules

std::vector<std::size_t> Submodule::dims() const {
  std::vector<std::size_t> out;
  for (const auto& p : parts)
    out.push_back(p.dim());
  return out;
}

Submodule zero_submodule(const Module& v) {
  Submodule w;
  for (int n = 0; n <= v.truncation(); ++n)
    w.parts.emplace_back(v.field(), v.dim(n));
  return w;
}

Submodule full_submodule(const Module& v) {
  Submodule w;
  for (int n = 0; n <= v.truncation(); ++n)
    w.parts.push_back(SubspaceBasis::full(v.field(), v.dim(n)));
  return w;
}

namespace {

std::string stability_failure(const Module& v, const Submodule& w) {
  if (w.parts.size() != static_cast<std::size_t>(v.truncation()) + 1)
    return "submodule has the wrong number of degrees";
  for (int n = 0; n <= v.truncation(); ++n) {
    const auto& part = w.parts[n];
    if (part.ambient_dim() != v.dim(n))
      return at_degree("subspace lives in the wrong ambient space", n);
    if (part.is_zero())
      continue;
    Matrix cols = part.columns();
    if (n < v.truncation() && !w.parts[n + 1].contains(v.iota(n) * cols))
      return at_degree("not stable under iota", n);
    for (std::size_t k = 0; k < v.actions(n).size(); ++k)
      if (!part.contains(v.actions(n)[k] * cols))
        return at_degree("not stable under generator " + std::to_string(k), n);
  }
  return {};
}

}  // namespace

bool is_submodule(const Module& v, const Submodule& w) { return stability_failure(v, w).empty(); }

Submodule sum(const Submodule& a, const Submodule& b) {
  if (a.parts.size() != b.parts.size())
    throw ContextMismatch("sum: truncation mismatch");
  Submodule out;
  for (std::size_t n = 0; n < a.parts.size(); ++n)
    out.parts.push_back(sum_subspaces(a.parts[n], b.parts[n]));
  return out;
}

Submodule submodule_span(const Module& v, const std::vector<Element>& generators) {
  Submodule w;
  for (int n = 0; n <= v.truncation(); ++n) {
    SubspaceBasis seed = n == 0 ? SubspaceBasis(v.field(), v.dim(0))
                                : image_of(v.iota(n - 1), w.parts[n - 1]);
    std::vector<std::size_t> fresh;
    Matrix extra(v.field(), v.dim(n), 0);
    for (const auto& x : generators) {
      if (x.degree > v.truncation() || x.degree < 0)
        throw TruncationExceeded("generator in degree " + std::to_string(x.degree) +
                                 " beyond truncation");
      if (x.coords.rows() != v.dim(x.degree) || x.coords.cols() != 1)
        throw ContextMismatch("generator coordinates have the wrong length");
      if (x.degree == n)
        extra = Matrix::hstack(extra, x.coords);
    }
    if (extra.cols() > 0)
      seed = sum_subspaces(seed, SubspaceBasis::span_columns(extra));
    w.parts.push_back(saturate_subspace(seed, v.actions(n)));
  }
  return w;
}

Submodule m_multiply(const Module& v, const Submodule& w, int power) {
  Submodule cur = w;
  for (int step = 0; step < power; ++step) {
    Submodule next;
    next.parts.emplace_back(v.field(), v.dim(0));
    for (int n = 1; n <= v.truncation(); ++n)
      next.parts.push_back(
          saturate_subspace(image_of(v.iota(n - 1), cur.parts[n - 1]), v.actions(n)));
    cur = std::move(next);
  }
  return cur;
}

Realized realize(const Module& v, const Submodule& w, Validate check) {
  if (auto why = check == Validate::yes ? stability_failure(v, w) : ""; !why.empty())
    throw InvalidSubmodule("realize: " + why);
  std::vector<std::size_t> dims;
  std::vector<Matrix> iota;
  std::vector<std::vector<Matrix>> actions;
  ModuleMorphism inclusion;
  for (int n = 0; n <= v.truncation(); ++n) {
    const auto& part = w.parts[n];
    Matrix cols = part.columns();
    dims.push_back(part.dim());
    if (n < v.truncation())
      iota.push_back(w.parts[n + 1].coordinates(v.iota(n) * cols));
    std::vector<Matrix> acts;
    for (const auto& a : v.actions(n))
      acts.push_back(part.coordinates(a * cols));
    actions.push_back(std::move(acts));
    inclusion.maps.push_back(std::move(cols));
  }
  return {Module(v.field(), v.group(), v.truncation(), std::move(dims), std::move(iota),
                 std::move(actions)),
          std::move(inclusion)};
}

Realized quotient(const Module& v, const Submodule& w, Validate check) {
  if (auto why = check == Validate::yes ? stability_failure(v, w) : ""; !why.empty())
    throw InvalidSubmodule("quotient: " + why);
  std::vector<std::size_t> dims;
  std::vector<Matrix> iota;
  std::vector<std::vector<Matrix>> actions;
  ModuleMorphism projection;
  std::vector<Matrix> q;
  for (int n = 0; n <= v.truncation(); ++n)
    q.push_back(w.parts[n].quotient_projection());
  for (int n = 0; n <= v.truncation(); ++n) {
    const auto keep = w.parts[n].complement();
    dims.push_back(keep.size());
    if (n < v.truncation())
      iota.push_back(q[n + 1] * v.iota(n).select_cols(keep));
    std::vector<Matrix> acts;
    for (const auto& a : v.actions(n))
      acts.push_back(q[n] * a.select_cols(keep));
    actions.push_back(std::move(acts));
    projection.maps.push_back(q[n]);
  }
  return {Module(v.field(), v.group(), v.truncation(), std::move(dims), std::move(iota),
                 std::move(actions)),
          std::move(projection)};
}

Submodule kernel_submodule(const Module& source, const ModuleMorphism& phi) {
  Submodule w;
  for (int n = 0; n <= source.truncation(); ++n)
    w.parts.push_back(kernel_basis(phi.maps.at(n)));
  return w;
}

Submodule image_submodule(const Module& target, const ModuleMorphism& phi) {
  Submodule w;
  for (int n = 0; n <= target.truncation(); ++n)
    w.parts.push_back(image_basis(phi.maps.at(n)));
  return w;
}

Realized kernel_of(const Module& source, const Module& target, const ModuleMorphism& phi) {
  require_same_context(source, target, "kernel_of");
  return realize(source, kernel_submodule(source, phi), Validate::no);
}

Realized cokernel_of(const Module& source, const Module& target, const ModuleMorphism& phi) {
  require_same_context(source, target, "cokernel_of");
  return quotient(target, image_submodule(target, phi), Validate::no);
}

// ---------------------------------------------------------------------------
// Maps out of free modules

namespace {

/// Columns f·x for every f in Hom(m, n), n = 0..N. Degree n is seeded with
/// ι∘f' for f' ∈ Hom(m, n-1) (or the identity at n = m) and completed by
/// breadth-first search over the G_n generators.
std::vector<Matrix> yoneda_blocks(const Module& v, const Element& x) {
  const int m = x.degree;
  const FiniteGroup& g = v.group();
  std::vector<Matrix> out;
  return detail::with_ops(v.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    using T = typename Ops::T;
    std::vector<std::vector<T>> prev;
    for (int n = 0; n <= v.truncation(); ++n) {
      const std::size_t count = hom_count(m, n, g);
      const std::size_t d = v.dim(n);
      Matrix block(v.field(), d, count);
      if (count == 0) {
        out.push_back(std::move(block));
        continue;
      }
      std::vector<std::vector<T>> cols(count);
      std::vector<bool> known(count, false);
      std::vector<std::size_t> queue;
      if (n == m) {
        const auto& src = Ops::data(x.coords);
        std::size_t id = hom_index(FiMorphism::identity(m, g), g);
        cols[id].assign(src.begin(), src.end());
        known[id] = true;
        queue.push_back(id);
      } else {
        detail::Csr<Ops> up(ops, v.iota(n - 1));
        const FiMorphism inc = FiMorphism::standard_inclusion(n - 1, 1, g);
        const std::size_t below = hom_count(m, n - 1, g);
        for (std::size_t j = 0; j < below; ++j) {
          std::size_t idx = hom_index(compose(inc, hom_at(m, n - 1, j, g), g), g);
          cols[idx].assign(d, ops.zero());
          up.apply(ops, prev[j].data(), cols[idx].data());
          known[idx] = true;
          queue.push_back(idx);
        }
      }
      const auto gens = group_generators(n, g);
      std::vector<detail::Csr<Ops>> acts;
      for (const auto& a : v.actions(n))
        acts.emplace_back(ops, a);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t idx = queue[head];
        const FiMorphism f = hom_at(m, n, idx, g);
        for (std::size_t k = 0; k < gens.size(); ++k) {
          std::size_t to = hom_index(compose(gens[k], f, g), g);
          if (known[to])
            continue;
          cols[to].assign(d, ops.zero());
          acts[k].apply(ops, cols[idx].data(), cols[to].data());
          known[to] = true;
          queue.push_back(to);
        }
      }
      auto& data = Ops::data(block);
      for (std::size_t j = 0; j < count; ++j)
        for (std::size_t r = 0; r < d; ++r)
          data[r * count + j] = cols[j][r];
      prev = std::move(cols);
      out.push_back(std::move(block));
    }
    return out;
  });
}

}  // namespace

ModuleMorphism yoneda_morphism(const Module& free, const Module& v, const Element& x) {
  require_same_context(free, v, "yoneda_morphism");
  if (x.degree < 0 || x.degree > v.truncation())
    throw TruncationExceeded("element degree beyond truncation");
  if (x.coords.rows() != v.dim(x.degree) || x.coords.cols() != 1)
    throw ContextMismatch("element coordinates have the wrong length");
  for (int n = 0; n <= free.truncation(); ++n)
    if (free.dim(n) != hom_count(x.degree, n, v.group()))
      throw ContextMismatch("yoneda_morphism: source is not M(" + std::to_string(x.degree) + ")");
  return {yoneda_blocks(v, x)};
}

ModuleMorphism free_map(const FreeModuleSpec& spec, const Module& free, const Module& v,
                        const std::vector<Element>& images) {
  require_same_context(free, v, "free_map");
  if (images.size() != spec.degrees.size())
    throw ContextMismatch("free_map: one image per generator is required");
  ModuleMorphism out;
  for (int n = 0; n <= v.truncation(); ++n)
    out.maps.emplace_back(v.field(), v.dim(n), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree != spec.degrees[i])
      throw ContextMismatch("free_map: image " + std::to_string(i) + " has the wrong degree");
    if (images[i].coords.rows() != v.dim(images[i].degree))
      throw ContextMismatch("free_map: image coordinates have the wrong length");
    auto blocks = yoneda_blocks(v, images[i]);
    for (int n = 0; n <= v.truncation(); ++n)
      out.maps[n] = Matrix::hstack(out.maps[n], blocks[n]);
  }
  for (int n = 0; n <= v.truncation(); ++n)
    if (out.maps[n].cols() != free.dim(n))
      throw ContextMismatch("free_map: source does not match the free spec");
  return out;
}

}  // namespace fig
