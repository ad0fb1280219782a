#include "doctest.h"

#include "fig/functors.hpp"
#include "fig/presentation.hpp"
#include "support.hpp"

using namespace fig;

namespace {

const Field gf2 = Field::prime(2);
const Field gf5 = Field::prime(5);
const FiniteGroup triv = FiniteGroup::trivial();
const FiniteGroup c2 = FiniteGroup::cyclic(2);

/// M(0)/𝔪^i M(0).
Module truncated_m0(int i, int N, const Field& f = gf5) {
  Presentation p{f, triv, N, {{0}}, {{i, Matrix::from_ints(f, 1, 1, {1})}}};
  return from_presentation(p).module;
}

Module random_quotient(Rng& rng, const Field& f, const FiniteGroup& g, int N) {
  FreeModuleSpec spec{{rng.between(0, 2), rng.between(0, 2)}};
  Presentation p{f, g, N, spec, {}};
  Module free = free_module(spec, N, f, g);
  for (int r = 0, count = rng.between(0, 2); r < count; ++r) {
    int d = rng.between(0, std::min(N, 3));
    p.relations.push_back({d, fig::testing::random_matrix(rng, f, free.dim(d), 1)});
  }
  return from_presentation(p).module;
}

}  // namespace

TEST_CASE("shift examples") {
  auto m0 = free_module({{0}}, 5, gf5, triv);
  auto s = shift(m0, 1);
  CHECK(s.truncation() == 4);
  for (int n = 0; n <= 4; ++n)
    CHECK(s.dim(n) == 1);
  for (int n = 0; n < 4; ++n)
    CHECK(s.iota(n) == Matrix::identity(gf5, 1));
  auto m1 = free_module({{1}}, 5, gf5, triv);
  auto s1 = shift(m1, 1);
  for (int n = 0; n <= 4; ++n)
    CHECK(s1.dim(n) == static_cast<std::size_t>(n + 1));
  CHECK(shift(truncated_m0(3, 6), 3).is_zero());
  CHECK_THROWS_AS(shift(m0, 6), TruncationExceeded);
}

TEST_CASE("shifted modules satisfy the functor conditions") {
  Rng rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const auto& g = trial % 2 ? c2 : triv;
    auto v = random_quotient(rng, trial % 3 ? gf2 : gf5, g, 5);
    for (int a = 0; a <= 3; ++a) {
      auto s = shift(v, a);
      CHECK(functor_violations(s).empty());
      if (a == 1)
        CHECK(is_module_morphism(v.truncated(4), s, natural_map_to_shift(v)));
    }
    CHECK(functor_violations(derivative(v)).empty());
  }
}

TEST_CASE("natural map examples") {
  auto m0 = free_module({{0}}, 5, gf5, triv);
  for (const auto& m : natural_map_to_shift(m0).maps)
    CHECK(rank(m) == 1);
  auto t = truncated_m0(3, 6);
  auto phi = natural_map_to_shift(t);
  for (int n = 2; n < 6; ++n)
    CHECK(phi.maps[n].is_zero());
  auto free = free_module({{0, 1, 2}}, 5, gf2, c2);
  auto psi = natural_map_to_shift(free);
  for (int n = 0; n < 5; ++n)
    CHECK(kernel_basis(psi.maps[n]).is_zero());
}

TEST_CASE("derivative examples") {
  CHECK(derivative(free_module({{0}}, 5, gf5, triv)).is_zero());
  auto d2 = derivative(free_module({{2}}, 6, gf5, triv));
  CHECK(d2.truncation() == 5);
  for (int n = 0; n <= 5; ++n)
    CHECK(d2.dim(n) == static_cast<std::size_t>(2 * n));
  CHECK(derivative(truncated_m0(3, 6)).is_zero());
}

TEST_CASE("D(M(m)) has the dimensions of M(m-1)^{m|G|}") {
  for (const auto& g : {triv, c2})
    for (int m = 1; m <= 3; ++m) {
      auto d = derivative(free_module({{m}}, 6, gf5, g));
      auto target = free_module({{m - 1}}, 5, gf5, g);
      for (int n = 0; n <= 5; ++n)
        CHECK(d.dim(n) == static_cast<std::size_t>(m * g.order()) * target.dim(n));
    }
}

TEST_CASE("derivative is right exact") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto v = random_quotient(rng, gf2, triv, 5);
    Element x{2, fig::testing::random_matrix(rng, gf2, v.dim(2), 1)};
    auto q = quotient(v, submodule_span(v, {x}));
    // ΣV → ΣV'' → DV'' is onto, hence so is the induced DV → DV''.
    auto sq = shift(q.module, 1);
    auto cq = cokernel_of(q.module.truncated(4), sq, natural_map_to_shift(q.module));
    for (int n = 0; n <= 4; ++n)
      CHECK(rank(cq.map.maps[n] * q.map.maps[n + 1]) == cq.module.dim(n));
  }
}

TEST_CASE("torsion part examples") {
  auto free = free_module({{1, 2}}, 5, gf5, triv);
  auto tf = torsion_part(free);
  CHECK(tf.torsion == zero_submodule(free));
  CHECK(tf.td.is_neg_inf());
  auto t = truncated_m0(3, 6);
  auto tt = torsion_part(t, Degree(2));
  CHECK(tt.torsion == full_submodule(t));
  CHECK(tt.td == Degree(2));
  CHECK(tt.certified);
  auto mix = direct_sum(free_module({{1}}, 6, gf5, triv), truncated_m0(2, 6));
  auto tm = torsion_part(mix);
  CHECK(tm.td == Degree(1));
  CHECK(tm.torsion_part.module.dims() == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0});
  CHECK(torsion_degree(tm.torsion_part.module) == tm.td);
  CHECK_FALSE(tm.certified);
}

TEST_CASE("torsion decomposition is exact") {
  Rng rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    auto v = random_quotient(rng, trial % 2 ? gf2 : gf5, trial % 3 ? triv : c2, 5);
    auto d = torsion_part(v);
    for (int n = 0; n <= 5; ++n)
      CHECK(v.dim(n) == d.torsion_part.module.dim(n) + d.torsion_free_part.module.dim(n));
    // V_F has no ι-kernel below the top degree.
    CHECK(torsion_degree(d.torsion_free_part.module).is_neg_inf());
    CHECK(torsion_degree(d.torsion_part.module) == torsion_degree(v));
  }
}
