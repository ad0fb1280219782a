#include "doctest.h"

#include "fig/module.hpp"
#include "support.hpp"

using namespace fig;

namespace {

const Field gf2 = Field::prime(2);
const Field gf5 = Field::prime(5);
const FiniteGroup triv = FiniteGroup::trivial();
const FiniteGroup c2 = FiniteGroup::cyclic(2);

Module m0(int n, const Field& f = gf5) { return free_module({{0}}, n, f, triv); }

std::vector<std::size_t> dims_of(const Module& v) { return v.dims(); }

/// The degree-k image of M(0)'s generator.
Element generator_image(const Module& v, int k) {
  Element e{k, Matrix(v.field(), 1, 1)};
  e.coords.set(0, 0, 1L);
  return e;
}

}  // namespace

TEST_CASE("free module examples") {
  auto v = free_module({{2}}, 5, gf5, triv);
  CHECK(v.dim(4) == 12);
  auto z = m0(4);
  for (int n = 0; n <= 4; ++n)
    CHECK(z.dim(n) == 1);
  for (int n = 0; n < 4; ++n)
    CHECK(z.iota(n) == Matrix::identity(gf5, 1));
  auto w = free_module({{1}}, 4, gf2, c2);
  for (int n = 0; n <= 4; ++n)
    CHECK(w.dim(n) == static_cast<std::size_t>(2 * n));
  CHECK(functor_violations(v).empty());
  CHECK(functor_violations(w).empty());
  CHECK(functor_violations(free_module({{0, 1, 2}}, 4, gf2, FiniteGroup::cyclic(3))).empty());
}

TEST_CASE("apply_morphism examples") {
  auto v = free_module({{1}}, 3, gf5, triv);
  auto gen = free_generator({{1}}, 0, gf5, triv);
  auto id = FiMorphism::identity(1, triv);
  CHECK(apply_morphism(v, gen, id).coords == gen.coords);
  auto a = apply_morphism(v, gen, hom_at(1, 2, 0, triv));
  auto b = apply_morphism(v, gen, hom_at(1, 2, 1, triv));
  CHECK(a.coords == Matrix::from_ints(gf5, 2, 1, {1, 0}));
  CHECK(b.coords == Matrix::from_ints(gf5, 2, 1, {0, 1}));
  auto z = m0(3);
  auto e = generator_image(z, 0);
  CHECK(apply_morphism(z, e, FiMorphism::standard_inclusion(0, 2, triv)).coords == e.coords);
  CHECK_THROWS_AS(apply_morphism(z, e, FiMorphism::standard_inclusion(0, 4, triv)),
                  TruncationExceeded);
}

TEST_CASE("apply_morphism is functorial") {
  for (const auto& g : {triv, c2}) {
    FreeModuleSpec spec{{0, 1, 2}};
    auto v = free_module(spec, 4, gf5, g);
    // A quotient with nontrivial ι so that the check is not just permutations.
    Rng rng(7);
    Element rel{2, fig::testing::random_matrix(rng, gf5, v.dim(2), 1)};
    auto quo = quotient(v, submodule_span(v, {rel})).module;
    CHECK(functor_violations(quo).empty());
    for (int a = 0; a <= 4; ++a)
      for (int b = a; b <= 4; ++b)
        for (int c = b; c <= 4; ++c) {
          if (quo.dim(a) == 0)
            continue;
          auto fs = enumerate_hom(a, b, g);
          auto gs = enumerate_hom(b, c, g);
          for (std::size_t i = 0; i < fs.size(); i += 1 + fs.size() / 6)
            for (std::size_t j = 0; j < gs.size(); j += 1 + gs.size() / 6)
              CHECK(quo.morphism_matrix(compose(gs[j], fs[i], g)) ==
                    quo.morphism_matrix(gs[j]) * quo.morphism_matrix(fs[i]));
        }
  }
}

TEST_CASE("yoneda examples") {
  auto v = free_module({{2}}, 4, gf5, triv);
  auto id = yoneda_morphism(v, v, free_generator({{2}}, 0, gf5, triv));
  for (int n = 0; n <= 4; ++n)
    CHECK(id.maps[n] == Matrix::identity(gf5, v.dim(n)));
  auto zero = yoneda_morphism(v, v, Element{2, Matrix(gf5, 2, 1)});
  for (int n = 0; n <= 4; ++n)
    CHECK(zero.maps[n].is_zero());
  auto m1 = free_module({{1}}, 4, gf5, triv);
  auto z = m0(4);
  auto phi = yoneda_morphism(m1, z, generator_image(z, 1));
  CHECK(is_module_morphism(m1, z, phi));
  for (int n = 1; n <= 4; ++n)
    for (std::size_t c = 0; c < m1.dim(n); ++c)
      CHECK(phi.maps[n].at(0, c) == 1);
}

TEST_CASE("direct sum examples") {
  auto m1 = free_module({{1}}, 4, gf5, triv);
  auto z = m0(4);
  auto s = direct_sum(m1, z);
  for (int n = 0; n <= 4; ++n)
    CHECK(s.dim(n) == static_cast<std::size_t>(n + 1));
  CHECK(dims_of(direct_sum(m1, Module::zero(gf5, triv, 4))) == m1.dims());
  CHECK_THROWS_AS(direct_sum(m1, m0(3)), ContextMismatch);
}

TEST_CASE("submodule span, quotient and m-multiplication examples") {
  auto z = m0(6);
  auto all = submodule_span(z, {generator_image(z, 0)});
  CHECK(all == full_submodule(z));
  CHECK(submodule_span(z, {}) == zero_submodule(z));
  auto m2 = submodule_span(z, {generator_image(z, 2)});
  CHECK(m2.dims() == std::vector<std::size_t>{0, 0, 1, 1, 1, 1, 1});

  auto m3 = m_multiply(z, full_submodule(z), 3);
  CHECK(m3.dims() == std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 1});
  CHECK(m_multiply(z, full_submodule(z), 1).dims() ==
        std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1});
  CHECK(m_multiply(z, zero_submodule(z), 1) == zero_submodule(z));

  auto q = quotient(z, m3);
  CHECK(q.module.dims() == std::vector<std::size_t>{1, 1, 1, 0, 0, 0, 0});
  CHECK(quotient(z, zero_submodule(z)).module.dims() == z.dims());
  CHECK(quotient(z, full_submodule(z)).module.is_zero());

  // saturation example: ι-image of M(1)_1 spans all of M(1)_2 under s_1
  auto m1 = free_module({{1}}, 3, gf5, triv);
  CHECK(m_multiply(m1, full_submodule(m1), 1).dims() == std::vector<std::size_t>{0, 0, 2, 3});

  Submodule bad = zero_submodule(z);
  bad.parts[1] = SubspaceBasis::full(gf5, 1);
  CHECK_THROWS_AS(quotient(z, bad), InvalidSubmodule);
}

TEST_CASE("kernel and cokernel examples") {
  auto m1 = free_module({{1}}, 5, gf5, triv);
  auto z = m0(5);
  auto phi = yoneda_morphism(m1, z, generator_image(z, 1));
  auto k = kernel_of(m1, z, phi);
  for (int n = 1; n <= 5; ++n)
    CHECK(k.module.dim(n) == static_cast<std::size_t>(n - 1));
  CHECK(is_module_morphism(k.module, m1, k.map));
  auto c = cokernel_of(m1, z, phi);
  CHECK(c.module.dims() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
  CHECK(kernel_of(z, z, identity_morphism(z)).module.is_zero());
  CHECK(kernel_of(z, m1, zero_morphism(z, m1)).module.dims() == z.dims());
  CHECK(cokernel_of(z, z, identity_morphism(z)).module.is_zero());
  CHECK(cokernel_of(m1, z, zero_morphism(m1, z)).module.dims() == z.dims());
}

TEST_CASE("module properties on random quotients") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const FiniteGroup& g = trial % 3 ? triv : c2;
    const Field f = trial % 2 ? gf2 : gf5;
    FreeModuleSpec spec{{rng.between(0, 2), rng.between(0, 2)}};
    auto v = free_module(spec, 4, f, g);
    std::vector<Element> gens;
    for (int r = 0; r < 2; ++r) {
      int d = rng.between(spec.max_degree(), 4);
      gens.push_back({d, fig::testing::random_matrix(rng, f, v.dim(d), 1)});
    }
    auto w = submodule_span(v, gens);
    CHECK(is_submodule(v, w));
    CHECK(submodule_span(v, gens) == w);
    auto smaller = submodule_span(v, {gens[0]});
    for (int n = 0; n <= 4; ++n)
      CHECK(w.parts[n].contains(smaller.parts[n]));
    auto r = realize(v, w);
    auto q = quotient(v, w);
    CHECK(functor_violations(r.module).empty());
    CHECK(functor_violations(q.module).empty());
    CHECK(is_module_morphism(r.module, v, r.map));
    CHECK(is_module_morphism(v, q.module, q.map));
    for (int n = 0; n <= 4; ++n) {
      CHECK(v.dim(n) == r.module.dim(n) + q.module.dim(n));
      CHECK((q.map.maps[n] * r.map.maps[n]).is_zero());
    }
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 4; ++j)
        CHECK(m_multiply(v, m_multiply(v, w, j), i) == m_multiply(v, w, i + j));
  }
}

TEST_CASE("functor check catches corrupted data") {
  auto v = free_module({{1}}, 3, gf5, triv);
  auto bad = v;
  Matrix a = bad.actions(2)[0];
  a.set(0, 0, 1L);
  bad.overwrite_action(2, 0, a);
  CHECK_FALSE(functor_violations(bad).empty());
  auto bad2 = v;
  Matrix i = bad2.iota(1);
  i.set(1, 0, 1L);
  bad2.overwrite_iota(1, i);
  CHECK_FALSE(functor_violations(bad2).empty());
}
