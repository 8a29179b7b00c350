#include "doctest.h"

#include "sylab/module.hpp"

using namespace sylab;

namespace {

std::vector<AlgebraPtr> fixture_algebras() {
  return {paper_example_algebra(3, 2), paper_example_algebra(4, 3),
          nakayama_cyclic_algebra(2, 3, 2), nakayama_cyclic_algebra(3, 2, 3),
          truncated_polynomial_algebra(3, 2), linear_path_algebra(3, 5)};
}

// Oracle for dimension vectors of projectives: count basis paths by source
// and target directly.
std::vector<std::size_t> paths_from_by_target(const FDAlgebra &a,
                                              std::size_t v) {
  std::vector<std::size_t> d(a.quiver().vertex_count(), 0);
  for (const auto &p : a.basis())
    if (p.source == v)
      ++d[p.target];
  return d;
}

std::vector<std::size_t> paths_into_by_source(const FDAlgebra &a,
                                              std::size_t v) {
  std::vector<std::size_t> d(a.quiver().vertex_count(), 0);
  for (const auto &p : a.basis())
    if (p.target == v)
      ++d[p.source];
  return d;
}

} // namespace

TEST_CASE("validate") {
  auto a2 = linear_path_algebra(2, 2);
  CHECK_FALSE(Representation::simple(a2, 0).validate());
  CHECK_FALSE(projective(a2, 0).validate());

  auto loop = truncated_polynomial_algebra(2, 2);
  Representation bad(loop, {1}, {FMatrix::identity(loop->field(), 1)});
  CHECK(bad.validate().has_value());
  CHECK_THROWS_AS(Representation(loop, {2}, {FMatrix(loop->field(), 1, 2)}),
                  Error);
}

TEST_CASE("projectives and injectives") {
  auto a2 = linear_path_algebra(2, 2);
  CHECK(projective(a2, 0).dims() == std::vector<std::size_t>{1, 1});
  CHECK(projective(a2, 1).dims() == std::vector<std::size_t>{0, 1});
  CHECK(injective(a2, 0).dims() == std::vector<std::size_t>{1, 0});
  CHECK(injective(a2, 1).dims() == std::vector<std::size_t>{1, 1});

  for (std::size_t n : {2u, 3u, 5u}) {
    auto ex = paper_example_algebra(n, 2);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(projective(ex, i).total_dim() == 2);
    auto in = injective(ex, n - 1);
    CHECK(in.total_dim() == 3);
    CHECK(top_dims(in)[n - 2] == 1);
    CHECK(top_dims(in)[n - 1] == 1);
    CHECK(socle_dims(in)[n - 1] == 1);
    CHECK(socle_dims(in) == socle_dims(Representation::simple(ex, n - 1)));
  }

  auto loop = truncated_polynomial_algebra(2, 2);
  auto p = projective(loop, 0);
  CHECK(p.dims() == std::vector<std::size_t>{2});
  CHECK(p.map(0) * p.map(0) == FMatrix(loop->field(), 2, 2));
  CHECK_FALSE(p.map(0).is_zero());
  CHECK(injective(loop, 0).dims() == std::vector<std::size_t>{2});

  for (const auto &a : fixture_algebras())
    for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) {
      auto pv = projective(a, v), iv = injective(a, v);
      CHECK_FALSE(pv.validate());
      CHECK_FALSE(iv.validate());
      CHECK(pv.dims() == paths_from_by_target(*a, v));
      CHECK(iv.dims() == paths_into_by_source(*a, v));
      CHECK(is_projective(pv));
      auto t = top_dims(pv);
      std::vector<std::size_t> expect(a->quiver().vertex_count(), 0);
      expect[v] = 1;
      CHECK(t == expect);
    }
}

TEST_CASE("duality") {
  auto a2 = linear_path_algebra(2, 2);
  auto op = opposite_algebra(*a2);
  auto ds = dual(Representation::simple(a2, 0), op);
  CHECK(ds == Representation::simple(op, 0));

  auto p1 = projective(a2, 0);
  auto dd = dual(dual(p1, op), a2);
  CHECK(dd.dims() == p1.dims());
  CHECK(dd.map(0) == p1.map(0));

  auto dp = dual(projective(a2, 1), op);
  auto iop = injective(op, 1);
  CHECK(dp.dims() == iop.dims());
}

TEST_CASE("hom examples") {
  auto a2 = linear_path_algebra(2, 2);
  CHECK(hom_basis(Representation::simple(a2, 0), Representation::simple(a2, 1))
            .empty());
  CHECK(hom_basis(projective(a2, 0), projective(a2, 0)).size() == 1);
  CHECK(hom_basis(projective(a2, 1), projective(a2, 0)).size() == 1);
  CHECK(hom_basis(projective(a2, 0), projective(a2, 1)).empty());
}

TEST_CASE("direct sums") {
  auto a2 = linear_path_algebra(2, 2);
  CHECK(direct_sum({}, a2).module.is_zero());
  auto s = direct_sum({Representation::simple(a2, 0),
                       Representation::simple(a2, 1)})
               .module;
  CHECK(s.dims() == std::vector<std::size_t>{1, 1});
  CHECK(s.map(0).is_zero());
  auto ex = paper_example_algebra(3, 2);
  auto d = direct_sum({projective(ex, 0), injective(ex, 2)});
  CHECK(d.module.dims() == std::vector<std::size_t>{1, 2, 2});
  for (const auto &inj : d.injections)
    CHECK(inj.intertwines());
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(d.projections[i].after(d.injections[i]).is_isomorphism());
  CHECK(d.projections[0].after(d.injections[1]).is_zero());
}

TEST_CASE("kernels and cokernels") {
  auto a2 = linear_path_algebra(2, 2);
  auto p1 = projective(a2, 0);
  CHECK(kernel(Morphism::identity(p1)).module.is_zero());
  CHECK(cokernel(Morphism::identity(p1)).module.is_zero());
  auto z = Morphism::zero(p1, Representation::zero(a2));
  CHECK(kernel(z).module == p1);
  CHECK(cokernel(Morphism::zero(Representation::zero(a2), p1)).module.dims() ==
        p1.dims());

  auto to_top = top(p1);
  CHECK(to_top.module.dims() == std::vector<std::size_t>{1, 0});
  CHECK(kernel(to_top.projection).module.dims() ==
        std::vector<std::size_t>{0, 1});
  auto soc = socle(p1);
  CHECK(soc.module.dims() == std::vector<std::size_t>{0, 1});
  CHECK(cokernel(soc.inclusion).module.dims() ==
        std::vector<std::size_t>{1, 0});
}

TEST_CASE("radical, top, socle") {
  for (const auto &a : fixture_algebras())
    for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v) {
      auto s = Representation::simple(a, v);
      CHECK(radical(s).module.is_zero());
      CHECK(socle(s).module == s);
    }
  auto ex = paper_example_algebra(4, 2);
  auto pn = projective(ex, 3);
  CHECK(radical(pn).module.dims() == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(socle(pn).module.dims() == std::vector<std::size_t>{0, 0, 0, 1});
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(socle_dims(projective(ex, i)) ==
          socle_dims(Representation::simple(ex, i == 3 ? 3 : i + 1)));
}

TEST_CASE("projective covers") {
  auto ex = paper_example_algebra(3, 2);
  for (std::size_t v = 0; v < 3; ++v) {
    auto c = projective_cover(Representation::simple(ex, v));
    CHECK(c.projective.dims() == projective(ex, v).dims());
    CHECK(c.summand_vertices == std::vector<std::size_t>{v});
    auto cp = projective_cover(projective(ex, v));
    CHECK(cp.cover.is_isomorphism());
  }
  auto s1 = Representation::simple(ex, 0);
  auto c2 = projective_cover(direct_sum({s1, s1}).module);
  CHECK(c2.summand_vertices == std::vector<std::size_t>{0, 0});
  CHECK(c2.cover.is_surjective());
  CHECK(projective_cover(Representation::zero(ex)).projective.is_zero());
}

TEST_CASE("syzygies") {
  for (std::size_t n : {2u, 3u, 6u}) {
    auto ex = paper_example_algebra(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      auto o = syzygy(Representation::simple(ex, i));
      CHECK(o == Representation::simple(ex, i + 1 < n ? i + 1 : n - 1));
      CHECK(syzygy(projective(ex, i)).is_zero());
    }
  }
  auto a2 = linear_path_algebra(2, 2);
  auto o = syzygy(Representation::simple(a2, 0));
  CHECK(o.dims() == std::vector<std::size_t>{0, 1});
  CHECK(is_projective(o));
  // Omega^k(S_1) = S_{1+k} until the loop vertex.
  auto ex = paper_example_algebra(5, 3);
  CHECK(syzygy(Representation::simple(ex, 0), 3) ==
        Representation::simple(ex, 3));
}

TEST_CASE("random presentation modules") {
  Rng rng(11);
  auto loop = truncated_polynomial_algebra(2, 2);
  CHECK(random_presentation_module(loop, 0, rng).is_zero());
  for (int t = 0; t < 40; ++t) {
    auto m = random_presentation_module(loop, 6, rng);
    CHECK_FALSE(m.validate());
    // Only S and P exist: M = S^a + P^b with rank(M_x) = b.
    const auto b = rank(m.map(0));
    CHECK(top_dims(m)[0] == m.dim(0) - b);
  }
}

TEST_CASE("random short exact sequences") {
  Rng rng(12);
  for (const auto &a : fixture_algebras())
    for (int t = 0; t < 10; ++t) {
      auto ses = random_ses(a, 8, rng);
      CHECK(ses.is_exact());
      CHECK(ses.mono.intertwines());
      CHECK(ses.epi.intertwines());
      CHECK_FALSE(ses.middle().validate());
      CHECK_FALSE(ses.right().validate());
    }
  auto a2 = linear_path_algebra(2, 2);
  auto p = projective(a2, 0);
  auto whole = ses_from_submodule(image(Morphism::identity(p)));
  CHECK(whole.right().is_zero());
  Subspaces none{FMatrix(a2->field(), 1, 0), FMatrix(a2->field(), 1, 0)};
  auto trivial = ses_from_submodule(submodule(p, none));
  CHECK(trivial.epi.is_isomorphism());
}

TEST_CASE("property: Hom from projectives, covers, duality, additivity") {
  Rng rng(21);
  for (const auto &a : fixture_algebras()) {
    auto op = opposite_algebra(*a);
    for (int t = 0; t < 12; ++t) {
      auto m = random_presentation_module(a, 8, rng);
      REQUIRE_FALSE(m.validate());
      for (std::size_t v = 0; v < a->quiver().vertex_count(); ++v)
        CHECK(hom_basis(projective(a, v), m).size() == m.dim(v));
      auto c = projective_cover(m);
      CHECK(c.cover.is_surjective());
      CHECK(c.cover.intertwines());
      CHECK(top_dims(c.projective) == top_dims(m));
      auto om = syzygy(m);
      CHECK(om.total_dim() + m.total_dim() == c.projective.total_dim());

      auto d = dual(m, op);
      CHECK(d.dims() == m.dims());
      CHECK_FALSE(d.validate());
      CHECK(dual(d, a) == m);
      CHECK(top_dims(d) == socle_dims(m));

      auto m2 = random_presentation_module(a, 6, rng);
      auto sum = direct_sum({m, m2}).module;
      CHECK(syzygy(sum).dims() ==
            direct_sum({om, syzygy(m2)}, a).module.dims());

      auto bc = random_base_change(m, rng);
      CHECK(bc.dims() == m.dims());
      CHECK_FALSE(bc.validate());
      CHECK(top_dims(bc) == top_dims(m));
    }
  }
}
