#include "doctest.h"

#include "sylab/igusa_todorov.hpp"

using namespace sylab;

namespace {

Representation simples(const AlgebraPtr &a, std::vector<std::size_t> vs) {
  std::vector<Representation> ms;
  for (auto v : vs)
    ms.push_back(Representation::simple(a, v));
  return direct_sum(ms, a).module;
}

std::size_t kv_rank(const std::vector<KVector> &gens, std::size_t size) {
  ZMatrix m(size, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto &[id, x] : gens[j])
      m(id, j) = x;
  return rank(m);
}

} // namespace

TEST_CASE("classes in K") {
  auto a2 = linear_path_algebra(2, 2);
  KGroup k(a2);
  CHECK(k.class_of(direct_sum({projective(a2, 0), projective(a2, 1)}).module)
            .empty());
  auto s1 = Representation::simple(a2, 0);
  auto c = k.class_of(direct_sum({s1, s1}).module);
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->second == 2);
  auto c2 = k.class_of(direct_sum({s1, projective(a2, 0)}).module);
  CHECK(c2 == KVector{{c.begin()->first, 1}});

  CHECK(k.bracket_subgroup(direct_sum({s1, s1}).module).size() == 1);
  CHECK(k.bracket_subgroup(projective(a2, 0)).empty());
  for (std::size_t n = 2; n <= 5; ++n) {
    auto ex = paper_example_algebra(n, 2);
    KGroup kx(ex);
    auto gens = kx.bracket_subgroup(simples(ex, {0, n - 1}));
    CHECK(gens.size() == 2);
    CHECK(kv_rank(gens, kx.registry().size()) == 2);
  }
}

TEST_CASE("syzygy closure and omega matrix") {
  auto ex = paper_example_algebra(3, 2);
  KGroup k(ex);
  auto sn = *k.registry().intern(Representation::simple(ex, 2));
  auto g = k.syzygy_closure({sn}, 10);
  CHECK(g.closed);
  CHECK(g.nodes == std::vector<std::size_t>{sn});
  CHECK(omega_matrix(g) == ZMatrix::from_rows({{1}}));

  auto s1 = *k.registry().intern(Representation::simple(ex, 0));
  auto s2 = *k.registry().intern(Representation::simple(ex, 1));
  auto full = k.syzygy_closure({s1, s2, sn}, 10);
  CHECK(full.closed);
  auto t = omega_matrix(full);
  // Columns S1 -> S2, S2 -> S3, S3 -> S3.
  ZMatrix expect(3, 3);
  expect(full.index_of(s2), full.index_of(s1)) = 1;
  expect(full.index_of(sn), full.index_of(s2)) = 1;
  expect(full.index_of(sn), full.index_of(sn)) = 1;
  CHECK(t == expect);

  auto loop = truncated_polynomial_algebra(2, 2);
  KGroup kl(loop);
  auto s = *kl.registry().intern(Representation::simple(loop, 0));
  CHECK(omega_matrix(kl.syzygy_closure({s}, 5)) == ZMatrix::from_rows({{1}}));

  auto a2 = linear_path_algebra(2, 2);
  KGroup ka(a2);
  auto a = *ka.registry().intern(Representation::simple(a2, 0));
  CHECK(omega_matrix(ka.syzygy_closure({a}, 5)) == ZMatrix::from_rows({{0}}));
  auto empty = ka.syzygy_closure({}, 5);
  CHECK(empty.closed);
  CHECK(empty.nodes.empty());

  auto unclosed = k.syzygy_closure({s1}, 1);
  CHECK_FALSE(unclosed.closed);
  CHECK_THROWS_AS(omega_matrix(unclosed), Error);
}

TEST_CASE("phi examples") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto ex = paper_example_algebra(n, 2);
    KGroup k(ex);
    auto r = phi(k, simples(ex, {0, n - 1}));
    CHECK(r.exact);
    CHECK(r.value == n - 1);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(phi(k, projective(ex, i)).value == 0);
  }
  auto loop = truncated_polynomial_algebra(2, 2);
  KGroup kl(loop);
  CHECK(phi(kl, Representation::simple(loop, 0)).value == 0);

  auto a2 = linear_path_algebra(2, 2);
  KGroup ka(a2);
  auto r = phi(ka, Representation::simple(a2, 0));
  CHECK(r.value == 1);
  CHECK(r.rank_sequence.front() == 1);
  CHECK(r.rank_sequence.back() == 0);
}

TEST_CASE("phi with a cap reports a lower bound") {
  auto ex = paper_example_algebra(6, 2);
  KGroup k(ex);
  auto r = phi(k, simples(ex, {0, 5}), 2);
  CHECK_FALSE(r.exact);
  CHECK(r.cap_hit);
  CHECK(r.value <= 5);
}

TEST_CASE("pd examples") {
  auto a2 = linear_path_algebra(2, 2);
  KGroup ka(a2);
  CHECK(pd(ka, projective(a2, 0)) == PdResult::finite(0));
  CHECK(pd(ka, Representation::simple(a2, 0)) == PdResult::finite(1));
  auto a3 = linear_path_algebra(3, 2);
  KGroup k3(a3);
  CHECK(pd(k3, Representation::simple(a3, 0)) == PdResult::finite(1));
  for (std::size_t n = 2; n <= 4; ++n) {
    auto ex = paper_example_algebra(n, 2);
    KGroup k(ex);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(pd(k, Representation::simple(ex, i)).is_infinite());
  }
  CHECK(PdResult::infinite().to_string() == "inf");
  CHECK(PdResult::finite(3).to_string() == "3");
  CHECK(PdResult::at_least(2).to_string() == ">=2");
}

TEST_CASE("psi examples") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto ex = paper_example_algebra(n, 2);
    KGroup k(ex);
    auto r = psi(k, simples(ex, {0, n - 1}));
    CHECK(r.value == n - 1);
    CHECK(r.exact);
  }
  auto a2 = linear_path_algebra(2, 2);
  KGroup ka(a2);
  CHECK(psi(ka, Representation::simple(a2, 0)).value == 1);
  auto loop = truncated_polynomial_algebra(2, 2);
  KGroup kl(loop);
  CHECK(psi(kl, Representation::simple(loop, 0)).value == 0);
}

TEST_CASE("sampled dimensions") {
  SampleOptions opt;
  opt.samples = 20;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto ex = paper_example_algebra(n, 2);
    KGroup k(ex);
    CHECK(phidim_sample(k, opt).value == n - 1);
    CHECK(findim_sample(k, opt).value == 0);
  }
  auto loop = truncated_polynomial_algebra(2, 2);
  KGroup kl(loop);
  CHECK(phidim_sample(kl, opt).value == 0);
  CHECK(findim_sample(kl, opt).value == 0);
  auto nak = nakayama_cyclic_algebra(3, 3, 2);
  KGroup kn(nak);
  CHECK(phidim_sample(kn, opt).value == 0);
  auto a2 = linear_path_algebra(2, 2);
  KGroup ka(a2);
  CHECK(findim_sample(ka, opt).value == 1);
}

TEST_CASE("self-injectivity") {
  auto loop = truncated_polynomial_algebra(2, 2);
  auto v = self_injective(loop);
  CHECK(v.self_injective);
  CHECK(v.nakayama_permutation == std::vector<std::size_t>{0});

  for (std::size_t n = 2; n <= 5; ++n) {
    auto d = self_injective(paper_example_algebra(n, 2));
    CHECK_FALSE(d.self_injective);
    // P(n-1) also embeds in the three-dimensional I(n) without filling it.
    CHECK(d.non_injective_vertices == std::vector<std::size_t>{n - 2, n - 1});
    for (std::size_t i = 0; i + 2 < n; ++i)
      CHECK(d.diagnostics[i].injective_match == i + 1);
    for (const auto &diag : d.diagnostics)
      CHECK(diag.simple_socle);
  }
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 4}, {4, 3}})
    CHECK(self_injective(nakayama_cyclic_algebra(n, m, 3)).self_injective);
  CHECK_FALSE(self_injective(linear_path_algebra(2, 2)).self_injective);
}

TEST_CASE("witness search") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto ex = paper_example_algebra(n, 2);
    KGroup k(ex);
    auto w = witness_search(k);
    REQUIRE(w);
    CHECK(w->phi.exact);
    CHECK(w->phi.value >= 1);
    CHECK_FALSE(w->module.validate());
    KGroup fresh(ex);
    CHECK(phi(fresh, w->module).value == w->phi.value);
  }
  auto loop = truncated_polynomial_algebra(2, 2);
  KGroup kl(loop);
  CHECK_FALSE(witness_search(kl));
  auto a2 = linear_path_algebra(2, 2);
  KGroup ka(a2);
  auto w = witness_search(ka);
  REQUIRE(w);
  CHECK(w->phi.value >= 1);
  auto nak = nakayama_cyclic_algebra(3, 3, 2);
  KGroup kn(nak);
  CHECK_FALSE(witness_search(kn));
}

TEST_CASE("property: lemma identities on samples") {
  std::vector<AlgebraPtr> algebras = {
      paper_example_algebra(3, 2), nakayama_cyclic_algebra(2, 3, 2),
      linear_path_algebra(3, 3), truncated_polynomial_algebra(3, 2)};
  Rng rng(77);
  for (const auto &a : algebras) {
    KGroup k(a);
    for (int t = 0; t < 10; ++t) {
      auto m = random_presentation_module(a, 7, rng);
      auto n = random_presentation_module(a, 5, rng);
      auto pm = phi(k, m);
      REQUIRE(pm.exact);
      for (std::size_t i = 1; i < pm.rank_sequence.size(); ++i)
        CHECK(pm.rank_sequence[i] <= pm.rank_sequence[i - 1]);
      auto sm = psi(k, m);
      CHECK(sm.value >= pm.value);
      auto d = pd(k, m);
      if (d.is_finite()) {
        CHECK(pm.value == d.value);
        CHECK(sm.value == d.value);
      }
      CHECK(phi(k, direct_sum({n, m}, a).module).value >= pm.value);
      CHECK(psi(k, direct_sum({n, m}, a).module).value >= sm.value);
      CHECK(phi(k, power(m, 2)).value == pm.value);
      CHECK(psi(k, power(m, 3)).value == sm.value);
      auto om = syzygy(m);
      CHECK(pm.value <= phi(k, om).value + 1);
      CHECK(sm.value <= psi(k, om).value + 1);
    }
  }
}
