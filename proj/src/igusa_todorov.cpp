#include "sylab/igusa_todorov.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace sylab {

std::size_t SyzygyGraph::index_of(std::size_t id) const {
  auto it = std::find(nodes.begin(), nodes.end(), id);
  if (it == nodes.end())
    throw Error("syzygy graph: class " + std::to_string(id) + " not a node");
  return static_cast<std::size_t>(it - nodes.begin());
}

std::string PdResult::to_string() const {
  switch (kind) {
  case Kind::Finite:
    return std::to_string(value);
  case Kind::Infinite:
    return "inf";
  case Kind::UnknownAtLeast:
    return ">=" + std::to_string(value);
  }
  return "?";
}

// ------------------------------------------------------------------ KGroup

KVector KGroup::class_of(const Representation &m) {
  KVector out;
  if (m.is_zero())
    return out;
  auto d = decompose(m, options_);
  if (d.certificate == Certificate::Probabilistic)
    probabilistic_ = true;
  for (const auto &s : d.summands) {
    if (s.projective)
      continue;
    if (auto id = registry_.intern(s.module))
      out[*id] += static_cast<std::int64_t>(s.multiplicity);
  }
  return out;
}

std::vector<KVector> KGroup::bracket_subgroup(const Representation &m) {
  std::vector<KVector> gens;
  for (const auto &[id, mult] : class_of(m))
    gens.push_back(KVector{{id, 1}});
  return gens;
}

const KVector &KGroup::omega(std::size_t id) {
  auto it = omega_.find(id);
  if (it != omega_.end())
    return it->second;
  KVector v = class_of(syzygy(registry_.representative(id)));
  return omega_.emplace(id, std::move(v)).first->second;
}

SyzygyGraph KGroup::syzygy_closure(const std::set<std::size_t> &ids,
                                   std::size_t cap) {
  SyzygyGraph g;
  std::set<std::size_t> seen;
  std::deque<std::size_t> queue;
  for (auto id : ids) {
    seen.insert(id);
    g.nodes.push_back(id);
    queue.push_back(id);
  }
  std::size_t computed = 0;
  while (!queue.empty() && computed < cap) {
    const auto id = queue.front();
    queue.pop_front();
    const KVector &v = omega(id);
    g.syzygies[id] = v;
    ++computed;
    for (const auto &[next, mult] : v)
      if (seen.insert(next).second) {
        g.nodes.push_back(next);
        queue.push_back(next);
      }
  }
  g.frontier.assign(queue.begin(), queue.end());
  g.closed = queue.empty();
  return g;
}

ZMatrix omega_matrix(const SyzygyGraph &g) {
  if (!g.closed)
    throw Error("omega_matrix: syzygy graph is not closed");
  const std::size_t n = g.nodes.size();
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    index[g.nodes[i]] = i;
  ZMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto &[id, mult] : g.syzygies.at(g.nodes[j]))
      t(index.at(id), j) = mult;
  return t;
}

// --------------------------------------------------------------------- phi

namespace {

std::size_t first_index_of_limit(const std::vector<std::size_t> &ranks) {
  const auto limit = ranks.back();
  std::size_t n = ranks.size() - 1;
  while (n > 0 && ranks[n - 1] == limit)
    --n;
  return n;
}

} // namespace

PhiReport phi(KGroup &k, const Representation &m, std::size_t cap) {
  PhiReport rep;
  std::set<std::size_t> ids;
  for (const auto &[id, mult] : k.class_of(m))
    ids.insert(id);
  if (ids.empty()) {
    rep.rank_sequence = {0, 0};
    rep.exact = true;
    return rep;
  }
  auto g = k.syzygy_closure(ids, cap);
  rep.classes_explored = g.syzygies.size();
  rep.cap_hit = !g.closed;

  if (g.closed) {
    const std::size_t v = g.nodes.size();
    ZMatrix t = omega_matrix(g);
    ZMatrix cur(v, ids.size());
    std::size_t c = 0;
    for (auto id : ids)
      cur(g.index_of(id), c++) = 1;
    // ker T^i stabilizes by i = V, so rank(T^i G) is constant from V on.
    for (std::size_t i = 0; i <= v + 1; ++i) {
      rep.rank_sequence.push_back(rank(cur));
      if (i <= v)
        cur = t * cur;
    }
    if (rep.rank_sequence[v] != rep.rank_sequence[v + 1])
      throw Error("phi: rank sequence failed to stabilize");
    rep.value = first_index_of_limit(rep.rank_sequence);
    rep.exact = true;
    return rep;
  }

  // Cap hit: push the generators through Omega for as long as every class in
  // their support has a computed syzygy.
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    index[g.nodes[i]] = i;
  std::vector<std::map<std::size_t, BigInt>> vecs;
  for (auto id : ids)
    vecs.push_back({{id, BigInt(1)}});
  auto rank_of = [&] {
    ZMatrix mat(g.nodes.size(), vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j)
      for (const auto &[id, x] : vecs[j])
        mat(index.at(id), j) = x;
    return rank(mat);
  };
  for (;;) {
    rep.rank_sequence.push_back(rank_of());
    bool ok = true;
    for (const auto &v : vecs)
      for (const auto &[id, x] : v)
        ok = ok && g.syzygies.count(id);
    if (!ok || rep.rank_sequence.size() > g.nodes.size() + 1)
      break;
    for (auto &v : vecs) {
      std::map<std::size_t, BigInt> next;
      for (const auto &[id, x] : v)
        for (const auto &[to, mult] : g.syzygies.at(id))
          next[to] += x * mult;
      std::erase_if(next, [](const auto &kv) { return kv.second == 0; });
      v = std::move(next);
    }
  }
  rep.value = first_index_of_limit(rep.rank_sequence);
  rep.exact = false;
  return rep;
}

// ---------------------------------------------------------------------- pd

PdResult pd_of_class(KGroup &k, std::size_t id, std::size_t cap) {
  auto g = k.syzygy_closure({id}, cap);
  // Cycle among computed classes reachable from id => infinite pd.
  std::map<std::size_t, int> color; // 0 new, 1 on stack, 2 done
  std::function<bool(std::size_t)> has_cycle = [&](std::size_t x) {
    color[x] = 1;
    auto it = g.syzygies.find(x);
    if (it != g.syzygies.end())
      for (const auto &[y, mult] : it->second) {
        if (color[y] == 1)
          return true;
        if (color[y] == 0 && has_cycle(y))
          return true;
      }
    color[x] = 2;
    return false;
  };
  if (has_cycle(id))
    return PdResult::infinite();
  // Acyclic: pd(X) = 1 + max pd over summands of Omega X (0 if none); an
  // uncomputed class contributes the lower bound 1.
  std::map<std::size_t, std::size_t> memo;
  std::function<std::size_t(std::size_t)> depth = [&](std::size_t x) {
    auto m = memo.find(x);
    if (m != memo.end())
      return m->second;
    auto it = g.syzygies.find(x);
    std::size_t best = 0;
    if (it == g.syzygies.end()) {
      best = 1;
    } else {
      for (const auto &[y, mult] : it->second)
        best = std::max(best, depth(y));
      best += 1;
    }
    memo[x] = best;
    return best;
  };
  const auto d = depth(id);
  return g.closed ? PdResult::finite(d) : PdResult::at_least(d);
}

PdResult pd(KGroup &k, const Representation &m, std::size_t cap) {
  PdResult out = PdResult::finite(0);
  for (const auto &[id, mult] : k.class_of(m)) {
    auto r = pd_of_class(k, id, cap);
    if (r.is_infinite())
      return r;
    if (r.kind == PdResult::Kind::UnknownAtLeast ||
        out.kind == PdResult::Kind::UnknownAtLeast)
      out = PdResult::at_least(std::max(out.value, r.value));
    else
      out.value = std::max(out.value, r.value);
  }
  return out;
}

// --------------------------------------------------------------------- psi

PsiReport psi(KGroup &k, const Representation &m, std::size_t cap) {
  PsiReport rep;
  rep.phi = phi(k, m, cap);
  rep.exact = rep.phi.exact;
  Representation shifted = syzygy(m, rep.phi.value);
  for (const auto &[id, mult] : k.class_of(shifted)) {
    auto r = pd_of_class(k, id, cap);
    if (r.is_finite())
      rep.max_finite_pd = std::max(rep.max_finite_pd, r.value);
    else if (r.kind == PdResult::Kind::UnknownAtLeast)
      rep.exact = false;
  }
  rep.value = rep.phi.value + rep.max_finite_pd;
  return rep;
}

// ---------------------------------------------------------------- sampling

std::vector<Representation> curated_seeds(const AlgebraPtr &a,
                                          std::size_t max_simple_subset) {
  const std::size_t nv = a->quiver().vertex_count();
  std::vector<Representation> out;
  std::vector<Representation> simples;
  for (std::size_t v = 0; v < nv; ++v)
    simples.push_back(Representation::simple(a, v));
  out.insert(out.end(), simples.begin(), simples.end());
  for (std::size_t v = 0; v < nv; ++v) {
    auto p = projective(a, v);
    auto r = radical(p).module;
    if (!r.is_zero())
      out.push_back(std::move(r));
    out.push_back(socle(p).module);
  }
  // Direct sums of 2..max_simple_subset distinct simples, in lexicographic
  // order of vertex subsets.
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() >= 2) {
      std::vector<Representation> parts;
      for (auto v : pick)
        parts.push_back(simples[v]);
      out.push_back(direct_sum(parts, a).module);
    }
    if (pick.size() == max_simple_subset)
      return;
    for (std::size_t v = from; v < nv; ++v) {
      pick.push_back(v);
      choose(v + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return out;
}

std::vector<Representation> sample_modules(const AlgebraPtr &a,
                                           const SampleOptions &opt) {
  auto out = curated_seeds(a, opt.max_simple_subset);
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < opt.samples; ++i)
    out.push_back(random_presentation_module(a, opt.budget, rng));
  return out;
}

PhidimSample phidim_sample(KGroup &k, const SampleOptions &opt) {
  PhidimSample out;
  out.witness = Representation::zero(k.algebra());
  for (const auto &m : sample_modules(k.algebra(), opt)) {
    auto r = phi(k, m, opt.cap);
    ++out.modules_evaluated;
    out.exact = out.exact && r.exact;
    if (r.value > out.value) {
      out.value = r.value;
      out.witness = m;
    }
  }
  return out;
}

FindimSample findim_sample(KGroup &k, const SampleOptions &opt) {
  FindimSample out;
  for (const auto &m : sample_modules(k.algebra(), opt)) {
    auto r = pd(k, m, opt.cap);
    ++out.modules_evaluated;
    if (!r.is_finite())
      continue;
    ++out.finite_pd_modules;
    if (!out.witness || r.value > out.value) {
      out.value = r.value;
      out.witness = m;
    }
  }
  return out;
}

// ------------------------------------------------------- self-injectivity

SelfInjectivity self_injective(const AlgebraPtr &a) {
  const std::size_t nv = a->quiver().vertex_count();
  auto op = opposite_algebra(*a);
  std::vector<Representation> injectives;
  for (std::size_t j = 0; j < nv; ++j)
    injectives.push_back(dual(projective(op, j), a));
  SelfInjectivity out;
  out.self_injective = true;
  for (std::size_t i = 0; i < nv; ++i) {
    auto p = projective(a, i);
    ProjectiveDiagnostic d;
    d.vertex = i;
    d.socle_dims = socle_dims(p);
    std::size_t soc = 0;
    for (auto x : d.socle_dims)
      soc += x;
    d.simple_socle = soc == 1;
    for (std::size_t j = 0; j < nv && !d.injective_match; ++j)
      if (is_isomorphic(p, injectives[j]))
        d.injective_match = j;
    if (d.injective_match) {
      out.nakayama_permutation.push_back(*d.injective_match);
    } else {
      out.self_injective = false;
      out.non_injective_vertices.push_back(i);
    }
    out.diagnostics.push_back(std::move(d));
  }
  if (!out.self_injective)
    out.nakayama_permutation.clear();
  return out;
}

// --------------------------------------------------------- witness search

namespace {

// Subspaces of P spanned by the given (vertex, vector) pairs.
Subspaces spanned(const Representation &p,
                  const std::vector<std::pair<std::size_t, FMatrix>> &vecs) {
  Subspaces s;
  for (std::size_t v = 0; v < p.dims().size(); ++v) {
    std::vector<FMatrix> cols;
    for (const auto &[at, vec] : vecs)
      if (at == v)
        cols.push_back(vec);
    s.push_back(cols.empty() ? FMatrix(p.field(), p.dim(v), 0)
                             : hstack(cols, p.field(), p.dim(v)));
  }
  return s;
}

// Socle basis vectors of p, in p's coordinates, grouped by vertex.
std::vector<std::vector<FMatrix>> socle_vectors(const Representation &p) {
  auto soc = socle(p);
  std::vector<std::vector<FMatrix>> out(p.dims().size());
  for (std::size_t v = 0; v < p.dims().size(); ++v) {
    const FMatrix &inc = soc.inclusion.at(v);
    for (std::size_t j = 0; j < inc.cols(); ++j)
      out[v].push_back(inc.column(j));
  }
  return out;
}

std::optional<Morphism> find_monomorphism(const Representation &from,
                                          const Representation &to) {
  auto basis = hom_basis(from, to);
  for (const auto &f : basis)
    if (f.is_injective())
      return f;
  // Simple socle: a map is injective iff it is nonzero on the socle, and
  // those maps form the complement of a subspace; try sums.
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto f = basis[i] + basis[j];
      if (f.is_injective())
        return f;
    }
  return std::nullopt;
}

} // namespace

std::optional<Witness> witness_search(KGroup &k, std::size_t cap) {
  const auto &a = k.algebra();
  const std::size_t nv = a->quiver().vertex_count();
  auto accept = [&](Witness w) -> std::optional<Witness> {
    w.phi = phi(k, w.module, cap);
    if (w.phi.exact && w.phi.value >= 1)
      return w;
    return std::nullopt;
  };

  // Socle with two non-isomorphic simples: P/S1 + P/S2 + P/(S1 + S2).
  for (std::size_t i = 0; i < nv; ++i) {
    auto p = projective(a, i);
    auto soc = socle_vectors(p);
    for (std::size_t j = 0; j < nv; ++j)
      for (std::size_t l = j + 1; l < nv; ++l) {
        if (soc[j].empty() || soc[l].empty())
          continue;
        auto m1 = quotient(p, spanned(p, {{j, soc[j][0]}})).module;
        auto m2 = quotient(p, spanned(p, {{l, soc[l][0]}})).module;
        auto m3 =
            quotient(p, spanned(p, {{j, soc[j][0]}, {l, soc[l][0]}})).module;
        auto w = accept({"two-nonisomorphic-socle-simples", i,
                         direct_sum({m1, m2, m3}, a).module, {}});
        if (w)
          return w;
      }
  }
  // Socle with a repeated simple: P/S + P/(S + S).
  for (std::size_t i = 0; i < nv; ++i) {
    auto p = projective(a, i);
    auto soc = socle_vectors(p);
    for (std::size_t j = 0; j < nv; ++j) {
      if (soc[j].size() < 2)
        continue;
      auto m1 = quotient(p, spanned(p, {{j, soc[j][0]}})).module;
      auto m2 =
          quotient(p, spanned(p, {{j, soc[j][0]}, {j, soc[j][1]}})).module;
      auto w = accept({"repeated-socle-simple", i,
                       direct_sum({m1, m2}, a).module, {}});
      if (w)
        return w;
    }
  }
  // Simple socle but not injective: P -> I(j) -> C = I/P, S a simple in
  // soc C, U its preimage in I. The witness is U + S.
  auto op = opposite_algebra(*a);
  for (std::size_t i = 0; i < nv; ++i) {
    auto p = projective(a, i);
    auto sd = socle_dims(p);
    std::size_t total = 0, j = 0;
    for (std::size_t v = 0; v < nv; ++v)
      if (sd[v]) {
        total += sd[v];
        j = v;
      }
    if (total != 1)
      continue;
    auto hull = dual(projective(op, j), a);
    if (is_isomorphic(p, hull))
      continue;
    auto mono = find_monomorphism(p, hull);
    if (!mono)
      continue;
    auto c = cokernel(*mono);
    auto csoc = socle_vectors(c.module);
    for (std::size_t l = 0; l < nv; ++l) {
      if (csoc[l].empty())
        continue;
      auto lifted = quotient(c.module, spanned(c.module, {{l, csoc[l][0]}}));
      auto u = kernel(lifted.projection.after(c.projection)).module;
      auto w = accept({"lifted-socle-simple", i,
                       direct_sum({u, Representation::simple(a, l)}, a).module,
                       {}});
      if (w)
        return w;
      break;
    }
  }
  return std::nullopt;
}

} // namespace sylab
