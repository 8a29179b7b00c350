#include "sylab/module.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sylab {

// --------------------------------------------------------- Representation

Representation::Representation(AlgebraPtr algebra,
                               std::vector<std::size_t> dims,
                               std::vector<FMatrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)),
      maps_(std::move(maps)) {
  if (!algebra_)
    throw Error("representation without an algebra");
  const Quiver &q = algebra_->quiver();
  if (dims_.size() != q.vertex_count())
    throw Error("dimension vector has wrong length");
  if (maps_.size() != q.arrow_count())
    throw Error("one matrix per arrow expected");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto &ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.target] ||
        maps_[a].cols() != dims_[ar.source])
      throw Error("matrix for arrow '" + ar.name + "' must be " +
                  std::to_string(dims_[ar.target]) + "x" +
                  std::to_string(dims_[ar.source]));
    if (maps_[a].field() != algebra_->field())
      throw Error("matrix for arrow '" + ar.name + "' has the wrong field");
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  const auto &q = algebra->quiver();
  std::vector<FMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.emplace_back(algebra->field(), 0, 0);
  return Representation(algebra, std::vector<std::size_t>(q.vertex_count()),
                        std::move(maps));
}

Representation Representation::simple(AlgebraPtr algebra, std::size_t vertex) {
  const auto &q = algebra->quiver();
  if (vertex >= q.vertex_count())
    throw Error("simple: vertex out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<FMatrix> maps;
  for (const auto &ar : q.arrows())
    maps.emplace_back(algebra->field(), dims[ar.target], dims[ar.source]);
  return Representation(algebra, std::move(dims), std::move(maps));
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

FMatrix Representation::path_action(const Path &p) const {
  FMatrix acc = FMatrix::identity(field(), dims_[p.source]);
  for (auto a : p.arrows)
    acc = maps_[a] * acc;
  return acc;
}

std::optional<std::string> Representation::validate() const {
  const FDAlgebra &alg = *algebra_;
  const Quiver &q = alg.quiver();
  const PrimeField &k = alg.field();
  for (std::size_t r = 0; r < alg.spec().relations.size(); ++r) {
    const auto &rel = alg.spec().relations[r];
    std::optional<FMatrix> sum;
    for (const auto &t : rel.terms) {
      Path p;
      for (const auto &name : t.path) {
        auto a = q.arrow_index(name);
        if (p.arrows.empty())
          p.source = q.arrow(a).source;
        p.arrows.push_back(a);
        p.target = q.arrow(a).target;
      }
      FMatrix term = path_action(p).scaled(k.reduce(t.coef));
      sum = sum ? *sum + term : term;
    }
    if (sum && !sum->is_zero())
      return "relation " + std::to_string(r) + " does not act as zero";
  }
  // Every path of length m must act as zero; prune as soon as a partial
  // composite vanishes.
  const std::size_t m = alg.spec().nilpotency_bound;
  std::optional<std::string> failure;
  std::function<void(const FMatrix &, std::size_t, std::size_t,
                     std::vector<std::size_t> &)>
      walk = [&](const FMatrix &acc, std::size_t at, std::size_t len,
                 std::vector<std::size_t> &arrows) {
        if (failure || acc.is_zero())
          return;
        if (len == m) {
          Path p{0, 0, arrows};
          failure = "path " + alg.path_name(p) + " of length " +
                    std::to_string(m) + " does not act as zero";
          return;
        }
        for (auto a : q.arrows_from(at)) {
          arrows.push_back(a);
          walk(maps_[a] * acc, q.arrow(a).target, len + 1, arrows);
          arrows.pop_back();
        }
      };
  for (std::size_t v = 0; v < q.vertex_count() && !failure; ++v) {
    std::vector<std::size_t> arrows;
    walk(FMatrix::identity(k, dims_[v]), v, 0, arrows);
  }
  return failure;
}

// --------------------------------------------------------------- Morphism

Morphism::Morphism(Representation source, Representation target,
                   std::vector<FMatrix> maps)
    : source_(std::move(source)), target_(std::move(target)),
      maps_(std::move(maps)) {
  if (source_.algebra() != target_.algebra())
    throw Error("morphism between modules over different algebras");
  if (maps_.size() != source_.dims().size())
    throw Error("morphism needs one matrix per vertex");
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (maps_[v].rows() != target_.dim(v) || maps_[v].cols() != source_.dim(v))
      throw Error("morphism matrix at vertex " + std::to_string(v) +
                  " has the wrong shape");
}

Morphism Morphism::identity(const Representation &m) {
  std::vector<FMatrix> maps;
  for (auto d : m.dims())
    maps.push_back(FMatrix::identity(m.field(), d));
  return Morphism(m, m, std::move(maps));
}

Morphism Morphism::zero(const Representation &source,
                        const Representation &target) {
  std::vector<FMatrix> maps;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    maps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return Morphism(source, target, std::move(maps));
}

bool Morphism::intertwines() const {
  const auto &q = source_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto &ar = q.arrow(a);
    if (maps_[ar.target] * source_.map(a) != target_.map(a) * maps_[ar.source])
      return false;
  }
  return true;
}

bool Morphism::is_injective() const {
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (rank(maps_[v]) != source_.dim(v))
      return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (rank(maps_[v]) != target_.dim(v))
      return false;
  return true;
}

bool Morphism::is_isomorphism() const {
  return source_.dims() == target_.dims() && is_injective();
}

bool Morphism::is_zero() const {
  return std::all_of(maps_.begin(), maps_.end(),
                     [](const FMatrix &m) { return m.is_zero(); });
}

Morphism Morphism::after(const Morphism &first) const {
  if (first.target_.dims() != source_.dims())
    throw Error("morphism composition: incompatible modules");
  std::vector<FMatrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v)
    maps.push_back(maps_[v] * first.maps_[v]);
  return Morphism(first.source_, target_, std::move(maps));
}

Morphism Morphism::operator+(const Morphism &o) const {
  std::vector<FMatrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v)
    maps.push_back(maps_[v] + o.maps_[v]);
  return Morphism(source_, target_, std::move(maps));
}

Morphism Morphism::scaled(PrimeField::Elem s) const {
  std::vector<FMatrix> maps;
  for (const auto &m : maps_)
    maps.push_back(m.scaled(s));
  return Morphism(source_, target_, std::move(maps));
}

FMatrix Morphism::total_matrix() const {
  FMatrix out(source_.field(), target_.total_dim(), source_.total_dim());
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t v = 0; v < maps_.size(); ++v) {
    out.set_block(r0, c0, maps_[v]);
    r0 += target_.dim(v);
    c0 += source_.dim(v);
  }
  return out;
}

bool ShortExactSequence::is_exact() const {
  if (mono.target().dims() != epi.source().dims())
    return false;
  if (!mono.intertwines() || !epi.intertwines())
    return false;
  if (!mono.is_injective() || !epi.is_surjective())
    return false;
  for (std::size_t v = 0; v < mono.maps().size(); ++v) {
    if (!(epi.at(v) * mono.at(v)).is_zero())
      return false;
    if (mono.source().dim(v) + epi.target().dim(v) != mono.target().dim(v))
      return false;
  }
  return true;
}

// ---------------------------------------------------- sub and quotients

SubmoduleResult submodule(const Representation &m, const Subspaces &spaces) {
  const auto &alg = m.algebra();
  const auto &q = alg->quiver();
  std::vector<FMatrix> basis;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    basis.push_back(column_space_basis(spaces[v]));
    dims.push_back(basis.back().cols());
  }
  std::vector<FMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto &ar = q.arrow(a);
    FMatrix img = m.map(a) * basis[ar.source];
    auto x = solve(basis[ar.target], img);
    if (!x)
      throw Error("submodule: subspaces not closed under arrow '" + ar.name +
                  "'");
    maps.push_back(std::move(*x));
  }
  Representation sub(alg, dims, std::move(maps));
  return {sub, Morphism(sub, m, std::move(basis))};
}

QuotientResult quotient(const Representation &m, const Subspaces &spaces) {
  const auto &alg = m.algebra();
  const auto &q = alg->quiver();
  const PrimeField &k = m.field();
  // Rows of proj[v] span the annihilator of spaces[v]; they are coordinates
  // on the quotient.
  std::vector<FMatrix> proj;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    FMatrix s = spaces[v].cols() ? spaces[v] : FMatrix(k, m.dim(v), 0);
    FMatrix ann = s.cols() ? kernel_basis(s.transpose()).transpose()
                           : FMatrix::identity(k, m.dim(v));
    dims.push_back(ann.rows());
    proj.push_back(std::move(ann));
  }
  std::vector<FMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto &ar = q.arrow(a);
    // X proj_s = proj_t M_a
    FMatrix rhs = proj[ar.target] * m.map(a);
    auto xt = solve(proj[ar.source].transpose(), rhs.transpose());
    if (!xt)
      throw Error("quotient: subspaces not closed under arrow '" + ar.name +
                  "'");
    maps.push_back(xt->transpose());
  }
  Representation quo(alg, dims, std::move(maps));
  return {quo, Morphism(m, quo, std::move(proj))};
}

// ------------------------------------------------ projectives, injectives

Representation projective(const AlgebraPtr &a, std::size_t vertex) {
  const auto &q = a->quiver();
  const PrimeField &k = a->field();
  if (vertex >= q.vertex_count())
    throw Error("projective: vertex out of range");
  // Basis of P(i)_j: basis paths i -> j; position lookup per basis index.
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<std::size_t> pos(a->dimension(), SIZE_MAX);
  for (auto b : a->paths_from(vertex)) {
    const auto t = a->basis()[b].target;
    pos[b] = dims[t]++;
  }
  std::vector<FMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto &ar = q.arrow(ai);
    FMatrix mat(k, dims[ar.target], dims[ar.source]);
    for (auto b : a->paths_from(vertex)) {
      const Path &p = a->basis()[b];
      if (p.target != ar.source)
        continue;
      Path ext = p;
      ext.arrows.push_back(ai);
      ext.target = ar.target;
      for (const auto &[c, coef] : a->normal_form(ext))
        mat(pos[c], pos[b]) = k.add(mat(pos[c], pos[b]), coef);
    }
    maps.push_back(std::move(mat));
  }
  return Representation(a, std::move(dims), std::move(maps));
}

Representation dual(const Representation &m, const AlgebraPtr &opposite) {
  if (!is_opposite_pair(*m.algebra(), *opposite))
    throw Error("dual: target algebra is not the opposite quiver");
  std::vector<FMatrix> maps;
  for (const auto &mat : m.maps())
    maps.push_back(mat.transpose());
  return Representation(opposite, m.dims(), std::move(maps));
}

Representation dual(const Representation &m) {
  return dual(m, opposite_algebra(*m.algebra()));
}

Representation injective(const AlgebraPtr &a, std::size_t vertex) {
  auto op = opposite_algebra(*a);
  return dual(projective(op, vertex), a);
}

// ------------------------------------------------------------------- Hom

std::vector<Morphism> hom_basis(const Representation &m,
                                const Representation &n) {
  if (m.algebra() != n.algebra())
    throw Error("hom_basis: modules over different algebras");
  const auto &q = m.algebra()->quiver();
  const PrimeField &k = m.field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset[nv];
  std::size_t equations = 0;
  for (const auto &ar : q.arrows())
    equations += n.dim(ar.target) * m.dim(ar.source);

  // f_t M_a - N_a f_s = 0, entry (r, c); f_v stored row-major.
  FMatrix sys(k, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto &ar = q.arrow(a);
    const auto s = ar.source, t = ar.target;
    const FMatrix &ma = m.map(a), &na = n.map(a);
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
        for (std::size_t kk = 0; kk < m.dim(t); ++kk)
          if (ma(kk, c))
            sys(row, offset[t] + r * m.dim(t) + kk) =
                k.add(sys(row, offset[t] + r * m.dim(t) + kk), ma(kk, c));
        for (std::size_t kk = 0; kk < n.dim(s); ++kk)
          if (na(r, kk))
            sys(row, offset[s] + kk * m.dim(s) + c) =
                k.sub(sys(row, offset[s] + kk * m.dim(s) + c), na(r, kk));
      }
  }
  FMatrix ker = kernel_basis(sys);
  std::vector<Morphism> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    std::vector<FMatrix> maps;
    for (std::size_t v = 0; v < nv; ++v) {
      FMatrix f(k, n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c)
          f(r, c) = ker(offset[v] + r * m.dim(v) + c, j);
      maps.push_back(std::move(f));
    }
    out.emplace_back(m, n, std::move(maps));
  }
  return out;
}

// ----------------------------------------------------------- direct sums

DirectSum direct_sum(const std::vector<Representation> &ms,
                     const AlgebraPtr &algebra) {
  const auto &q = algebra->quiver();
  const PrimeField &k = algebra->field();
  const std::size_t nv = q.vertex_count();
  for (const auto &m : ms)
    if (m.algebra() != algebra)
      throw Error("direct_sum: modules over different algebras");
  std::vector<std::size_t> dims(nv, 0);
  for (const auto &m : ms)
    for (std::size_t v = 0; v < nv; ++v)
      dims[v] += m.dim(v);
  std::vector<FMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto &ar = q.arrow(a);
    FMatrix mat(k, dims[ar.target], dims[ar.source]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto &m : ms) {
      mat.set_block(r0, c0, m.map(a));
      r0 += m.dim(ar.target);
      c0 += m.dim(ar.source);
    }
    maps.push_back(std::move(mat));
  }
  DirectSum out{Representation(algebra, dims, std::move(maps)), {}, {}};
  std::vector<std::size_t> off(nv, 0);
  for (const auto &m : ms) {
    std::vector<FMatrix> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      FMatrix i(k, dims[v], m.dim(v));
      for (std::size_t j = 0; j < m.dim(v); ++j)
        i(off[v] + j, j) = 1;
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      off[v] += m.dim(v);
    }
    out.injections.emplace_back(m, out.module, std::move(inj));
    out.projections.emplace_back(out.module, m, std::move(proj));
  }
  return out;
}

DirectSum direct_sum(const std::vector<Representation> &ms) {
  if (ms.empty())
    throw Error("direct_sum of an empty list needs an explicit algebra");
  return direct_sum(ms, ms.front().algebra());
}

Representation power(const Representation &m, std::size_t k) {
  return direct_sum(std::vector<Representation>(k, m), m.algebra()).module;
}

// ----------------------------------------- kernels, radicals, socles

SubmoduleResult kernel(const Morphism &f) {
  Subspaces spaces;
  for (const auto &mat : f.maps())
    spaces.push_back(kernel_basis(mat));
  return submodule(f.source(), spaces);
}

SubmoduleResult image(const Morphism &f) {
  Subspaces spaces;
  for (const auto &mat : f.maps())
    spaces.push_back(column_space_basis(mat));
  return submodule(f.target(), spaces);
}

QuotientResult cokernel(const Morphism &f) {
  Subspaces spaces;
  for (const auto &mat : f.maps())
    spaces.push_back(column_space_basis(mat));
  return quotient(f.target(), spaces);
}

namespace {

Subspaces radical_spaces(const Representation &m) {
  const auto &q = m.algebra()->quiver();
  Subspaces spaces;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<FMatrix> parts;
    for (auto a : q.arrows_into(v))
      parts.push_back(m.map(a));
    spaces.push_back(parts.empty()
                         ? FMatrix(m.field(), m.dim(v), 0)
                         : column_space_basis(hstack(parts, m.field(), m.dim(v))));
  }
  return spaces;
}

FMatrix outgoing_stack(const Representation &m, std::size_t v) {
  const auto &q = m.algebra()->quiver();
  std::vector<FMatrix> parts;
  for (auto a : q.arrows_from(v))
    parts.push_back(m.map(a));
  return vstack(parts, m.field(), m.dim(v));
}

} // namespace

SubmoduleResult radical(const Representation &m) {
  return submodule(m, radical_spaces(m));
}

QuotientResult top(const Representation &m) {
  return quotient(m, radical_spaces(m));
}

SubmoduleResult socle(const Representation &m) {
  Subspaces spaces;
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    spaces.push_back(kernel_basis(outgoing_stack(m, v)));
  return submodule(m, spaces);
}

std::vector<std::size_t> top_dims(const Representation &m) {
  auto spaces = radical_spaces(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < spaces.size(); ++v)
    out.push_back(m.dim(v) - spaces[v].cols());
  return out;
}

std::vector<std::size_t> socle_dims(const Representation &m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    out.push_back(m.dim(v) - rank(outgoing_stack(m, v)));
  return out;
}

// ------------------------------------------------------------- covers

Morphism morphism_from_projectives(
    const Representation &m,
    const std::vector<std::pair<std::size_t, FMatrix>> &generators) {
  const auto &alg = m.algebra();
  const PrimeField &k = m.field();
  const std::size_t nv = alg->quiver().vertex_count();
  std::vector<Representation> summands;
  for (const auto &g : generators)
    summands.push_back(projective(alg, g.first));
  auto sum = direct_sum(summands, alg);
  std::vector<FMatrix> maps;
  for (std::size_t v = 0; v < nv; ++v)
    maps.emplace_back(k, m.dim(v), sum.module.dim(v));
  std::vector<std::size_t> off(nv, 0);
  for (const auto &[vertex, vec] : generators) {
    if (vec.rows() != m.dim(vertex) || vec.cols() != 1)
      throw Error("morphism_from_projectives: generator image has wrong shape");
    std::vector<std::size_t> local(nv, 0);
    for (auto b : alg->paths_from(vertex)) {
      const Path &p = alg->basis()[b];
      FMatrix img = m.path_action(p) * vec;
      maps[p.target].set_block(0, off[p.target] + local[p.target], img);
      ++local[p.target];
    }
    for (std::size_t v = 0; v < nv; ++v)
      off[v] += local[v];
  }
  return Morphism(sum.module, m, std::move(maps));
}

ProjectiveCover projective_cover(const Representation &m) {
  const auto &alg = m.algebra();
  const std::size_t nv = alg->quiver().vertex_count();
  auto rad = radical_spaces(m);
  std::vector<std::pair<std::size_t, FMatrix>> gens;
  std::vector<std::size_t> vertices;
  for (std::size_t v = 0; v < nv; ++v) {
    FMatrix comp = complement_basis(rad[v]);
    for (std::size_t j = 0; j < comp.cols(); ++j) {
      gens.push_back({v, comp.column(j)});
      vertices.push_back(v);
    }
  }
  auto f = morphism_from_projectives(m, gens);
  if (!f.is_surjective())
    throw Error("projective_cover: cover map is not surjective");
  return {f.source(), f, vertices};
}

Representation syzygy(const Representation &m) {
  return kernel(projective_cover(m).cover).module;
}

Representation syzygy(const Representation &m, std::size_t times) {
  Representation out = m;
  for (std::size_t i = 0; i < times && !out.is_zero(); ++i)
    out = syzygy(out);
  return out;
}

bool is_projective(const Representation &m) {
  const auto &alg = m.algebra();
  auto t = top_dims(m);
  std::size_t cover_dim = 0;
  for (std::size_t v = 0; v < t.size(); ++v)
    cover_dim += t[v] * alg->paths_from(v).size();
  return cover_dim == m.total_dim();
}

// ------------------------------------------------------------- sampling

Representation random_base_change(const Representation &m, Rng &rng) {
  const auto &q = m.algebra()->quiver();
  const PrimeField &k = m.field();
  std::vector<FMatrix> g, ginv;
  for (auto d : m.dims()) {
    for (;;) {
      FMatrix c = FMatrix::random(k, d, d, rng);
      if (auto inv = inverse(c)) {
        g.push_back(std::move(c));
        ginv.push_back(std::move(*inv));
        break;
      }
    }
  }
  std::vector<FMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto &ar = q.arrow(a);
    maps.push_back(g[ar.target] * m.map(a) * ginv[ar.source]);
  }
  return Representation(m.algebra(), m.dims(), std::move(maps));
}

namespace {

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random sum of indecomposable projectives with total dimension <= budget.
std::vector<std::size_t> random_projective_vertices(const AlgebraPtr &a,
                                                    std::size_t budget,
                                                    Rng &rng) {
  const std::size_t nv = a->quiver().vertex_count();
  std::vector<std::size_t> out;
  std::size_t used = 0;
  const std::size_t attempts = 1 + uniform(rng, 0, 2 * nv + 1);
  for (std::size_t t = 0; t < attempts; ++t) {
    const auto v = uniform(rng, 0, nv - 1);
    const auto d = a->paths_from(v).size();
    if (used + d <= budget) {
      out.push_back(v);
      used += d;
    }
  }
  return out;
}

FMatrix random_vector_in(const FMatrix &space, Rng &rng) {
  const PrimeField &k = space.field();
  FMatrix coeffs = FMatrix::random(k, space.cols(), 1, rng);
  return space * coeffs;
}

} // namespace

Representation random_presentation_module(const AlgebraPtr &a,
                                          std::size_t budget, Rng &rng) {
  const PrimeField &k = a->field();
  const std::size_t nv = a->quiver().vertex_count();
  if (budget == 0)
    return Representation::zero(a);
  auto top_vertices = random_projective_vertices(a, budget, rng);
  if (top_vertices.empty()) {
    // Nothing projective fits: a random semisimple module instead.
    std::vector<Representation> simples;
    const auto count = uniform(rng, 1, budget);
    for (std::size_t i = 0; i < count; ++i)
      simples.push_back(Representation::simple(a, uniform(rng, 0, nv - 1)));
    return direct_sum(simples, a).module;
  }
  std::vector<Representation> tops;
  for (auto v : top_vertices)
    tops.push_back(projective(a, v));
  auto p0 = direct_sum(tops, a).module;
  auto rad = radical_spaces(p0);
  const auto relations = uniform(rng, 0, top_vertices.size() + 1);
  std::vector<std::pair<std::size_t, FMatrix>> gens;
  for (std::size_t i = 0; i < relations; ++i) {
    const auto v = uniform(rng, 0, nv - 1);
    if (p0.dim(v) == 0)
      continue;
    // Mostly relations inside the radical; occasionally anywhere.
    const bool in_radical = uniform(rng, 0, 3) != 0;
    FMatrix space = in_radical ? rad[v] : FMatrix::identity(k, p0.dim(v));
    if (space.cols() == 0)
      continue;
    gens.push_back({v, random_vector_in(space, rng)});
  }
  if (gens.empty())
    return p0;
  return cokernel(morphism_from_projectives(p0, gens)).module;
}

ShortExactSequence ses_from_submodule(const SubmoduleResult &a) {
  auto c = cokernel(a.inclusion);
  return {a.inclusion, c.projection};
}

ShortExactSequence random_ses(const AlgebraPtr &a, std::size_t budget,
                              Rng &rng) {
  const std::size_t nv = a->quiver().vertex_count();
  auto b = random_presentation_module(a, budget, rng);
  std::vector<std::pair<std::size_t, FMatrix>> gens;
  const auto count = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < count; ++i) {
    const auto v = uniform(rng, 0, nv - 1);
    if (b.dim(v) == 0)
      continue;
    gens.push_back({v, FMatrix::random(b.field(), b.dim(v), 1, rng)});
  }
  SubmoduleResult sub =
      gens.empty()
          ? submodule(b, [&] {
              Subspaces s;
              for (auto d : b.dims())
                s.emplace_back(b.field(), d, 0);
              return s;
            }())
          : image(morphism_from_projectives(b, gens));
  return ses_from_submodule(sub);
}

} // namespace sylab
