#include "sylab/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace sylab {

namespace {

using Endo = std::vector<FMatrix>; // one matrix per vertex

Endo endo_of(const Morphism &u) { return u.maps(); }

Endo multiply(const Endo &a, const Endo &b) {
  Endo out;
  for (std::size_t v = 0; v < a.size(); ++v)
    out.push_back(a[v] * b[v]);
  return out;
}

Endo evaluate_at(const Poly &f, const Endo &u) {
  Endo out;
  for (const auto &m : u)
    out.push_back(evaluate(f, m));
  return out;
}

FMatrix block_diagonal(const Endo &u) {
  std::size_t n = 0;
  for (const auto &m : u)
    n += m.rows();
  FMatrix out(u.front().field(), n, n);
  std::size_t o = 0;
  for (const auto &m : u) {
    out.set_block(o, o, m);
    o += m.rows();
  }
  return out;
}

std::vector<PrimeField::Elem> flatten(const Endo &u) {
  std::vector<PrimeField::Elem> out;
  for (const auto &m : u)
    out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

std::optional<FittingSplit> split_by(const Representation &m, const Endo &u) {
  Subspaces ker, im;
  bool ker_zero = true, im_zero = true;
  for (std::size_t v = 0; v < u.size(); ++v) {
    FMatrix pw = matrix_power(u[v], std::max<std::size_t>(1, m.dim(v)));
    ker.push_back(kernel_basis(pw));
    im.push_back(column_space_basis(pw));
    ker_zero = ker_zero && ker.back().cols() == 0;
    im_zero = im_zero && im.back().cols() == 0;
  }
  if (ker_zero || im_zero)
    return std::nullopt;
  return FittingSplit{submodule(m, ker), submodule(m, im)};
}

struct Attempt {
  std::optional<FittingSplit> split;
  Poly factor;  // irreducible factor of the minimal polynomial
  bool primary; // minimal polynomial is a power of `factor`
};

// Splits m along the primary decomposition of u when its minimal polynomial
// has two distinct irreducible factors, or along Fitting's lemma for u.
Attempt attempt_split(const Representation &m, const Endo &u, Rng &rng) {
  const PrimeField &k = m.field();
  Poly f = minimal_polynomial(block_diagonal(u));
  Attempt out{std::nullopt, {}, true};
  if (f.size() < 2)
    return out;
  out.factor = poly::irreducible_factor(k, f, rng);
  Poly rest = f;
  while (rest.size() > 1 && poly::mod(k, rest, out.factor).empty())
    rest = poly::div(k, rest, out.factor);
  out.primary = rest.size() <= 1;
  if (!out.primary) {
    out.split = split_by(m, evaluate_at(out.factor, u));
    if (!out.split)
      throw Error("decompose: primary split unexpectedly trivial");
  }
  return out;
}

// Every element of J = span{u - lambda(u)} is nilpotent and J generates a
// nilpotent algebra: then End = F*1 + J is local.
bool radical_is_nilpotent(const std::vector<Endo> &j, std::size_t dim) {
  if (j.empty())
    return true;
  const PrimeField k = j.front().front().field();
  auto span_basis = [&](const std::vector<Endo> &elems) {
    std::vector<Endo> basis;
    if (elems.empty())
      return basis;
    const std::size_t len = flatten(elems.front()).size();
    FMatrix mat(k, len, elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c) {
      auto fl = flatten(elems[c]);
      for (std::size_t r = 0; r < len; ++r)
        mat(r, c) = fl[r];
    }
    if (len == 0)
      return basis;
    for (auto c : row_reduce(mat).pivots)
      basis.push_back(elems[c]);
    return basis;
  };
  auto jb = span_basis(j);
  auto power = jb;
  for (std::size_t step = 0; step <= dim && !power.empty(); ++step) {
    std::vector<Endo> next;
    for (const auto &a : power)
      for (const auto &b : jb) {
        Endo p = multiply(a, b);
        bool zero = std::all_of(p.begin(), p.end(),
                                [](const FMatrix &x) { return x.is_zero(); });
        if (!zero)
          next.push_back(std::move(p));
      }
    power = span_basis(next);
  }
  return power.empty();
}

std::size_t total(const std::vector<std::size_t> &v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

struct SplitOutcome {
  std::optional<FittingSplit> split;
  Certificate certificate = Certificate::Deterministic;
};

SplitOutcome try_split(const Representation &m, const DecomposeOptions &opt,
                       Rng &rng) {
  if (total(top_dims(m)) <= 1 || total(socle_dims(m)) <= 1)
    return {};
  auto end = hom_basis(m, m);
  if (end.size() <= 1)
    return {};
  const PrimeField &k = m.field();

  bool all_scalar_plus_nilpotent = true;
  std::vector<Endo> radical_candidates;
  for (const auto &u : end) {
    Endo e = endo_of(u);
    auto at = attempt_split(m, e, rng);
    if (at.split)
      return {std::move(at.split), Certificate::Deterministic};
    if (at.factor.size() != 2) {
      all_scalar_plus_nilpotent = false;
      continue;
    }
    // factor = x - lambda
    const auto lambda = k.neg(at.factor[0]);
    for (auto &mat : e)
      for (std::size_t d = 0; d < mat.rows(); ++d)
        mat(d, d) = k.sub(mat(d, d), lambda);
    radical_candidates.push_back(std::move(e));
  }
  std::size_t budget = opt.trial_budget;
  if (all_scalar_plus_nilpotent) {
    if (radical_is_nilpotent(radical_candidates, m.total_dim()))
      return {};
    budget *= 8; // End is known not to be local
  }
  for (std::size_t t = 0; t < budget; ++t) {
    Endo u;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
      u.emplace_back(k, m.dim(v), m.dim(v));
    for (const auto &b : end) {
      const auto c = k.random(rng);
      if (!c)
        continue;
      for (std::size_t v = 0; v < u.size(); ++v)
        u[v] = u[v] + b.at(v).scaled(c);
    }
    auto at = attempt_split(m, u, rng);
    if (at.split)
      return {std::move(at.split), Certificate::Deterministic};
  }
  return {std::nullopt, Certificate::Probabilistic};
}

} // namespace

std::optional<FittingSplit> fitting_split(const Representation &m,
                                          const Morphism &u) {
  if (u.source().dims() != m.dims() || u.target().dims() != m.dims() ||
      !(u.source() == m) || !(u.target() == m))
    throw Error("fitting_split: not an endomorphism of the given module");
  if (!u.intertwines())
    throw Error("fitting_split: maps do not commute with the arrows");
  if (m.is_zero())
    return std::nullopt;
  return split_by(m, endo_of(u));
}

Decomposition decompose(const Representation &m,
                        const DecomposeOptions &options) {
  Rng rng(options.seed);
  Decomposition out;
  const std::size_t nv = m.dims().size();
  struct Piece {
    Representation module;
    Morphism inclusion; // into m
  };
  std::vector<Piece> done;
  std::vector<Piece> stack;
  if (!m.is_zero())
    stack.push_back({m, Morphism::identity(m)});
  while (!stack.empty()) {
    Piece cur = std::move(stack.back());
    stack.pop_back();
    auto res = try_split(cur.module, options, rng);
    if (!res.split) {
      if (res.certificate == Certificate::Probabilistic)
        out.certificate = Certificate::Probabilistic;
      done.push_back(std::move(cur));
      continue;
    }
    // Push the image part first so the kernel part is processed next.
    auto &s = *res.split;
    stack.push_back({s.image_part.module,
                     cur.inclusion.after(s.image_part.inclusion)});
    stack.push_back({s.kernel_part.module,
                     cur.inclusion.after(s.kernel_part.inclusion)});
  }

  std::vector<std::size_t> cls(done.size());
  for (std::size_t i = 0; i < done.size(); ++i) {
    std::size_t c = 0;
    for (; c < out.summands.size(); ++c)
      if (is_isomorphic(out.summands[c].module, done[i].module))
        break;
    if (c == out.summands.size())
      out.summands.push_back({done[i].module, 0, is_projective(done[i].module)});
    ++out.summands[c].multiplicity;
    cls[i] = c;
  }
  std::vector<std::size_t> order(done.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return cls[a] < cls[b]; });

  std::vector<std::vector<FMatrix>> cols(nv);
  for (auto i : order) {
    out.pieces.push_back(done[i].module);
    out.piece_class.push_back(cls[i]);
    for (std::size_t v = 0; v < nv; ++v)
      cols[v].push_back(done[i].inclusion.at(v));
  }
  auto sum = direct_sum(out.pieces, m.algebra()).module;
  std::vector<FMatrix> maps;
  for (std::size_t v = 0; v < nv; ++v)
    maps.push_back(hstack(cols[v], m.field(), m.dim(v)));
  out.witness = Morphism(sum, m, std::move(maps));
  if (!out.witness.is_isomorphism())
    throw Error("decompose: reassembled sum is not isomorphic to the input");
  return out;
}

bool is_isomorphic(const Representation &x, const Representation &y) {
  if (x.algebra() != y.algebra())
    throw Error("is_isomorphic: modules over different algebras");
  if (x.dims() != y.dims())
    return false;
  if (x.is_zero())
    return true;
  if (top_dims(x) != top_dims(y) || socle_dims(x) != socle_dims(y))
    return false;
  // End(x) is local, so the non-isomorphisms in Hom(x, y) form a proper
  // subspace when x and y are isomorphic: some basis element is invertible.
  for (const auto &f : hom_basis(x, y))
    if (f.is_injective())
      return true;
  return false;
}

bool same_summands(const Decomposition &a, const Decomposition &b) {
  if (a.summands.size() != b.summands.size())
    return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto &s : a.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < b.summands.size() && !matched; ++j) {
      if (used[j] || b.summands[j].multiplicity != s.multiplicity)
        continue;
      if (is_isomorphic(s.module, b.summands[j].module)) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched)
      return false;
  }
  return true;
}

bool modules_isomorphic(const Representation &x, const Representation &y) {
  if (x.algebra() != y.algebra())
    throw Error("modules_isomorphic: modules over different algebras");
  if (x.dims() != y.dims())
    return false;
  return same_summands(decompose(x), decompose(y));
}

// --------------------------------------------------------------- Registry

Registry::Signature Registry::signature(const Representation &m) {
  Signature s = m.dims();
  auto t = top_dims(m), so = socle_dims(m);
  s.insert(s.end(), t.begin(), t.end());
  s.insert(s.end(), so.begin(), so.end());
  return s;
}

std::optional<std::size_t> Registry::lookup(const Signature &sig,
                                            const Representation &m) const {
  auto it = buckets_.find(sig);
  if (it == buckets_.end())
    return std::nullopt;
  for (auto id : it->second)
    if (is_isomorphic(reps_[id], m))
      return id;
  return std::nullopt;
}

std::optional<std::size_t> Registry::find(const Representation &m) const {
  if (m.algebra() != algebra_)
    throw Error("registry: module over a different algebra");
  std::lock_guard<std::mutex> lock(mutex_);
  return lookup(signature(m), m);
}

std::optional<std::size_t> Registry::intern(const Representation &m) {
  if (m.algebra() != algebra_)
    throw Error("registry: module over a different algebra");
  if (m.is_zero())
    throw Error("registry: the zero module has no class");
  if (is_projective(m))
    return std::nullopt;
  auto sig = signature(m);
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto id = lookup(sig, m))
    return id;
  const std::size_t id = reps_.size();
  reps_.push_back(m);
  buckets_[sig].push_back(id);
  return id;
}

} // namespace sylab
