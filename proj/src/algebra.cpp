#include "sylab/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sylab {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty())
    throw Error("quiver needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vertex_ids_.emplace(vertices_[i], i).second)
      throw Error("duplicate vertex label '" + vertices_[i] + "'");
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto &ar = arrows_[a];
    if (!arrow_ids_.emplace(ar.name, a).second)
      throw Error("duplicate arrow name '" + ar.name + "'");
    if (ar.source >= vertices_.size() || ar.target >= vertices_.size())
      throw Error("arrow '" + ar.name + "' has an undeclared endpoint");
    out_[ar.source].push_back(a);
    in_[ar.target].push_back(a);
  }
}

std::size_t Quiver::vertex_index(const std::string &label) const {
  auto it = vertex_ids_.find(label);
  if (it == vertex_ids_.end())
    throw Error("unknown vertex '" + label + "'");
  return it->second;
}

std::size_t Quiver::arrow_index(const std::string &name) const {
  auto it = arrow_ids_.find(name);
  if (it == arrow_ids_.end())
    throw Error("unknown arrow '" + name + "'");
  return it->second;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto &a : arrows_)
    rev.push_back({a.name, a.target, a.source});
  return Quiver(vertices_, std::move(rev));
}

bool path_less(const Path &a, const Path &b) {
  if (a.length() != b.length())
    return a.length() < b.length();
  if (a.length() == 0)
    return a.source < b.source;
  return a.arrows < b.arrows;
}

std::vector<Path> enumerate_paths(const Quiver &q, std::size_t bound) {
  std::vector<Path> out;
  if (bound == 0)
    return out;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    layer.push_back({v, v, {}});
  for (std::size_t len = 0; len < bound && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto &p : layer)
      for (auto a : q.arrows_from(p.target)) {
        Path e = p;
        e.arrows.push_back(a);
        e.target = q.arrow(a).target;
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

namespace {

using PathKey = std::pair<std::size_t, std::vector<std::size_t>>;

PathKey key_of(const Path &p) {
  return {p.length() == 0 ? p.source : 0, p.arrows};
}

Path concat(const Path &a, const Path &b) {
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

struct ParsedRelation {
  std::size_t source, target, min_length;
  std::vector<std::pair<PrimeField::Elem, Path>> terms;
};

ParsedRelation parse_relation(const AlgebraSpec &spec, const Relation &r,
                              std::size_t index) {
  const Quiver &q = spec.quiver;
  const auto where = "relation " + std::to_string(index) + ": ";
  ParsedRelation out{0, 0, SIZE_MAX, {}};
  std::map<std::vector<std::size_t>, PrimeField::Elem> merged;
  bool first = true;
  for (const auto &t : r.terms) {
    if (t.path.size() < 2)
      throw Error(where + "path of length " + std::to_string(t.path.size()) +
                  " is not inside the square of the arrow ideal");
    Path p;
    for (const auto &name : t.path) {
      if (!q.has_arrow(name))
        throw Error(where + "unknown arrow '" + name + "'");
      const auto a = q.arrow_index(name);
      if (p.arrows.empty())
        p.source = q.arrow(a).source;
      else if (q.arrow(p.arrows.back()).target != q.arrow(a).source)
        throw Error(where + "arrows do not compose at '" + name + "'");
      p.arrows.push_back(a);
      p.target = q.arrow(a).target;
    }
    if (first) {
      out.source = p.source;
      out.target = p.target;
      first = false;
    } else if (p.source != out.source || p.target != out.target) {
      throw Error(where + "paths are not parallel");
    }
    auto &c = merged[p.arrows];
    c = spec.field.add(c, spec.field.reduce(t.coef));
  }
  for (auto &[arrows, c] : merged) {
    if (c == 0)
      continue;
    Path p{out.source, out.target, arrows};
    out.min_length = std::min(out.min_length, p.length());
    out.terms.push_back({c, std::move(p)});
  }
  if (out.terms.empty())
    throw Error(where + "no term with a nonzero coefficient");
  return out;
}

} // namespace

AlgebraPtr build_algebra(AlgebraSpec spec) {
  if (spec.nilpotency_bound < 2)
    throw Error("nilpotency bound must be at least 2");
  const Quiver &q = spec.quiver;
  const PrimeField k = spec.field;
  const std::size_t m = spec.nilpotency_bound;

  std::vector<ParsedRelation> rels;
  for (std::size_t i = 0; i < spec.relations.size(); ++i)
    rels.push_back(parse_relation(spec, spec.relations[i], i));

  const auto paths = enumerate_paths(q, m);

  // Group paths of length < m into (source, target) blocks; inside a block
  // columns run from the largest path down so pivots are leading terms.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> blocks;
  for (const auto &p : paths)
    blocks[{p.source, p.target}].push_back(p);
  std::vector<std::vector<Path>> ending(q.vertex_count()),
      starting(q.vertex_count());
  for (const auto &p : paths) {
    ending[p.target].push_back(p);
    starting[p.source].push_back(p);
  }

  // Ideal generators u r v, truncated below length m, per block.
  std::map<std::pair<std::size_t, std::size_t>,
           std::vector<std::map<std::vector<std::size_t>, PrimeField::Elem>>>
      generators;
  for (const auto &r : rels) {
    if (r.min_length >= m)
      continue;
    for (const auto &u : ending[r.source])
      for (const auto &v : starting[r.target]) {
        if (u.length() + v.length() + r.min_length >= m)
          continue;
        std::map<std::vector<std::size_t>, PrimeField::Elem> elem;
        for (const auto &[c, p] : r.terms) {
          Path full = concat(concat(u, p), v);
          if (full.length() < m)
            elem[full.arrows] = k.add(elem[full.arrows], c);
        }
        generators[{u.source, v.target}].push_back(std::move(elem));
      }
  }

  auto alg = std::shared_ptr<FDAlgebra>(new FDAlgebra());
  std::vector<Path> basis;
  // Pivot rows express eliminated paths through block-local non-pivot paths;
  // remember them by arrow list and resolve to global indices afterwards.
  std::vector<std::pair<Path, std::vector<std::pair<Path, PrimeField::Elem>>>>
      rewrite;
  for (auto &[st, block] : blocks) {
    std::vector<Path> cols(block.rbegin(), block.rend());
    std::map<std::vector<std::size_t>, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c)
      col_of[cols[c].arrows] = c;
    const auto &gens = generators[st];
    std::vector<bool> pivot(cols.size(), false);
    if (!gens.empty()) {
      FMatrix mat(k, gens.size(), cols.size());
      for (std::size_t r = 0; r < gens.size(); ++r)
        for (const auto &[arrows, c] : gens[r])
          mat(r, col_of.at(arrows)) = c;
      auto ef = row_reduce(std::move(mat));
      for (auto c : ef.pivots)
        pivot[c] = true;
      for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        std::vector<std::pair<Path, PrimeField::Elem>> rhs;
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (!pivot[c] && ef.reduced(r, c))
            rhs.push_back({cols[c], k.neg(ef.reduced(r, c))});
        rewrite.push_back({cols[ef.pivots[r]], std::move(rhs)});
      }
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!pivot[c])
        basis.push_back(cols[c]);
  }
  std::sort(basis.begin(), basis.end(), path_less);

  std::map<PathKey, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    index[key_of(basis[i])] = i;

  alg->spec_ = std::move(spec);
  alg->basis_ = basis;
  const std::size_t nv = alg->spec_.quiver.vertex_count();
  alg->idempotent_.resize(nv);
  alg->from_.assign(nv, {});
  alg->into_.assign(nv, {});
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].length() == 0)
      alg->idempotent_[basis[i].source] = i;
    else
      alg->basis_index_[basis[i].arrows] = i;
    alg->from_[basis[i].source].push_back(i);
    alg->into_[basis[i].target].push_back(i);
  }
  for (auto &[p, rhs] : rewrite) {
    SparseVec v;
    for (auto &[bp, c] : rhs)
      v.push_back({index.at(key_of(bp)), c});
    std::sort(v.begin(), v.end());
    alg->reductions_[p.arrows] = std::move(v);
  }

  const std::size_t n = basis.size();
  alg->mult_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (basis[i].target == basis[j].source)
        alg->mult_[i * n + j] = alg->normal_form(concat(basis[i], basis[j]));
  return alg;
}

SparseVec FDAlgebra::normal_form(const Path &p) const {
  const Quiver &q = quiver();
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    const auto &a = q.arrow(p.arrows[i]);
    const auto expected = i == 0 ? p.source : q.arrow(p.arrows[i - 1]).target;
    if (a.source != expected)
      throw Error("normal_form: path does not compose");
  }
  if (p.length() >= spec_.nilpotency_bound)
    return {};
  if (p.length() == 0)
    return {{idempotent_[p.source], 1}};
  auto it = reductions_.find(p.arrows);
  if (it != reductions_.end())
    return it->second;
  auto b = basis_index_.find(p.arrows);
  if (b != basis_index_.end())
    return {{b->second, 1}};
  throw Error("normal_form: path missing from basis");
}

std::vector<PrimeField::Elem>
FDAlgebra::multiply(const std::vector<PrimeField::Elem> &x,
                    const std::vector<PrimeField::Elem> &y) const {
  const std::size_t n = dimension();
  if (x.size() != n || y.size() != n)
    throw Error("multiply: coefficient vector length mismatch");
  const PrimeField &k = field();
  std::vector<PrimeField::Elem> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i])
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j])
        continue;
      const auto s = k.mul(x[i], y[j]);
      for (const auto &[b, c] : product(i, j))
        out[b] = k.add(out[b], k.mul(s, c));
    }
  }
  return out;
}

std::string FDAlgebra::path_name(const Path &p) const {
  if (p.length() == 0)
    return "e" + quiver().vertices()[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i)
    s += (i ? "*" : "") + quiver().arrow(p.arrows[i]).name;
  return s;
}

// --------------------------------------------------------------- fixtures

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i)
    v.push_back(std::to_string(i));
  return v;
}

// Every path of length exactly `len` as a monomial relation.
std::vector<Relation> all_paths_of_length(const Quiver &q, std::size_t len) {
  std::vector<Relation> rels;
  std::function<void(std::vector<std::string> &, std::size_t, std::size_t)>
      walk = [&](std::vector<std::string> &names, std::size_t at,
                 std::size_t left) {
        if (left == 0) {
          rels.push_back({{{1, names}}});
          return;
        }
        for (auto a : q.arrows_from(at)) {
          names.push_back(q.arrow(a).name);
          walk(names, q.arrow(a).target, left - 1);
          names.pop_back();
        }
      };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<std::string> names;
    walk(names, v, len);
  }
  return rels;
}

} // namespace

AlgebraPtr paper_example_algebra(std::size_t n, std::uint32_t p) {
  if (n < 2)
    throw Error("example algebra needs n >= 2");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i)
    arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  arrows.push_back({"b", n - 1, n - 1});
  Quiver q(numbered(n), std::move(arrows));
  auto rels = all_paths_of_length(q, 2);
  return build_algebra({PrimeField(p), std::move(q), std::move(rels), 2});
}

AlgebraPtr nakayama_cyclic_algebra(std::size_t n, std::size_t m,
                                   std::uint32_t p) {
  if (n < 1 || m < 2)
    throw Error("cyclic Nakayama algebra needs n >= 1 and m >= 2");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i)
    arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
  Quiver q(numbered(n), std::move(arrows));
  auto rels = all_paths_of_length(q, m);
  return build_algebra({PrimeField(p), std::move(q), std::move(rels), m});
}

AlgebraPtr truncated_polynomial_algebra(std::size_t m, std::uint32_t p) {
  if (m < 2)
    throw Error("k[x]/(x^m) needs m >= 2");
  Quiver q({"1"}, {{"x", 0, 0}});
  auto rels = all_paths_of_length(q, m);
  return build_algebra({PrimeField(p), std::move(q), std::move(rels), m});
}

AlgebraPtr linear_path_algebra(std::size_t n, std::uint32_t p) {
  if (n < 1)
    throw Error("A_n needs n >= 1");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i)
    arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  Quiver q(numbered(n), std::move(arrows));
  return build_algebra({PrimeField(p), std::move(q), {}, std::max<std::size_t>(2, n)});
}

AlgebraPtr opposite_algebra(const FDAlgebra &a) {
  AlgebraSpec spec = a.spec();
  spec.quiver = a.quiver().opposite();
  for (auto &r : spec.relations)
    for (auto &t : r.terms)
      std::reverse(t.path.begin(), t.path.end());
  return build_algebra(std::move(spec));
}

bool is_opposite_pair(const FDAlgebra &a, const FDAlgebra &b) {
  const Quiver &qa = a.quiver(), &qb = b.quiver();
  if (a.field() != b.field() || qa.vertices() != qb.vertices() ||
      qa.arrow_count() != qb.arrow_count())
    return false;
  for (std::size_t i = 0; i < qa.arrow_count(); ++i) {
    const auto &x = qa.arrow(i), &y = qb.arrow(i);
    if (x.name != y.name || x.source != y.target || x.target != y.source)
      return false;
  }
  return true;
}

} // namespace sylab
