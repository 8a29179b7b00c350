#ifndef SYLAB_ALGEBRA_HPP
#define SYLAB_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sylab/linalg.hpp"

namespace sylab {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

class Quiver {
public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string> &vertices() const { return vertices_; }
  const std::vector<Arrow> &arrows() const { return arrows_; }
  const Arrow &arrow(std::size_t a) const { return arrows_[a]; }

  std::size_t vertex_index(const std::string &label) const;
  std::size_t arrow_index(const std::string &name) const;
  bool has_vertex(const std::string &label) const {
    return vertex_ids_.count(label) != 0;
  }
  bool has_arrow(const std::string &name) const {
    return arrow_ids_.count(name) != 0;
  }

  const std::vector<std::size_t> &arrows_from(std::size_t v) const {
    return out_[v];
  }
  const std::vector<std::size_t> &arrows_into(std::size_t v) const {
    return in_[v];
  }

  /// Same vertices, every arrow reversed, names kept.
  Quiver opposite() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_ids_;
  std::map<std::string, std::size_t> arrow_ids_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

/// A path in the quiver. Arrows are listed in traversal order ("first
/// arrows[0], then arrows[1], ..."); the empty list is the trivial path at
/// `source`.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path &o) const = default;
};

/// Length first, then trivial paths by vertex, then arrow indices
/// lexicographically.
bool path_less(const Path &a, const Path &b);

struct RelationTerm {
  std::int64_t coef;
  std::vector<std::string> path; // arrow names
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct AlgebraSpec {
  PrimeField field{2};
  Quiver quiver{{"1"}, {}};
  std::vector<Relation> relations;
  std::size_t nilpotency_bound = 2;
};

/// Sparse element of the algebra: (basis index, nonzero coefficient) pairs in
/// increasing index order.
using SparseVec = std::vector<std::pair<std::size_t, PrimeField::Elem>>;

/// kQ/(I + J^m) with a normal-form path basis.
class FDAlgebra {
public:
  const AlgebraSpec &spec() const { return spec_; }
  const PrimeField &field() const { return spec_.field; }
  const Quiver &quiver() const { return spec_.quiver; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path> &basis() const { return basis_; }

  /// Index of the trivial path e_v in the basis.
  std::size_t idempotent(std::size_t v) const { return idempotent_[v]; }

  /// Basis indices of the paths starting (resp. ending) at v, in basis order.
  const std::vector<std::size_t> &paths_from(std::size_t v) const {
    return from_[v];
  }
  const std::vector<std::size_t> &paths_into(std::size_t v) const {
    return into_[v];
  }

  /// Normal form of an arbitrary path: a combination of basis paths.
  SparseVec normal_form(const Path &p) const;

  const SparseVec &product(std::size_t b1, std::size_t b2) const {
    return mult_[b1 * basis_.size() + b2];
  }

  /// Product of dense coefficient vectors indexed by the basis.
  std::vector<PrimeField::Elem>
  multiply(const std::vector<PrimeField::Elem> &x,
           const std::vector<PrimeField::Elem> &y) const;

  std::string path_name(const Path &p) const;

  friend std::shared_ptr<const FDAlgebra> build_algebra(AlgebraSpec spec);

private:
  FDAlgebra() = default;

  AlgebraSpec spec_;
  std::vector<Path> basis_;
  std::vector<std::size_t> idempotent_;
  std::vector<std::vector<std::size_t>> from_, into_;
  std::map<std::vector<std::size_t>, std::size_t> basis_index_; // nontrivial
  std::map<std::vector<std::size_t>, SparseVec> reductions_;
  std::vector<SparseVec> mult_;
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

AlgebraPtr build_algebra(AlgebraSpec spec);

/// Linear quiver 1 -> 2 -> ... -> n with a loop at n, modulo all paths of
/// length two.
AlgebraPtr paper_example_algebra(std::size_t n, std::uint32_t p);

/// Cyclic quiver on n vertices modulo all paths of length m.
AlgebraPtr nakayama_cyclic_algebra(std::size_t n, std::size_t m,
                                   std::uint32_t p);

/// k[x]/(x^m).
AlgebraPtr truncated_polynomial_algebra(std::size_t m, std::uint32_t p);

/// Path algebra of the linearly oriented A_n quiver (no relations).
AlgebraPtr linear_path_algebra(std::size_t n, std::uint32_t p);

AlgebraPtr opposite_algebra(const FDAlgebra &a);

/// Whether b's quiver is a's quiver with all arrows reversed.
bool is_opposite_pair(const FDAlgebra &a, const FDAlgebra &b);

/// Every path of length < bound, in path_less order.
std::vector<Path> enumerate_paths(const Quiver &q, std::size_t bound);

} // namespace sylab

#endif
