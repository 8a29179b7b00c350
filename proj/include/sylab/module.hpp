#ifndef SYLAB_MODULE_HPP
#define SYLAB_MODULE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sylab/algebra.hpp"
#include "sylab/linalg.hpp"

namespace sylab {

/// A finitely generated right module, stored as a quiver representation: one
/// vector space per vertex and, per arrow a: i -> j, a dims[j] x dims[i]
/// matrix acting on column vectors. A path "a then b" acts as M_b * M_a.
class Representation {
public:
  Representation() = default;
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                 std::vector<FMatrix> maps);

  static Representation zero(AlgebraPtr algebra);
  static Representation simple(AlgebraPtr algebra, std::size_t vertex);

  const AlgebraPtr &algebra() const { return algebra_; }
  const PrimeField &field() const { return algebra_->field(); }
  const std::vector<std::size_t> &dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const std::vector<FMatrix> &maps() const { return maps_; }
  const FMatrix &map(std::size_t arrow) const { return maps_[arrow]; }

  /// Composite action of a path, dims[target] x dims[source].
  FMatrix path_action(const Path &p) const;

  /// Empty on success, otherwise a description of the first violated
  /// relation.
  std::optional<std::string> validate() const;

  bool operator==(const Representation &o) const {
    return algebra_ == o.algebra_ && dims_ == o.dims_ && maps_ == o.maps_;
  }

private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<FMatrix> maps_;
};

class Morphism {
public:
  Morphism() = default;
  Morphism(Representation source, Representation target,
           std::vector<FMatrix> maps);

  static Morphism identity(const Representation &m);
  static Morphism zero(const Representation &source,
                       const Representation &target);

  const Representation &source() const { return source_; }
  const Representation &target() const { return target_; }
  const std::vector<FMatrix> &maps() const { return maps_; }
  const FMatrix &at(std::size_t v) const { return maps_[v]; }

  bool intertwines() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  bool is_zero() const;

  /// this after `first`.
  Morphism after(const Morphism &first) const;
  Morphism operator+(const Morphism &o) const;
  Morphism scaled(PrimeField::Elem s) const;

  /// Total-space matrix (block diagonal by vertex).
  FMatrix total_matrix() const;

private:
  Representation source_, target_;
  std::vector<FMatrix> maps_;
};

struct SubmoduleResult {
  Representation module;
  Morphism inclusion;
};

struct QuotientResult {
  Representation module;
  Morphism projection;
};

struct DirectSum {
  Representation module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

struct ShortExactSequence {
  Morphism mono; // A -> B
  Morphism epi;  // B -> C

  const Representation &left() const { return mono.source(); }
  const Representation &middle() const { return mono.target(); }
  const Representation &right() const { return epi.target(); }

  /// Mono injective, epi surjective, image = kernel at every vertex.
  bool is_exact() const;
};

struct ProjectiveCover {
  Representation projective;
  Morphism cover;
  /// Vertex of each indecomposable summand P(v), in summand order.
  std::vector<std::size_t> summand_vertices;
};

/// Per-vertex column bases describing a subspace of each M_v.
using Subspaces = std::vector<FMatrix>;

/// The submodule carried by the given subspaces (they must be closed under
/// the arrow maps).
SubmoduleResult submodule(const Representation &m, const Subspaces &spaces);
QuotientResult quotient(const Representation &m, const Subspaces &spaces);

Representation projective(const AlgebraPtr &a, std::size_t vertex);
Representation injective(const AlgebraPtr &a, std::size_t vertex);

/// Vector-space dual; lives over `opposite`, which must carry the reversed
/// quiver of m's algebra.
Representation dual(const Representation &m, const AlgebraPtr &opposite);
Representation dual(const Representation &m);

std::vector<Morphism> hom_basis(const Representation &m,
                                const Representation &n);

DirectSum direct_sum(const std::vector<Representation> &ms,
                     const AlgebraPtr &algebra);
DirectSum direct_sum(const std::vector<Representation> &ms);
Representation power(const Representation &m, std::size_t k);

SubmoduleResult kernel(const Morphism &f);
SubmoduleResult image(const Morphism &f);
QuotientResult cokernel(const Morphism &f);

SubmoduleResult radical(const Representation &m);
QuotientResult top(const Representation &m);
SubmoduleResult socle(const Representation &m);

/// Dimension vector of top(m), without building the quotient.
std::vector<std::size_t> top_dims(const Representation &m);
std::vector<std::size_t> socle_dims(const Representation &m);

/// Morphism from P(v_1) + ... + P(v_k) to m sending the generator e_{v_i} of
/// the i-th summand to the given column vector in m_{v_i}.
Morphism morphism_from_projectives(
    const Representation &m,
    const std::vector<std::pair<std::size_t, FMatrix>> &generators);

ProjectiveCover projective_cover(const Representation &m);

/// Kernel of the projective cover.
Representation syzygy(const Representation &m);
Representation syzygy(const Representation &m, std::size_t times);

bool is_projective(const Representation &m);

/// Copy of m under a random vertexwise change of basis.
Representation random_base_change(const Representation &m, Rng &rng);

/// Cokernel of a random map between random sums of indecomposable
/// projectives; the target sum has total dimension at most `budget`.
Representation random_presentation_module(const AlgebraPtr &a,
                                          std::size_t budget, Rng &rng);

ShortExactSequence ses_from_submodule(const SubmoduleResult &a);
ShortExactSequence random_ses(const AlgebraPtr &a, std::size_t budget,
                              Rng &rng);

} // namespace sylab

#endif
