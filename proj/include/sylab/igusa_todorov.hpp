#ifndef SYLAB_IGUSA_TODOROV_HPP
#define SYLAB_IGUSA_TODOROV_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sylab/decompose.hpp"

namespace sylab {

/// Element of the Igusa-Todorov group K: registry id -> multiplicity.
/// Zero multiplicities are never stored.
using KVector = std::map<std::size_t, std::int64_t>;

struct SyzygyGraph {
  std::vector<std::size_t> nodes;           // in discovery order
  std::map<std::size_t, KVector> syzygies;  // [Omega X] for computed nodes
  std::vector<std::size_t> frontier;        // discovered, syzygy pending
  bool closed = false;

  std::size_t index_of(std::size_t id) const;
};

/// The group K over one algebra: interned classes plus a cache of the
/// syzygy map on them. Not thread-safe apart from the registry itself.
class KGroup {
public:
  explicit KGroup(AlgebraPtr algebra, DecomposeOptions options = {})
      : algebra_(algebra), registry_(algebra), options_(options) {}

  const AlgebraPtr &algebra() const { return algebra_; }
  Registry &registry() { return registry_; }
  const DecomposeOptions &options() const { return options_; }

  /// [M]: decomposes, drops projective summands, interns the rest.
  KVector class_of(const Representation &m);

  /// One unit vector per distinct indecomposable non-projective summand.
  std::vector<KVector> bracket_subgroup(const Representation &m);

  /// [Omega X] for an interned class (cached).
  const KVector &omega(std::size_t id);

  /// Breadth-first syzygy closure of the given classes; stops after `cap`
  /// classes have had their syzygy computed.
  SyzygyGraph syzygy_closure(const std::set<std::size_t> &ids,
                             std::size_t cap);

  /// Whether the last class_of/decompose call returned a probabilistic
  /// certificate somewhere.
  bool saw_probabilistic() const { return probabilistic_; }

private:
  AlgebraPtr algebra_;
  Registry registry_;
  DecomposeOptions options_;
  std::map<std::size_t, KVector> omega_;
  bool probabilistic_ = false;
};

/// Column j is [Omega X_j] in the node order of g.
ZMatrix omega_matrix(const SyzygyGraph &g);

struct PhiReport {
  std::size_t value = 0;
  std::vector<std::size_t> rank_sequence;
  bool exact = false;
  std::size_t classes_explored = 0;
  bool cap_hit = false;
};

struct PdResult {
  enum class Kind { Finite, Infinite, UnknownAtLeast };
  Kind kind = Kind::Finite;
  std::size_t value = 0; // the pd when Finite, the lower bound otherwise

  static PdResult finite(std::size_t v) { return {Kind::Finite, v}; }
  static PdResult infinite() { return {Kind::Infinite, 0}; }
  static PdResult at_least(std::size_t v) { return {Kind::UnknownAtLeast, v}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  std::string to_string() const;
  bool operator==(const PdResult &o) const = default;
};

struct PsiReport {
  std::size_t value = 0;
  PhiReport phi;
  /// Largest finite pd among summands of Omega^phi(M); 0 when none.
  std::size_t max_finite_pd = 0;
  bool exact = false;
};

inline constexpr std::size_t kDefaultCap = 200;

PhiReport phi(KGroup &k, const Representation &m,
              std::size_t cap = kDefaultCap);
PdResult pd(KGroup &k, const Representation &m, std::size_t cap = kDefaultCap);
/// pd of a single interned class.
PdResult pd_of_class(KGroup &k, std::size_t id, std::size_t cap = kDefaultCap);
PsiReport psi(KGroup &k, const Representation &m,
              std::size_t cap = kDefaultCap);

struct SampleOptions {
  std::size_t samples = 100;
  std::size_t budget = 8;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultCap;
  std::size_t max_simple_subset = 3;
};

/// Curated modules: simples, radicals and socles of indecomposable
/// projectives, direct sums of distinct simples up to the subset bound.
std::vector<Representation> curated_seeds(const AlgebraPtr &a,
                                          std::size_t max_simple_subset);

/// Curated seeds followed by `samples` random modules drawn from `seed`.
std::vector<Representation> sample_modules(const AlgebraPtr &a,
                                           const SampleOptions &opt);

struct PhidimSample {
  std::size_t value = 0;
  Representation witness;
  bool exact = true;
  std::size_t modules_evaluated = 0;
};

struct FindimSample {
  std::size_t value = 0;
  std::optional<Representation> witness;
  std::size_t finite_pd_modules = 0;
  std::size_t modules_evaluated = 0;
};

/// Lower bound for phidim: max phi over sample_modules.
PhidimSample phidim_sample(KGroup &k, const SampleOptions &opt);
/// Lower bound for the finitistic dimension: max finite pd over the same
/// modules.
FindimSample findim_sample(KGroup &k, const SampleOptions &opt);

struct ProjectiveDiagnostic {
  std::size_t vertex = 0;
  bool simple_socle = false;
  std::vector<std::size_t> socle_dims;
  std::optional<std::size_t> injective_match; // j with P(vertex) = I(j)
};

struct SelfInjectivity {
  bool self_injective = false;
  std::vector<std::size_t> nakayama_permutation; // when self-injective
  std::vector<ProjectiveDiagnostic> diagnostics;
  std::vector<std::size_t> non_injective_vertices;
};

SelfInjectivity self_injective(const AlgebraPtr &a);

struct Witness {
  std::string construction; // which construction produced it
  std::size_t vertex = 0;   // the projective it was built from
  Representation module;
  PhiReport phi;
};

/// Runs the socle-quotient and U + S constructions on every indecomposable
/// projective and returns the first module with exact phi >= 1.
std::optional<Witness> witness_search(KGroup &k, std::size_t cap = kDefaultCap);

} // namespace sylab

#endif
