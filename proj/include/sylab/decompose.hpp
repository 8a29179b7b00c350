#ifndef SYLAB_DECOMPOSE_HPP
#define SYLAB_DECOMPOSE_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "sylab/module.hpp"

namespace sylab {

struct FittingSplit {
  SubmoduleResult kernel_part; // ker u^d
  SubmoduleResult image_part;  // im u^d
};

/// M = ker(u^d) + im(u^d) for an endomorphism u; nullopt when one side is
/// zero.
std::optional<FittingSplit> fitting_split(const Representation &m,
                                          const Morphism &u);

enum class Certificate {
  Deterministic, // End is local, proven by linear algebra
  Probabilistic  // no splitting endomorphism found within the trial budget
};

struct Summand {
  Representation module;
  std::size_t multiplicity = 0;
  bool projective = false;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Indecomposable pieces grouped by summand; piece i is isomorphic to
  /// summands[piece_class[i]].module.
  std::vector<Representation> pieces;
  std::vector<std::size_t> piece_class;
  /// Isomorphism from the direct sum of `pieces` onto the input.
  Morphism witness;
  Certificate certificate = Certificate::Deterministic;

  std::size_t piece_count() const { return pieces.size(); }
};

struct DecomposeOptions {
  std::size_t trial_budget = 48;
  std::uint64_t seed = 0x5eed;
};

Decomposition decompose(const Representation &m,
                        const DecomposeOptions &options = {});

/// Isomorphism test for indecomposable modules.
bool is_isomorphic(const Representation &x, const Representation &y);

/// Isomorphism test for arbitrary modules (decompose, then match summands).
bool modules_isomorphic(const Representation &x, const Representation &y);

/// Multiset equality of summand classes with multiplicities.
bool same_summands(const Decomposition &a, const Decomposition &b);

/// Interned isomorphism classes of indecomposable non-projective modules.
/// Ids are assigned in interning order and never reused. Interning is
/// serialized by an internal lock.
class Registry {
public:
  explicit Registry(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  Registry(const Registry &) = delete;
  Registry &operator=(const Registry &) = delete;

  const AlgebraPtr &algebra() const { return algebra_; }

  /// Id of the class of an indecomposable m, interning it when new;
  /// nullopt when m is projective.
  std::optional<std::size_t> intern(const Representation &m);
  std::optional<std::size_t> find(const Representation &m) const;

  const Representation &representative(std::size_t id) const {
    return reps_.at(id);
  }
  std::size_t size() const { return reps_.size(); }

private:
  using Signature = std::vector<std::size_t>;
  static Signature signature(const Representation &m);
  std::optional<std::size_t> lookup(const Signature &sig,
                                    const Representation &m) const;

  AlgebraPtr algebra_;
  std::vector<Representation> reps_;
  std::map<Signature, std::vector<std::size_t>> buckets_;
  mutable std::mutex mutex_;
};

} // namespace sylab

#endif
