#pragma once

// Limit invariants of towers of 2m-cycle algebras, and the isomorphism
// decision for the stationary matroid-type family
//
//   A(D_2m) -> A(D_2m) (x) M_{md} -> A(D_2m) (x) M_{(md)^2} -> ...
//
// whose every linking map has the constant signature (p, q, p, q, ...) with
// p + q = d, so K0 = d * (all-ones per parity block) and H_1 = [s] with
// s = m (p - q).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclealg/embed_algebra.hpp"

namespace cyclealg {

/// Prime factorisation of |n| (n != 0), ascending primes with multiplicity.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

/// Generalised integer: a formal product of primes with exponents in N or
/// infinity.
class SupernaturalNumber {
 public:
  struct Exponent {
    bool infinite = false;
    std::uint64_t value = 0;

    friend bool operator==(const Exponent&, const Exponent&) = default;
  };

  SupernaturalNumber() = default;

  static SupernaturalNumber from_integer(std::uint64_t n);
  /// n^infinity: every prime of n with exponent infinity.
  static SupernaturalNumber infinite_power(std::uint64_t n);

  const std::map<std::uint64_t, Exponent>& exponents() const noexcept { return exps_; }
  std::set<std::uint64_t> infinite_primes() const;

  /// e.g. "2^∞·3^∞"; "1" for the empty product.
  std::string to_string() const;

  friend SupernaturalNumber operator*(const SupernaturalNumber& a, const SupernaturalNumber& b);
  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

 private:
  std::map<std::uint64_t, Exponent> exps_;
};

/// The limit group lim (Z, x s): trivial for s = 0, Z for |s| = 1, otherwise
/// Z[1/p_1 ... p_r] over the primes of |s|.
class LocalizedGroup {
 public:
  enum class Kind { kTrivial, kIntegers, kLocalization };

  static LocalizedGroup trivial() { return LocalizedGroup(Kind::kTrivial, {}); }
  static LocalizedGroup integers() { return LocalizedGroup(Kind::kIntegers, {}); }
  /// Throws InvalidInputError on an empty prime set.
  static LocalizedGroup localization(std::set<std::uint64_t> primes);
  static LocalizedGroup from_multiplier(std::int64_t s);

  Kind kind() const noexcept { return kind_; }
  const std::set<std::uint64_t>& primes() const noexcept { return primes_; }

  /// "0", "Z" or "Z[1/6]".
  std::string to_string() const;
  std::string kind_name() const;

  /// Abstract group isomorphism.
  friend bool operator==(const LocalizedGroup&, const LocalizedGroup&) = default;

 private:
  LocalizedGroup(Kind kind, std::set<std::uint64_t> primes) : kind_(kind), primes_(std::move(primes)) {}

  Kind kind_;
  std::set<std::uint64_t> primes_;
};

/// The stationary tower with level multiplier d and homology multiplier s.
class StationaryMatroidTower {
 public:
  /// Throws InvalidIndexError for m < 3 and InvalidInputError unless d >= 1
  /// and s lies in enumerate_S(m, d).
  StationaryMatroidTower(int m, std::int64_t d, std::int64_t s);

  CycleIndex cycle() const noexcept { return m_; }
  int m() const noexcept { return m_.m(); }
  std::int64_t d() const noexcept { return d_; }
  std::int64_t s() const noexcept { return s_; }
  /// md: the size of each level step.
  std::int64_t level_multiplier() const { return static_cast<std::int64_t>(m_.m()) * d_; }

  /// The realizing constant signature (p, q, p, q, ...).
  Signature linking_signature() const;

  friend bool operator==(const StationaryMatroidTower&, const StationaryMatroidTower&) = default;

 private:
  CycleIndex m_;
  std::int64_t d_;
  std::int64_t s_;
};

/// {-md, -md + 2m, ..., md}: d + 1 values.
std::vector<std::int64_t> enumerate_S(int m, std::int64_t d);

struct K0Limit {
  SupernaturalNumber supernatural;
  /// Two copies of the dimension group, one per parity class.
  int copies = 2;
  std::string order_unit = "1⊕1";
  std::string description;
};

K0Limit k0_limit(const StationaryMatroidTower& t);
LocalizedGroup h1_limit(const StationaryMatroidTower& t);
bool is_extreme(const StationaryMatroidTower& t);
bool is_homologically_limited(const StationaryMatroidTower& t);

/// The homology coordinate k at level t of the tower (level 0 is A(D_2m)).
/// Pushing one level forward multiplies by s, so in the extreme case the
/// element is k / (md)^t up to sign. The K0 coordinates are fixed at the
/// unital value 1/m per parity class.
struct LimitScaleQuery {
  std::int64_t k;
  std::int64_t t;
};

struct ScaleMembership {
  bool contains = false;
  /// Why a query fails or which rule accepted it.
  std::string reason;
  /// Eventual period of the residue pair (s^r mod 2m, (md)^(t+r) mod 2m).
  int preperiod = 0;
  int period = 0;
  /// A level and H_1 numerator at that level realised by a unital rigid
  /// embedding (decimal string: numerators can exceed 64 bits).
  std::optional<std::int64_t> certificate_level;
  std::optional<std::string> certificate_numerator;
};

/// Membership of (1/m, 1/m, h) in the unital joint scale of the limit.
ScaleMembership unital_joint_scale_contains(const StationaryMatroidTower& t, const LimitScaleQuery& q);

struct IsomorphismVerdict {
  enum class Witness { kNone, kK0Supernatural, kH1Group, kJointScaleBoundedness };

  bool isomorphic = false;
  Witness witness = Witness::kNone;
  std::string detail;
  /// Set when the verdict relies on a claim stated without proof for
  /// homologically limited systems.
  bool stated_without_proof = false;
  /// Set when the towers differ in d and the verdict is a consequence of the
  /// invariants being complete.
  bool derived_from_theorem = false;

  static std::string witness_name(Witness w);
};

/// Throws IncompatibleError when the cycle lengths differ.
IsomorphismVerdict decide_isomorphism(const StationaryMatroidTower& t1, const StationaryMatroidTower& t2);

/// Explicit finite tower prefix: shapes[0] -> shapes[1] -> ... with one
/// signature per consecutive pair.
struct ExplicitTower {
  CycleIndex m;
  std::vector<CycleAlgebraShape> shapes;
  std::vector<Signature> embeddings;
};

/// The first `levels` levels of a stationary tower.
ExplicitTower truncate(const StationaryMatroidTower& t, int levels);

struct UnitalScaleSummary {
  bool exists = false;
  bool enumerated = false;
  std::size_t elements = 0;
  std::vector<std::int64_t> h_parts;
};

struct LevelReport {
  std::size_t level = 0;  // 1-based
  CycleAlgebraShape shape;
  /// Composite of the linking maps from level 1; absent at level 1.
  std::optional<Signature> composite;
  std::optional<K0Matrix> k0;
  std::optional<std::int64_t> h;
  std::vector<std::int64_t> homology_range;
  UnitalScaleSummary unital_joint_scale;
};

/// Throws InvalidTowerError naming the first level whose capacity fails.
std::vector<LevelReport> finite_level_invariants(const ExplicitTower& tower, const JointScaleLimits& limits = {});

}  // namespace cyclealg
