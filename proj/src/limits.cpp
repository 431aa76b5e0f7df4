#include "cyclealg/limits.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "cyclealg/checked.hpp"
#include "cyclealg/errors.hpp"

namespace cyclealg {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t abs_u64(std::int64_t x) {
  return x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
}

std::string join_primes(const std::set<std::uint64_t>& primes) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto p : primes) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  if (n == 0) throw InvalidInputError("cannot factorize 0");
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// ---------------------------------------------------------- supernatural

SupernaturalNumber SupernaturalNumber::from_integer(std::uint64_t n) {
  SupernaturalNumber out;
  for (auto [p, e] : factorize(n)) out.exps_[p] = Exponent{false, e};
  return out;
}

SupernaturalNumber SupernaturalNumber::infinite_power(std::uint64_t n) {
  SupernaturalNumber out;
  for (auto [p, e] : factorize(n)) out.exps_[p] = Exponent{true, 0};
  return out;
}

std::set<std::uint64_t> SupernaturalNumber::infinite_primes() const {
  std::set<std::uint64_t> out;
  for (const auto& [p, e] : exps_) {
    if (e.infinite) out.insert(p);
  }
  return out;
}

std::string SupernaturalNumber::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : exps_) {
    os << (first ? "" : "·") << p;
    if (e.infinite) {
      os << "^∞";
    } else if (e.value != 1) {
      os << '^' << e.value;
    }
    first = false;
  }
  return os.str();
}

SupernaturalNumber operator*(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  SupernaturalNumber out = a;
  for (const auto& [p, e] : b.exps_) {
    auto& slot = out.exps_[p];
    if (slot.infinite || e.infinite) {
      slot = {true, 0};
    } else {
      slot.value += e.value;
    }
  }
  return out;
}

// ---------------------------------------------------------- localized group

LocalizedGroup LocalizedGroup::localization(std::set<std::uint64_t> primes) {
  if (primes.empty()) throw InvalidInputError("a localization needs at least one prime");
  return LocalizedGroup(Kind::kLocalization, std::move(primes));
}

LocalizedGroup LocalizedGroup::from_multiplier(std::int64_t s) {
  if (s == 0) return trivial();
  const std::uint64_t a = abs_u64(s);
  if (a == 1) return integers();
  std::set<std::uint64_t> primes;
  for (auto [p, e] : factorize(a)) primes.insert(p);
  return localization(std::move(primes));
}

std::string LocalizedGroup::to_string() const {
  switch (kind_) {
    case Kind::kTrivial:
      return "0";
    case Kind::kIntegers:
      return "Z";
    case Kind::kLocalization: {
      std::uint64_t radical = 1;
      for (auto p : primes_) radical *= p;
      return "Z[1/" + std::to_string(radical) + "]";
    }
  }
  return "?";
}

std::string LocalizedGroup::kind_name() const {
  switch (kind_) {
    case Kind::kTrivial:
      return "trivial";
    case Kind::kIntegers:
      return "integers";
    case Kind::kLocalization:
      return "localization";
  }
  return "?";
}

// ---------------------------------------------------------- tower

StationaryMatroidTower::StationaryMatroidTower(int m, std::int64_t d, std::int64_t s) : m_(m), d_(d), s_(s) {
  m_.require_rigid();
  if (d < 1) throw InvalidInputError("level multiplier d must be >= 1, got " + std::to_string(d));
  const auto S = enumerate_S(m, d);
  if (!std::binary_search(S.begin(), S.end(), s)) {
    throw InvalidInputError("s = " + std::to_string(s) + " is not in the homology range {-" +
                            std::to_string(level_multiplier()) + ", ..., " + std::to_string(level_multiplier()) +
                            "} (step " + std::to_string(2 * m) + ")");
  }
}

Signature StationaryMatroidTower::linking_signature() const {
  // p + q = d, m (p - q) = s
  const std::int64_t diff = s_ / m_.m();
  return Signature::alternating(m_, (d_ + diff) / 2, (d_ - diff) / 2);
}

std::vector<std::int64_t> enumerate_S(int m, std::int64_t d) {
  const CycleIndex idx(m);
  idx.require_rigid();
  if (d < 1) throw InvalidInputError("level multiplier d must be >= 1, got " + std::to_string(d));
  const std::int64_t md = checked::mul(m, d);
  std::vector<std::int64_t> out;
  for (std::int64_t s = -md; s <= md; s += 2 * m) out.push_back(s);
  return out;
}

K0Limit k0_limit(const StationaryMatroidTower& t) {
  K0Limit out;
  out.supernatural = SupernaturalNumber::infinite_power(static_cast<std::uint64_t>(t.level_multiplier()));
  out.description = "pair of dimension groups of " + out.supernatural.to_string() +
                    " indexed by the two parity classes, order unit " + out.order_unit;
  return out;
}

LocalizedGroup h1_limit(const StationaryMatroidTower& t) { return LocalizedGroup::from_multiplier(t.s()); }

bool is_extreme(const StationaryMatroidTower& t) { return abs_u64(t.s()) == abs_u64(t.level_multiplier()); }

bool is_homologically_limited(const StationaryMatroidTower& t) { return !is_extreme(t) && t.s() != 0; }

// ---------------------------------------------------------- joint scale

ScaleMembership unital_joint_scale_contains(const StationaryMatroidTower& t, const LimitScaleQuery& q) {
  if (q.t < 1) throw InvalidInputError("scale query exponent t must be >= 1, got " + std::to_string(q.t));
  ScaleMembership out;
  const std::int64_t two_m = 2 * t.m();
  const std::int64_t md = t.level_multiplier();
  const std::int64_t s = t.s();

  if (s == 0) {
    // H_1 is trivial: one level later the query is the zero element, which
    // unital rigid embeddings produce (md is even when s = 0).
    out.contains = true;
    out.reason = "H1 is trivial; the homology coordinate is 0";
    out.certificate_level = q.t + 1;
    out.certificate_numerator = "0";
    return out;
  }

  const bool extreme = is_extreme(t);
  const BigInt k = q.k;
  const BigInt level_size = boost::multiprecision::pow(BigInt(md), static_cast<unsigned>(q.t));
  if (extreme && boost::multiprecision::abs(k) > level_size) {
    out.reason = "extreme tower: |k| = " + BigInt(boost::multiprecision::abs(k)).str() + " exceeds (md)^t = " +
                 level_size.str();
    return out;
  }

  // Congruence k s^r = (md)^(t+r) mod 2m for some r >= 0. The residue pair
  // (s^r, (md)^(t+r)) mod 2m is eventually periodic, so scanning one
  // preperiod plus one period is exhaustive.
  const std::int64_t k_res = checked::mod(q.k, two_m);
  std::int64_t x = 1 % two_m;
  std::int64_t y = static_cast<std::int64_t>(boost::multiprecision::powm(BigInt(md), BigInt(q.t), BigInt(two_m)));
  std::map<std::pair<std::int64_t, std::int64_t>, int> seen;
  std::vector<bool> congruent;
  for (int r = 0;; ++r) {
    auto [it, fresh] = seen.emplace(std::make_pair(x, y), r);
    if (!fresh) {
      out.preperiod = it->second;
      out.period = r - it->second;
      break;
    }
    congruent.push_back(checked::mod(k_res * x, two_m) == y);
    x = checked::mod(x * checked::mod(s, two_m), two_m);
    y = checked::mod(y * checked::mod(md, two_m), two_m);
  }
  assert(out.period >= 1);
  assert(static_cast<int>(congruent.size()) == out.preperiod + out.period);

  const auto first = std::find(congruent.begin(), congruent.end(), true);
  if (first == congruent.end()) {
    out.reason = "no rescaling satisfies k s^r = (md)^(t+r) mod " + std::to_string(two_m) +
                 " (residues periodic after " + std::to_string(out.preperiod) + " steps with period " +
                 std::to_string(out.period) + ")";
    return out;
  }
  out.contains = true;
  out.reason = extreme ? "extreme tower: congruence holds and |k| <= (md)^t"
                       : "nonextreme tower: only the congruence restriction applies";

  // Certificate: the least r with the congruence and |k s^r| <= (md)^(t+r),
  // the level bound for a unital signature. For extreme towers the bound is
  // r-invariant; otherwise |s| < md makes it eventually true, and beyond the
  // preperiod the congruence recurs with the detected period.
  auto congruent_at = [&](int r) {
    if (r < out.preperiod) return static_cast<bool>(congruent[static_cast<std::size_t>(r)]);
    return static_cast<bool>(
        congruent[static_cast<std::size_t>(out.preperiod + (r - out.preperiod) % out.period)]);
  };
  BigInt numerator = k;
  BigInt bound = level_size;
  constexpr int kSearchLimit = 100000;
  for (int r = 0; r < kSearchLimit; ++r) {
    if (congruent_at(r) && boost::multiprecision::abs(numerator) <= bound) {
      out.certificate_level = q.t + r;
      out.certificate_numerator = numerator.str();
      break;
    }
    numerator *= s;
    bound *= md;
  }
  return out;
}

// ---------------------------------------------------------- isomorphism

std::string IsomorphismVerdict::witness_name(Witness w) {
  switch (w) {
    case Witness::kNone:
      return "none";
    case Witness::kK0Supernatural:
      return "K0 supernatural data";
    case Witness::kH1Group:
      return "H1 group";
    case Witness::kJointScaleBoundedness:
      return "joint-scale boundedness";
  }
  return "?";
}

IsomorphismVerdict decide_isomorphism(const StationaryMatroidTower& t1, const StationaryMatroidTower& t2) {
  if (t1.m() != t2.m()) {
    throw IncompatibleError("cannot compare towers of " + std::to_string(2 * t1.m()) + "-cycle and " +
                            std::to_string(2 * t2.m()) + "-cycle algebras: the classification fixes the cycle length");
  }
  IsomorphismVerdict v;
  const auto k1 = k0_limit(t1).supernatural;
  const auto k2 = k0_limit(t2).supernatural;
  if (k1 != k2) {
    v.witness = IsomorphismVerdict::Witness::kK0Supernatural;
    v.detail = "K0 supernatural numbers differ: " + k1.to_string() + " vs " + k2.to_string();
    return v;
  }
  const auto g1 = h1_limit(t1);
  const auto g2 = h1_limit(t2);
  if (g1 != g2) {
    v.witness = IsomorphismVerdict::Witness::kH1Group;
    v.detail = "H1 groups differ: " + g1.to_string() + " (primes " + join_primes(g1.primes()) + ") vs " +
               g2.to_string() + " (primes " + join_primes(g2.primes()) + ")";
    return v;
  }
  const bool e1 = is_extreme(t1);
  const bool e2 = is_extreme(t2);
  if (e1 != e2) {
    v.witness = IsomorphismVerdict::Witness::kJointScaleBoundedness;
    v.detail = std::string("homology part of the unital joint scale is a finite symmetric interval for the ") +
               (e1 ? "first" : "second") + " tower but exhausts H1 for the " + (e1 ? "second" : "first");
    return v;
  }
  v.isomorphic = true;
  v.derived_from_theorem = t1.d() != t2.d();
  if (g1.kind() == LocalizedGroup::Kind::kTrivial) {
    v.detail = "s = 0 on both sides: H1 trivial, joint scale reduces to the K0 scale, K0 data agree";
  } else if (e1) {
    v.detail = "extreme towers with equal K0 and H1 data: unital joint scales coincide";
  } else {
    v.detail = "nonextreme towers with equal K0 data and H1 prime sets: unital joint scales coincide";
    v.stated_without_proof = true;
  }
  return v;
}

// ---------------------------------------------------------- finite levels

ExplicitTower truncate(const StationaryMatroidTower& t, int levels) {
  if (levels < 1) throw InvalidInputError("a truncated tower needs at least one level");
  ExplicitTower out{t.cycle(), {}, {}};
  std::int64_t mult = 1;
  for (int i = 0; i < levels; ++i) {
    out.shapes.push_back(CycleAlgebraShape::uniform(t.cycle(), mult));
    if (i + 1 < levels) {
      out.embeddings.push_back(t.linking_signature());
      mult = checked::mul(mult, t.level_multiplier());
    }
  }
  return out;
}

std::vector<LevelReport> finite_level_invariants(const ExplicitTower& tower, const JointScaleLimits& limits) {
  if (tower.shapes.empty()) throw InvalidTowerError(0, "explicit tower has no levels");
  if (tower.embeddings.size() + 1 != tower.shapes.size()) {
    throw InvalidTowerError(0, "explicit tower with " + std::to_string(tower.shapes.size()) + " levels needs " +
                                   std::to_string(tower.shapes.size() - 1) + " embeddings, got " +
                                   std::to_string(tower.embeddings.size()));
  }
  for (std::size_t i = 0; i < tower.shapes.size(); ++i) {
    if (tower.shapes[i].cycle() != tower.m) {
      throw InvalidTowerError(i + 1, "level " + std::to_string(i + 1) + " has the wrong cycle length");
    }
  }
  for (std::size_t i = 0; i < tower.embeddings.size(); ++i) {
    const auto& s = tower.embeddings[i];
    if (s.cycle() != tower.m) {
      throw InvalidTowerError(i + 2, "embedding into level " + std::to_string(i + 2) + " has the wrong cycle length");
    }
    if (s.is_zero()) {
      throw InvalidTowerError(i + 2, "embedding into level " + std::to_string(i + 2) + " has the zero signature");
    }
    if (!fits_capacity(s, tower.shapes[i], tower.shapes[i + 1])) {
      throw InvalidTowerError(i + 2, "capacity violated at level " + std::to_string(i + 2) + ": signature " +
                                         s.to_string() + " does not fit the target vertex multiplicities");
    }
  }

  std::vector<LevelReport> out;
  std::optional<Signature> composite;
  for (std::size_t i = 0; i < tower.shapes.size(); ++i) {
    if (i > 0) {
      composite = composite ? signature_compose(*composite, tower.embeddings[i - 1]) : tower.embeddings[i - 1];
    }
    LevelReport rep{i + 1, tower.shapes[i], composite, std::nullopt, std::nullopt, {}, {}};
    if (composite) {
      rep.k0 = k0_matrix(*composite);
      rep.h = h1(*composite);
      rep.homology_range = homology_range(*composite);
    }
    const auto& shape = tower.shapes[i];
    rep.unital_joint_scale.exists = shape.is_uniform();
    if (tower.m.m() >= 3 && rep.unital_joint_scale.exists) {
      try {
        const auto elems = joint_scale_finite(shape, true, limits);
        std::set<std::int64_t> hs;
        for (const auto& e : elems) hs.insert(e.h);
        rep.unital_joint_scale.enumerated = true;
        rep.unital_joint_scale.elements = elems.size();
        rep.unital_joint_scale.h_parts.assign(hs.begin(), hs.end());
      } catch (const CapacityError&) {
        rep.unital_joint_scale.enumerated = false;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace cyclealg
