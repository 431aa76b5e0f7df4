#pragma once

// Independent reference computations used to cross-check the library. They
// work from vertex permutations and plain enumeration only.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "cyclealg/embed_algebra.hpp"
#include "cyclealg/limits.hpp"

namespace oracle {

using cyclealg::CycleAlgebraShape;
using cyclealg::CycleIndex;
using cyclealg::DihedralElement;
using cyclealg::Signature;

/// Images of vertices 1..2m under theta_label, straight from the formulas
/// theta_{2k-1} = shift by -2(k-1), theta_{2k} = (v -> 2 - v) o theta_{2k-1}.
inline std::vector<int> theta_permutation(int m, int label) {
  const int n = 2 * m;
  auto wrap = [n](int v) { return ((v - 1) % n + n) % n + 1; };
  const int k = (label + 1) / 2;
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    int w = wrap(v - 2 * (k - 1));
    if (label % 2 == 0) w = wrap(2 - w);
    out.push_back(w);
  }
  return out;
}

/// Label of the automorphism with the given vertex images, or 0.
inline int label_of(int m, const std::vector<int>& images) {
  for (int label = 1; label <= 2 * m; ++label) {
    if (theta_permutation(m, label) == images) return label;
  }
  return 0;
}

/// Label of theta_a o theta_b by composing permutations.
inline int compose_labels(int m, int a, int b) {
  const auto pa = theta_permutation(m, a);
  const auto pb = theta_permutation(m, b);
  std::vector<int> c;
  for (int v = 1; v <= 2 * m; ++v) c.push_back(pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(v - 1)] - 1)]);
  return label_of(m, c);
}

/// K0 counts in vertex-label order: out[w-1][v-1] = sum of r_theta with theta(v) = w.
inline std::vector<std::vector<std::int64_t>> k0_by_label(int m, const std::vector<std::int64_t>& r) {
  const int n = 2 * m;
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int label = 1; label <= n; ++label) {
    const auto p = theta_permutation(m, label);
    for (int v = 1; v <= n; ++v) out[static_cast<std::size_t>(p[static_cast<std::size_t>(v - 1)] - 1)][static_cast<std::size_t>(v - 1)] += r[static_cast<std::size_t>(label - 1)];
  }
  return out;
}

/// Rearranges a vertex-label-order matrix into odd-then-even order.
inline std::vector<std::vector<std::int64_t>> to_k0_order(const std::vector<std::vector<std::int64_t>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> order;
  for (int v = 1; v <= n; v += 2) order.push_back(v);
  for (int v = 2; v <= n; v += 2) order.push_back(v);
  std::vector<std::vector<std::int64_t>> out(a.size(), std::vector<std::int64_t>(a.size()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(order[static_cast<std::size_t>(i)] - 1)][static_cast<std::size_t>(order[static_cast<std::size_t>(j)] - 1)];
  }
  return out;
}

/// K0 image of e_11 + e_22 in odd-then-even order.
inline std::vector<std::int64_t> k0_part(int m, const std::vector<std::int64_t>& r) {
  const auto a = k0_by_label(m, r);
  std::vector<std::int64_t> out;
  for (int start : {1, 2}) {
    for (int w = start; w <= 2 * m; w += 2) out.push_back(a[static_cast<std::size_t>(w - 1)][0] + a[static_cast<std::size_t>(w - 1)][1]);
  }
  return out;
}

inline std::int64_t alternating_sum(const std::vector<std::int64_t>& r) {
  std::int64_t h = 0;
  for (std::size_t i = 0; i < r.size(); ++i) h += (i % 2 == 0 ? 1 : -1) * r[i];
  return h;
}

/// Group-ring product by brute force: outer o inner.
inline std::vector<std::int64_t> convolve(int m, const std::vector<std::int64_t>& inner,
                                          const std::vector<std::int64_t>& outer) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(2 * m), 0);
  for (int a = 1; a <= 2 * m; ++a) {
    for (int b = 1; b <= 2 * m; ++b) {
      out[static_cast<std::size_t>(compose_labels(m, a, b) - 1)] += outer[static_cast<std::size_t>(a - 1)] * inner[static_cast<std::size_t>(b - 1)];
    }
  }
  return out;
}

/// Calls f on every vector of length n with entries 0..bound.
template <class F>
void for_each_box(int n, std::int64_t bound, F&& f) {
  std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
  while (true) {
    f(r);
    int i = 0;
    while (i < n && r[static_cast<std::size_t>(i)] == bound) r[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
    ++r[static_cast<std::size_t>(i)];
  }
}

/// Calls f on every vector of length n with nonnegative entries summing to total.
template <class F>
void for_each_composition(int n, std::int64_t total, F&& f) {
  std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos == n - 1) {
      r[static_cast<std::size_t>(pos)] = left;
      f(r);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      r[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, total);
}

/// Brute-force K0 fibres: K0 matrix (vertex-label order) -> sorted H1 values,
/// over every signature with entries 0..bound.
inline std::map<std::vector<std::vector<std::int64_t>>, std::vector<std::int64_t>> fibre_table(int m,
                                                                                              std::int64_t bound) {
  std::map<std::vector<std::vector<std::int64_t>>, std::vector<std::int64_t>> table;
  for_each_box(2 * m, bound, [&](const std::vector<std::int64_t>& r) {
    table[k0_by_label(m, r)].push_back(alternating_sum(r));
  });
  for (auto& [k, v] : table) std::sort(v.begin(), v.end());
  return table;
}

/// H1 values of unital rigid embeddings of A(D_2m) into the algebra with all
/// vertex multiplicities n: each of the n summands is a rotation (+1) or a
/// reflection (-1). flags[h + n] marks attained values.
inline std::vector<bool> unital_h_values(std::int64_t n) {
  std::vector<bool> flags(static_cast<std::size_t>(2 * n + 1), false);
  for (std::int64_t rotations = 0; rotations <= n; ++rotations) {
    flags[static_cast<std::size_t>(rotations - (n - rotations) + n)] = true;
  }
  return flags;
}

/// Limit membership of the homology coordinate k at query level t, by
/// scanning levels t, t+1, ... of the tower: the element is present when some
/// later image k * s^(L - t) is the H1 part of a unital rigid embedding into
/// the level-L algebra (all multiplicities (md)^L). Level H1 sets come from
/// joint_scale_finite where it is within its limits, otherwise from
/// unital_h_values.
class ScaleOracle {
 public:
  explicit ScaleOracle(const cyclealg::StationaryMatroidTower& t, std::int64_t max_size = 5'000'000)
      : tower_(t) {
    std::int64_t n = 1;
    sizes_.push_back(n);
    while (n <= max_size / t.level_multiplier()) {
      n *= t.level_multiplier();
      sizes_.push_back(n);
    }
    sets_.resize(sizes_.size());
    from_enumeration_.resize(sizes_.size(), false);
  }

  int max_level() const { return static_cast<int>(sizes_.size()) - 1; }

  /// Attained H1 values at level L >= 0; flags[h + N].
  const std::vector<bool>& level_set(int level) {
    auto& slot = sets_[static_cast<std::size_t>(level)];
    if (!slot.empty()) return slot;
    const auto n = sizes_[static_cast<std::size_t>(level)];
    const auto shape = CycleAlgebraShape::uniform(tower_.cycle(), n);
    if (joint_scale_count(shape, true) <= cyclealg::JointScaleLimits{}.max_elements) {
      slot.assign(static_cast<std::size_t>(2 * n + 1), false);
      for (const auto& e : cyclealg::joint_scale_finite(shape, true)) slot[static_cast<std::size_t>(e.h + n)] = true;
      from_enumeration_[static_cast<std::size_t>(level)] = true;
    } else {
      slot = unital_h_values(n);
    }
    return slot;
  }

  bool enumerated(int level) {
    level_set(level);
    return from_enumeration_[static_cast<std::size_t>(level)];
  }

  /// First level at which the element appears, if any level up to
  /// max_level() has it.
  std::optional<int> first_level(std::int64_t k, int t) {
    __int128 kk = k;
    for (int level = t; level <= max_level(); ++level) {
      const auto n = sizes_[static_cast<std::size_t>(level)];
      if (kk >= -n && kk <= n && level_set(level)[static_cast<std::size_t>(kk + n)]) return level;
      kk *= tower_.s();
      if (kk > (__int128{1} << 100) || kk < -(__int128{1} << 100)) kk = (__int128{1} << 100);
    }
    return std::nullopt;
  }

  std::int64_t size(int level) const { return sizes_[static_cast<std::size_t>(level)]; }

 private:
  cyclealg::StationaryMatroidTower tower_;
  std::vector<std::int64_t> sizes_;
  std::vector<std::vector<bool>> sets_;
  std::vector<bool> from_enumeration_;
};

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  std::vector<std::int64_t> entries(int n, std::int64_t bound) {
    std::vector<std::int64_t> r;
    for (int i = 0; i < n; ++i) r.push_back(uniform(0, bound));
    return r;
  }

  Signature signature(int m, std::int64_t bound) { return Signature(CycleIndex(m), entries(2 * m, bound)); }

  Signature nonzero_signature(int m, std::int64_t bound) {
    while (true) {
      auto s = signature(m, bound);
      if (!s.is_zero()) return s;
    }
  }

  DihedralElement element(int m) {
    return DihedralElement::from_paper_index(CycleIndex(m), static_cast<int>(uniform(1, 2 * m)));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
