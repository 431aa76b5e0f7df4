#include "cyclealg/embed_algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "cyclealg/checked.hpp"
#include "cyclealg/errors.hpp"

namespace cyclealg {

namespace {

void require_same_cycle(CycleIndex a, CycleIndex b, const char* what) {
  if (a != b) {
    throw IncompatibleError(std::string(what) + ": operands live on D_" + std::to_string(a.vertex_count()) +
                            " and D_" + std::to_string(b.vertex_count()));
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

CycleIndex cycle_from_length(std::size_t n, const char* what) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidInputError(std::string(what) + " needs an even length >= 4, got " + std::to_string(n));
  }
  return CycleIndex(static_cast<int>(n / 2));
}

// The K0 fibre of M is {a_j = alpha_j - x, b_j = c_j + x : x in [lo, hi]}
// where a_j, b_j are the multiplicities of rotation j and reflection j.
struct Fibre {
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> c;
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }

  Signature at(CycleIndex m, std::int64_t x) const {
    std::vector<std::int64_t> r(static_cast<std::size_t>(m.vertex_count()));
    for (int j = 0; j < m.m(); ++j) {
      r[static_cast<std::size_t>(2 * j)] = checked::sub(alpha[static_cast<std::size_t>(j)], x);
      r[static_cast<std::size_t>(2 * j + 1)] = checked::add(c[static_cast<std::size_t>(j)], x);
    }
    return Signature(m, std::move(r));
  }

  // h1 at parameter x is h0 - 2m x.
  std::int64_t h0() const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) s = checked::add(s, checked::sub(alpha[j], c[j]));
    return s;
  }
};

// False when M is not in the integer span of the permutation matrices.
bool solve_fibre(const K0Matrix& M, Fibre& out) {
  const CycleIndex idx = M.cycle();
  const int m = idx.m();
  if (!M.is_parity_block_diagonal()) return false;

  out.alpha.assign(static_cast<std::size_t>(m), 0);
  out.c.assign(static_cast<std::size_t>(m), 0);
  // odd block:  M[o_w][o_v]         = a_{o_v - o_w} + b_{o_w + o_v}
  // even block: M[m + e_w][m + e_v] = a_{e_v - e_w} + b_{e_w + e_v + 1}
  for (int j = 0; j + 1 < m; ++j) {
    out.c[static_cast<std::size_t>(j + 1)] =
        checked::add(out.c[static_cast<std::size_t>(j)], checked::sub(M(m, m + j), M(0, j)));
  }
  if (checked::add(out.c[static_cast<std::size_t>(m - 1)], checked::sub(M(m, 2 * m - 1), M(0, m - 1))) != 0) {
    return false;
  }
  for (int j = 0; j < m; ++j) {
    out.alpha[static_cast<std::size_t>(j)] = checked::sub(M(0, j), out.c[static_cast<std::size_t>(j)]);
  }

  // The candidate at x = 0 may have negative entries, so rebuild it by hand
  // rather than through Signature.
  std::vector<std::int64_t> acc(static_cast<std::size_t>(4 * m * m), 0);
  const int n = 2 * m;
  for (int j = 0; j < m; ++j) {
    const DihedralElement rot(idx, DihedralKind::kRotation, j);
    const DihedralElement ref(idx, DihedralKind::kReflection, j);
    for (int v = 1; v <= n; ++v) {
      const auto col = static_cast<std::size_t>(k0_position(idx, v));
      acc[static_cast<std::size_t>(k0_position(idx, rot.act(v))) * static_cast<std::size_t>(n) + col] +=
          out.alpha[static_cast<std::size_t>(j)];
      acc[static_cast<std::size_t>(k0_position(idx, ref.act(v))) * static_cast<std::size_t>(n) + col] +=
          out.c[static_cast<std::size_t>(j)];
    }
  }
  if (acc != M.row_major()) return false;

  out.lo = std::numeric_limits<std::int64_t>::min();
  out.hi = std::numeric_limits<std::int64_t>::max();
  for (int j = 0; j < m; ++j) {
    out.hi = std::min(out.hi, out.alpha[static_cast<std::size_t>(j)]);
    out.lo = std::max(out.lo, -out.c[static_cast<std::size_t>(j)]);
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Signature

Signature::Signature(CycleIndex m, std::vector<std::int64_t> r) : m_(m), r_(std::move(r)) {
  if (r_.size() != static_cast<std::size_t>(m.vertex_count())) {
    throw InvalidInputError("signature for m = " + std::to_string(m.m()) + " needs " +
                            std::to_string(m.vertex_count()) + " entries, got " + std::to_string(r_.size()));
  }
  for (auto x : r_) {
    if (x < 0) throw InvalidInputError("signature entries must be nonnegative: " + join(r_));
  }
}

Signature Signature::from_entries(std::vector<std::int64_t> r) {
  const CycleIndex m = cycle_from_length(r.size(), "signature");
  return Signature(m, std::move(r));
}

Signature Signature::zero(CycleIndex m) {
  return Signature(m, std::vector<std::int64_t>(static_cast<std::size_t>(m.vertex_count()), 0));
}

Signature Signature::unit(const DihedralElement& theta) {
  Signature s = zero(theta.cycle());
  s.r_[static_cast<std::size_t>(theta.paper_index() - 1)] = 1;
  return s;
}

Signature Signature::alternating(CycleIndex m, std::int64_t p, std::int64_t q) {
  std::vector<std::int64_t> r;
  for (int j = 0; j < m.m(); ++j) {
    r.push_back(p);
    r.push_back(q);
  }
  return Signature(m, std::move(r));
}

std::int64_t Signature::at(const DihedralElement& theta) const {
  require_same_cycle(m_, theta.cycle(), "signature lookup");
  return r_[static_cast<std::size_t>(theta.paper_index() - 1)];
}

std::int64_t Signature::operator[](int paper_index) const {
  if (paper_index < 1 || paper_index > m_.vertex_count()) {
    throw InvalidIndexError("signature index " + std::to_string(paper_index) + " outside 1.." +
                            std::to_string(m_.vertex_count()));
  }
  return r_[static_cast<std::size_t>(paper_index - 1)];
}

std::int64_t Signature::total() const {
  std::int64_t s = 0;
  for (auto x : r_) s = checked::add(s, x);
  return s;
}

std::int64_t Signature::rotation_total() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < r_.size(); i += 2) s = checked::add(s, r_[i]);
  return s;
}

std::int64_t Signature::reflection_total() const {
  std::int64_t s = 0;
  for (std::size_t i = 1; i < r_.size(); i += 2) s = checked::add(s, r_[i]);
  return s;
}

bool Signature::is_zero() const {
  return std::all_of(r_.begin(), r_.end(), [](std::int64_t x) { return x == 0; });
}

std::string Signature::to_string() const { return join(r_); }

// ---------------------------------------------------------------- K0Matrix

K0Matrix::K0Matrix(CycleIndex m, std::vector<std::int64_t> row_major) : m_(m), a_(std::move(row_major)) {
  const auto n = static_cast<std::size_t>(m.vertex_count());
  if (a_.size() != n * n) {
    throw InvalidInputError("K0 matrix for m = " + std::to_string(m.m()) + " needs " + std::to_string(n * n) +
                            " entries, got " + std::to_string(a_.size()));
  }
  for (auto x : a_) {
    if (x < 0) throw InvalidInputError("K0 matrix entries must be nonnegative");
  }
}

K0Matrix K0Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const CycleIndex m = cycle_from_length(rows.size(), "K0 matrix");
  std::vector<std::int64_t> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw InvalidInputError("K0 matrix must be square: row of length " + std::to_string(row.size()) + " in a " +
                              std::to_string(rows.size()) + "-row matrix");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return K0Matrix(m, std::move(flat));
}

K0Matrix K0Matrix::zero(CycleIndex m) {
  const auto n = static_cast<std::size_t>(m.vertex_count());
  return K0Matrix(m, std::vector<std::int64_t>(n * n, 0));
}

K0Matrix K0Matrix::identity(CycleIndex m) { return permutation(DihedralElement::identity(m)); }

K0Matrix K0Matrix::permutation(const DihedralElement& theta) {
  const CycleIndex m = theta.cycle();
  K0Matrix p = zero(m);
  const int n = m.vertex_count();
  for (int v = 1; v <= n; ++v) {
    p.a_[static_cast<std::size_t>(k0_position(m, theta.act(v)) * n + k0_position(m, v))] = 1;
  }
  return p;
}

std::vector<std::vector<std::int64_t>> K0Matrix::rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 0; i < dim(); ++i) {
    out.emplace_back(a_.begin() + i * dim(), a_.begin() + (i + 1) * dim());
  }
  return out;
}

std::vector<std::int64_t> K0Matrix::apply(const std::vector<std::int64_t>& v) const {
  if (v.size() != static_cast<std::size_t>(dim())) throw IncompatibleError("K0 vector has the wrong length");
  std::vector<std::int64_t> out(v.size(), 0);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      out[static_cast<std::size_t>(i)] =
          checked::add(out[static_cast<std::size_t>(i)], checked::mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

bool K0Matrix::is_parity_block_diagonal() const {
  const int m = m_.m();
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      if ((i < m) != (j < m) && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::string K0Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

K0Matrix operator+(const K0Matrix& a, const K0Matrix& b) {
  require_same_cycle(a.m_, b.m_, "K0 sum");
  std::vector<std::int64_t> out(a.a_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::add(a.a_[i], b.a_[i]);
  return K0Matrix(a.m_, std::move(out));
}

K0Matrix operator*(const K0Matrix& a, const K0Matrix& b) {
  require_same_cycle(a.m_, b.m_, "K0 product");
  const int n = a.dim();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& cell = out[static_cast<std::size_t>(i * n + j)];
        cell = checked::add(cell, checked::mul(aik, b(k, j)));
      }
    }
  }
  return K0Matrix(a.m_, std::move(out));
}

K0Matrix operator*(std::int64_t k, const K0Matrix& a) {
  std::vector<std::int64_t> out(a.a_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::mul(k, a.a_[i]);
  return K0Matrix(a.m_, std::move(out));
}

// ---------------------------------------------------------------- shapes

CycleAlgebraShape::CycleAlgebraShape(CycleIndex m, std::vector<std::int64_t> vertex_mults)
    : m_(m), mults_(std::move(vertex_mults)) {
  if (mults_.size() != static_cast<std::size_t>(m.vertex_count())) {
    throw InvalidInputError("shape for m = " + std::to_string(m.m()) + " needs " + std::to_string(m.vertex_count()) +
                            " vertex multiplicities, got " + std::to_string(mults_.size()));
  }
  for (auto x : mults_) {
    if (x < 1) throw InvalidInputError("vertex multiplicities must be >= 1: " + join(mults_));
  }
}

CycleAlgebraShape CycleAlgebraShape::uniform(CycleIndex m, std::int64_t mult) {
  return CycleAlgebraShape(m, std::vector<std::int64_t>(static_cast<std::size_t>(m.vertex_count()), mult));
}

CycleAlgebraShape CycleAlgebraShape::from_entries(std::vector<std::int64_t> vertex_mults) {
  const CycleIndex m = cycle_from_length(vertex_mults.size(), "cycle algebra shape");
  return CycleAlgebraShape(m, std::move(vertex_mults));
}

std::int64_t CycleAlgebraShape::mult(int vertex) const {
  if (vertex < 1 || vertex > m_.vertex_count()) {
    throw InvalidIndexError("vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(m_.vertex_count()));
  }
  return mults_[static_cast<std::size_t>(vertex - 1)];
}

std::int64_t CycleAlgebraShape::dimension() const {
  std::int64_t s = 0;
  for (auto x : mults_) s = checked::add(s, x);
  return s;
}

std::vector<std::int64_t> CycleAlgebraShape::k0_vector() const {
  std::vector<std::int64_t> out;
  for (int v : k0_vertex_order(m_)) out.push_back(mult(v));
  return out;
}

bool CycleAlgebraShape::is_uniform() const {
  return std::adjacent_find(mults_.begin(), mults_.end(), std::not_equal_to<>()) == mults_.end();
}

// ---------------------------------------------------------------- operations

K0Matrix k0_matrix(const Signature& s) {
  const CycleIndex m = s.cycle();
  K0Matrix out = K0Matrix::zero(m);
  for (const auto& theta : enumerate_automorphisms(m.m())) {
    const std::int64_t r = s.at(theta);
    if (r != 0) out = out + r * K0Matrix::permutation(theta);
  }
  return out;
}

std::int64_t h1(const Signature& s) { return checked::sub(s.rotation_total(), s.reflection_total()); }

Signature signature_compose(const Signature& inner, const Signature& outer) {
  require_same_cycle(inner.cycle(), outer.cycle(), "signature_compose");
  const CycleIndex m = inner.cycle();
  const auto group = enumerate_automorphisms(m.m());
  std::vector<std::int64_t> r(group.size(), 0);
  for (const auto& a : group) {
    const std::int64_t ra = outer.at(a);
    if (ra == 0) continue;
    for (const auto& b : group) {
      const std::int64_t rb = inner.at(b);
      if (rb == 0) continue;
      auto& cell = r[static_cast<std::size_t>(dihedral_compose(a, b).paper_index() - 1)];
      cell = checked::add(cell, checked::mul(ra, rb));
    }
  }
  return Signature(m, std::move(r));
}

bool conjugate_eq(const Signature& s1, const Signature& s2) {
  require_same_cycle(s1.cycle(), s2.cycle(), "conjugate_eq");
  return s1 == s2;
}

Signature signature_from_k0h1(const K0H1Class& c) {
  const CycleIndex m = c.k0.cycle();
  Fibre fibre;
  if (!solve_fibre(c.k0, fibre) || fibre.empty()) {
    throw NotRealizableError(NotRealizableError::Reason::kK0NotRigidType,
                             "K0 matrix is not of rigid type (no nonnegative signature realizes it)");
  }
  const std::int64_t two_m = m.vertex_count();
  const std::int64_t diff = checked::sub(fibre.h0(), c.h);
  if (checked::mod(diff, two_m) != 0) {
    throw NotRealizableError(NotRealizableError::Reason::kOutsideHomologyRange,
                             "h = " + std::to_string(c.h) + " is not congruent to " +
                                 std::to_string(checked::mod(fibre.h0(), two_m)) + " mod " + std::to_string(two_m) +
                                 "; outside the homology range");
  }
  const std::int64_t x = diff / two_m;
  if (x < fibre.lo || x > fibre.hi) {
    throw NotRealizableError(NotRealizableError::Reason::kOutsideHomologyRange,
                             "h = " + std::to_string(c.h) + " lies outside the homology range [" +
                                 std::to_string(fibre.h0() - two_m * fibre.hi) + ", " +
                                 std::to_string(fibre.h0() - two_m * fibre.lo) + "]");
  }
  return fibre.at(m, x);
}

std::vector<Signature> k0_is_rigid_type(const K0Matrix& M) {
  Fibre fibre;
  std::vector<Signature> out;
  if (!solve_fibre(M, fibre) || fibre.empty()) return out;
  // Increasing x lowers rotation entries, so descending x is lexicographic.
  for (std::int64_t x = fibre.hi; x >= fibre.lo; --x) out.push_back(fibre.at(M.cycle(), x));
  return out;
}

std::vector<std::int64_t> homology_range(const Signature& s) {
  const auto& r = s.entries();
  std::int64_t min_rot = std::numeric_limits<std::int64_t>::max();
  std::int64_t min_ref = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < r.size(); ++i) {
    (i % 2 == 0 ? min_rot : min_ref) = std::min(i % 2 == 0 ? min_rot : min_ref, r[i]);
  }
  const std::int64_t base = h1(s);
  const std::int64_t two_m = s.cycle().vertex_count();
  std::vector<std::int64_t> out;
  for (std::int64_t k = -min_rot; k <= min_ref; ++k) out.push_back(checked::add(base, checked::mul(two_m, k)));
  return out;
}

std::size_t joint_scale_count(const CycleAlgebraShape& shape, bool unital_only) {
  const auto& mults = shape.vertex_mults();
  if (unital_only && !shape.is_uniform()) return 0;
  const std::int64_t cap = *std::min_element(mults.begin(), mults.end());
  const int parts = shape.cycle().vertex_count();
  // compositions of n into `parts` nonnegative parts: C(n + parts - 1, parts - 1)
  auto compositions = [parts](std::int64_t n) -> long double {
    long double c = 1;
    for (int i = 1; i < parts; ++i) c = c * static_cast<long double>(n + i) / i;
    return c;
  };
  long double total = 0;
  for (std::int64_t n = unital_only ? cap : 1; n <= cap; ++n) total += compositions(n);
  constexpr auto kMax = static_cast<long double>(std::numeric_limits<std::size_t>::max());
  return total >= kMax ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(total + 0.5L);
}

std::vector<JointScaleElement> joint_scale_finite(const CycleAlgebraShape& shape, bool unital_only,
                                                  const JointScaleLimits& limits) {
  const CycleIndex m = shape.cycle();
  m.require_rigid();
  std::vector<JointScaleElement> out;
  if (unital_only && !shape.is_uniform()) return out;

  const auto& mults = shape.vertex_mults();
  const std::int64_t cap = *std::min_element(mults.begin(), mults.end());
  if (cap > limits.max_mult) {
    throw CapacityError("joint scale enumeration bound exceeded: vertex multiplicity " + std::to_string(cap) +
                        " > cap " + std::to_string(limits.max_mult));
  }
  const std::size_t count = joint_scale_count(shape, unital_only);
  if (count > limits.max_elements) {
    throw CapacityError("joint scale enumeration would produce " + std::to_string(count) + " elements (limit " +
                        std::to_string(limits.max_elements) + ")");
  }
  out.reserve(count);

  const auto group = enumerate_automorphisms(m.m());
  const int n = m.vertex_count();
  // k0 positions hit by vertices 1 and 2 under each automorphism
  std::vector<std::pair<int, int>> hits;
  for (const auto& theta : group) hits.emplace_back(k0_position(m, theta.act(1)), k0_position(m, theta.act(2)));

  std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
  // Depth-first generation in lexicographic order of r.
  auto emit = [&]() {
    JointScaleElement e{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), 0};
    for (int i = 0; i < n; ++i) {
      const auto ri = r[static_cast<std::size_t>(i)];
      if (ri == 0) continue;
      e.k0_part[static_cast<std::size_t>(hits[static_cast<std::size_t>(i)].first)] += ri;
      e.k0_part[static_cast<std::size_t>(hits[static_cast<std::size_t>(i)].second)] += ri;
      e.h += (i % 2 == 0) ? ri : -ri;
    }
    out.push_back(std::move(e));
  };
  auto recurse = [&](auto&& self, int pos, std::int64_t remaining) -> void {
    if (pos == n - 1) {
      if (unital_only) {
        r[static_cast<std::size_t>(pos)] = remaining;
        emit();
        return;
      }
      for (std::int64_t v = 0; v <= remaining; ++v) {
        r[static_cast<std::size_t>(pos)] = v;
        if (v > 0 || remaining < cap) emit();
      }
      return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
      r[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, cap);
  return out;
}

std::vector<std::int64_t> image_mults(const Signature& s, const CycleAlgebraShape& src) {
  require_same_cycle(s.cycle(), src.cycle(), "image_mults");
  const CycleIndex m = s.cycle();
  const auto img_k0 = k0_matrix(s).apply(src.k0_vector());
  std::vector<std::int64_t> out(img_k0.size());
  for (int v = 1; v <= m.vertex_count(); ++v) {
    out[static_cast<std::size_t>(v - 1)] = img_k0[static_cast<std::size_t>(k0_position(m, v))];
  }
  return out;
}

bool fits_capacity(const Signature& s, const CycleAlgebraShape& src, const CycleAlgebraShape& tgt) {
  require_same_cycle(src.cycle(), tgt.cycle(), "fits_capacity");
  const auto img = image_mults(s, src);
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] > tgt.vertex_mults()[i]) return false;
  }
  return true;
}

}  // namespace cyclealg
