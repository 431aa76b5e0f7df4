#pragma once

// Exact combinatorics of rigid embeddings between 2m-cycle algebras.
//
// A rigid embedding A(D_2m) -> A is a direct sum of multiplicity-one proper
// embeddings, one class per automorphism theta_j; the multiplicities
// r_1..r_2m form its signature, the complete conjugacy invariant. The K0
// matrix is sum_j r_j P(theta_j) and H_1 acts by r_1 - r_2 + r_3 - ... - r_2m.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cyclealg/cycle_core.hpp"

namespace cyclealg {

/// Multiplicities indexed by theta_1..theta_2m (vector index = label - 1).
class Signature {
 public:
  Signature(CycleIndex m, std::vector<std::int64_t> r);

  /// Infers m from the length, which must be even and >= 4.
  static Signature from_entries(std::vector<std::int64_t> r);
  static Signature zero(CycleIndex m);
  /// Multiplicity-one signature e_theta.
  static Signature unit(const DihedralElement& theta);
  static Signature identity(CycleIndex m) { return unit(DihedralElement::identity(m)); }
  /// (p, q, p, q, ...): p copies of every rotation, q of every reflection.
  static Signature alternating(CycleIndex m, std::int64_t p, std::int64_t q);

  CycleIndex cycle() const noexcept { return m_; }
  const std::vector<std::int64_t>& entries() const noexcept { return r_; }
  std::int64_t at(const DihedralElement& theta) const;
  /// r_index for a label in 1..2m.
  std::int64_t operator[](int paper_index) const;

  /// Number of multiplicity-one summands (every K0 row sums to this).
  std::int64_t total() const;
  std::int64_t rotation_total() const;
  std::int64_t reflection_total() const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.r_ == b.r_; }
  /// Lexicographic on entries; only meaningful for equal m.
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) { return a.r_ <=> b.r_; }

 private:
  CycleIndex m_;
  std::vector<std::int64_t> r_;
};

/// 2m x 2m nonnegative integer matrix on vertex classes in K0 order (odd
/// vertices then even vertices). Entry (i, j) counts copies of vertex class j
/// landing in vertex class i.
class K0Matrix {
 public:
  K0Matrix(CycleIndex m, std::vector<std::int64_t> row_major);

  /// Validates squareness, even size >= 4 and nonnegativity (InvalidInputError).
  static K0Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static K0Matrix zero(CycleIndex m);
  static K0Matrix identity(CycleIndex m);
  /// P(theta) with P[k0_position(theta(v))][k0_position(v)] = 1.
  static K0Matrix permutation(const DihedralElement& theta);

  CycleIndex cycle() const noexcept { return m_; }
  int dim() const noexcept { return m_.vertex_count(); }
  std::int64_t operator()(int row, int col) const {
    return a_[static_cast<std::size_t>(row * dim() + col)];
  }
  const std::vector<std::int64_t>& row_major() const noexcept { return a_; }
  std::vector<std::vector<std::int64_t>> rows() const;

  /// Matrix-vector product; v is indexed in K0 order.
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

  /// True when no entry couples an odd class with an even class.
  bool is_parity_block_diagonal() const;

  std::string to_string() const;

  friend K0Matrix operator+(const K0Matrix& a, const K0Matrix& b);
  friend K0Matrix operator*(const K0Matrix& a, const K0Matrix& b);
  friend K0Matrix operator*(std::int64_t k, const K0Matrix& a);
  friend bool operator==(const K0Matrix& a, const K0Matrix& b) { return a.a_ == b.a_; }

 private:
  CycleIndex m_;
  std::vector<std::int64_t> a_;
};

/// Value of K0 and of H_1 on the fixed generator g.
struct K0H1Class {
  K0Matrix k0;
  std::int64_t h;
};

/// Vertex multiplicities of a 2m-cycle algebra, indexed by vertex label - 1.
class CycleAlgebraShape {
 public:
  CycleAlgebraShape(CycleIndex m, std::vector<std::int64_t> vertex_mults);

  static CycleAlgebraShape uniform(CycleIndex m, std::int64_t mult);
  static CycleAlgebraShape from_entries(std::vector<std::int64_t> vertex_mults);

  CycleIndex cycle() const noexcept { return m_; }
  const std::vector<std::int64_t>& vertex_mults() const noexcept { return mults_; }
  std::int64_t mult(int vertex) const;
  std::int64_t dimension() const;
  /// Multiplicities rearranged in K0 order.
  std::vector<std::int64_t> k0_vector() const;
  bool is_uniform() const;

  friend bool operator==(const CycleAlgebraShape&, const CycleAlgebraShape&) = default;

 private:
  CycleIndex m_;
  std::vector<std::int64_t> mults_;
};

/// (K0 phi(e_11 + e_22), H_1 phi(g)); k0_part is in K0 order.
struct JointScaleElement {
  std::vector<std::int64_t> k0_part;
  std::int64_t h;

  friend auto operator<=>(const JointScaleElement&, const JointScaleElement&) = default;
};

K0Matrix k0_matrix(const Signature& s);

/// Rotations minus reflections.
std::int64_t h1(const Signature& s);

/// Group-ring convolution modelling outer o inner:
/// result[theta] = sum over a o b = theta of outer[a] * inner[b].
Signature signature_compose(const Signature& inner, const Signature& outer);

bool conjugate_eq(const Signature& s1, const Signature& s2);

/// The unique signature with the given K0 matrix and H_1 value. Throws
/// NotRealizableError, distinguishing an unrealizable K0 matrix from an h
/// outside the homology range.
Signature signature_from_k0h1(const K0H1Class& c);

/// Every signature with k0_matrix(s) == M, lexicographically ordered; empty
/// exactly when M is not of rigid type.
std::vector<Signature> k0_is_rigid_type(const K0Matrix& M);

/// All H_1 values over the K0 fibre of s, ascending; spacing 2m.
std::vector<std::int64_t> homology_range(const Signature& s);

/// Guards on joint-scale enumeration. max_mult bounds the vertex
/// multiplicities that drive the enumeration; max_elements bounds the output.
struct JointScaleLimits {
  std::int64_t max_mult = 64;
  std::size_t max_elements = 2'000'000;
};

/// Joint-scale elements of the finite-dimensional algebra A(shape): one per
/// nonzero signature fitting the row-sum condition (with equality everywhere
/// when unital_only). Ordered lexicographically by signature. Throws
/// CapacityError when a limit is exceeded and InvalidIndexError for m < 3.
std::vector<JointScaleElement> joint_scale_finite(const CycleAlgebraShape& shape, bool unital_only,
                                                  const JointScaleLimits& limits = {});

/// Number of signatures joint_scale_finite would visit (saturating).
std::size_t joint_scale_count(const CycleAlgebraShape& shape, bool unital_only);

/// Whether A(src) -> A(tgt) with K0 matrix k0_matrix(s) fits: K0 * src <= tgt.
bool fits_capacity(const Signature& s, const CycleAlgebraShape& src, const CycleAlgebraShape& tgt);

/// Image shape k0_matrix(s) * src, in vertex-label order.
std::vector<std::int64_t> image_mults(const Signature& s, const CycleAlgebraShape& src);

}  // namespace cyclealg
