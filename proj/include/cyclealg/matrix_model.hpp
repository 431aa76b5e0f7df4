#pragma once

// Concrete block-matrix realisations of 2m-cycle algebras and of rigid
// embeddings between them, with numerical checks on partial isometries.
//
// A model of A(shape) lives in M_N, N = sum of vertex multiplicities. Vertex
// blocks appear along the diagonal in `block_order` (1..2m by default); block
// (i, j) is supported when i == j or i is odd, j is even and {i, j} is an
// edge of D_2m. With the default order this is the staircase form.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cyclealg/embed_algebra.hpp"

namespace cyclealg {

using ComplexMatrix = Eigen::MatrixXcd;

struct NumericTolerance {
  double tol;

  /// Throws InvalidInputError unless tol > 0.
  explicit NumericTolerance(double t);

  static NumericTolerance exact() { return NumericTolerance(1e-9); }
  static NumericTolerance perturbed() { return NumericTolerance(1e-6); }
};

class MatrixAlgebraModel {
 public:
  /// block_order lists each vertex 1..2m once; empty means 1..2m.
  explicit MatrixAlgebraModel(CycleAlgebraShape shape, std::vector<int> block_order = {});

  CycleIndex cycle() const noexcept { return shape_.cycle(); }
  const CycleAlgebraShape& shape() const noexcept { return shape_; }
  const std::vector<int>& block_order() const noexcept { return order_; }
  int dimension() const noexcept { return n_; }

  /// First row/column of the block of vertex v.
  int offset(int vertex) const;
  int mult(int vertex) const;
  /// Global index of (vertex, slot).
  int index(int vertex, int slot) const;
  /// Vertex owning global index i.
  int vertex_of(int i) const;

  /// Whether e_{u v}-type entries (row block u, column block v) are allowed.
  bool block_supported(int u, int v) const;
  bool entry_supported(int row, int col) const { return block_supported(vertex_of(row), vertex_of(col)); }

  /// N x N boolean support mask.
  std::vector<std::vector<bool>> mask() const;
  /// Rows of '*' and '.' for the mask.
  std::string mask_string() const;

  /// Identity on the block of vertex v.
  ComplexMatrix block_projection(int vertex) const;
  ComplexMatrix block(const ComplexMatrix& x, int row_vertex, int col_vertex) const;

  /// Largest modulus of an entry outside the mask. Throws InvalidInputError
  /// on a dimension mismatch.
  double off_support(const ComplexMatrix& x) const;

  bool is_unit() const;

  friend bool operator==(const MatrixAlgebraModel& a, const MatrixAlgebraModel& b) {
    return a.shape_ == b.shape_ && a.order_ == b.order_;
  }

 private:
  CycleAlgebraShape shape_;
  std::vector<int> order_;
  std::vector<int> offsets_;  // by vertex label - 1
  std::vector<int> owner_;    // vertex of each global index
  int n_ = 0;
};

MatrixAlgebraModel build_cycle_algebra(const CycleAlgebraShape& shape);
MatrixAlgebraModel build_cycle_algebra(const CycleAlgebraShape& shape, std::vector<int> block_order);

/// Operator-norm distance to the nearest partial isometry:
/// max over singular values of min(sigma, |sigma - 1|).
double distance_to_partial_isometry(const ComplexMatrix& x);

/// Operator norm (largest singular value).
double operator_norm(const ComplexMatrix& x);

/// An embedding given by the images of the source matrix units.
class ConcreteEmbedding {
 public:
  ConcreteEmbedding(MatrixAlgebraModel source, MatrixAlgebraModel target);

  const MatrixAlgebraModel& source() const noexcept { return source_; }
  const MatrixAlgebraModel& target() const noexcept { return target_; }

  /// Image of the source matrix unit E_{row,col}; row/col are global source
  /// indices of a supported entry.
  const ComplexMatrix& image(int row, int col) const;
  void set_image(int row, int col, ComplexMatrix m);

  /// Image of an arbitrary element of the source algebra (linear extension).
  ComplexMatrix apply(const ComplexMatrix& x) const;

  /// Largest violation of image(e_ij) image(e_kl) = delta_jk image(e_il) and
  /// image(e_ij)* = image(e_ji) over supported units.
  double homomorphism_defect() const;

 private:
  std::size_t key(int row, int col) const;

  MatrixAlgebraModel source_;
  MatrixAlgebraModel target_;
  std::vector<std::optional<ComplexMatrix>> images_;
};

/// Slot (0-based) of the copy used in each target vertex, indexed by vertex
/// label - 1.
using Placement = std::vector<int>;

/// Standard-form multiplicity-one embedding of the unit model A(D_2m) with
/// e_{uv} -> E_{(theta(u), slot), (theta(v), slot)}. Throws CapacityError
/// when a slot is out of range.
ConcreteEmbedding realize_multiplicity_one(const DihedralElement& theta, const MatrixAlgebraModel& target,
                                           const Placement& slot);

/// Direct sum of r_theta copies of each class, in label order, filling slots
/// from 0 upward. Throws CapacityError when the row-sum condition fails.
ConcreteEmbedding realize_rigid(const Signature& s, const MatrixAlgebraModel& target);

/// g o f. Throws IncompatibleError unless f.target() == g.source().
ConcreteEmbedding compose_embeddings(const ConcreteEmbedding& f, const ConcreteEmbedding& g);

/// Conjugates every image by the block-diagonal unitary u: x -> u x u*.
ConcreteEmbedding conjugate_embedding(const ConcreteEmbedding& f, const ComplexMatrix& u);

/// K0[w][v] = rank of the compression of image(e_vv) to block w.
K0Matrix k0_from_ranks(const ConcreteEmbedding& f, double tol = 1e-9);

/// Signature of an embedding of the unit model: K0 from ranks, h from the
/// rotation/reflection count of the image of each cycle step. Throws
/// UnsupportedInputError for non-unit sources or compressions that are not
/// partial isometries, and DecompositionError when the per-step counts
/// disagree.
Signature decompose_signature(const ConcreteEmbedding& f, double tol = 1e-9);

/// Random block-diagonal unitary for the model.
ComplexMatrix random_block_unitary(const MatrixAlgebraModel& model, std::uint64_t seed);

struct CompositionOracleResult {
  int a;  // theta labels
  int b;
  Signature expected;
  std::optional<Signature> decomposed;
  std::string error;
  bool agrees = false;
};

/// realize(theta_b) o realize(theta_a) decomposed, for every ordered pair,
/// against signature_compose(e_a, e_b).
std::vector<CompositionOracleResult> composition_oracle(int m, double tol = 1e-9);

struct Lemma22Report {
  std::uint64_t seed = 0;
  int trials = 0;
  double tol = 0;
  double max_deviation = 0;      // over all block entries of all trials
  double max_whole_deviation = 0;  // of the constructed elements themselves
  int failures = 0;
  int construction_failures = 0;
  std::optional<int> first_failing_trial;
  bool passed = false;
};

/// Random partial isometry with initial and final projections in the algebra.
ComplexMatrix random_algebra_partial_isometry(const MatrixAlgebraModel& model, std::uint64_t seed);

/// Largest distance_to_partial_isometry over the vertex blocks of x.
double max_block_deviation(const MatrixAlgebraModel& model, const ComplexMatrix& x);

/// Throws InvalidIndexError for m < 3.
Lemma22Report check_lemma_2_2(const MatrixAlgebraModel& model, int trials, double tol, std::uint64_t seed);

struct Lemma31Row {
  double delta = 0;
  double max_entry_deviation = 0;
  double max_whole_deviation = 0;
  bool within_epsilon = false;
};

struct Lemma31Report {
  std::uint64_t seed = 0;
  int trials = 0;
  double epsilon = 0;
  std::vector<Lemma31Row> table;
};

/// Perturbs exact check_lemma_2_2 inputs by masked noise of operator norm delta.
/// Throws InvalidIndexError for m < 3 and InvalidInputError for delta < 0 or
/// epsilon <= 0.
Lemma31Row check_lemma_3_1(const MatrixAlgebraModel& model, double delta, int trials, double epsilon,
                           std::uint64_t seed);
Lemma31Report check_lemma_3_1_sweep(const MatrixAlgebraModel& model, const std::vector<double>& deltas, int trials,
                                    double epsilon, std::uint64_t seed);

struct RegularityResult {
  bool regular = false;
  double worst_distance = 0;
  /// Vertex sets of the worst compression p x q.
  std::vector<int> worst_p;
  std::vector<int> worst_q;
  std::size_t pairs_checked = 0;
};

/// Tests p x q against partial isometries for all pairs of central
/// projections (sums of vertex-block identities) of the diagonal part. x may
/// be any N x N matrix; InvalidInputError on a dimension mismatch.
RegularityResult locally_regular_details(const ComplexMatrix& x, const MatrixAlgebraModel& model, double tol);
bool locally_regular_check(const ComplexMatrix& x, const MatrixAlgebraModel& model, double tol);

struct Example23 {
  MatrixAlgebraModel model;
  std::vector<ComplexMatrix> v;  // v_1..v_4
  ComplexMatrix product;         // v_2 v_1^*
  std::vector<double> pi_distance;
  std::vector<RegularityResult> v_regular;
  RegularityResult product_regular;
  bool partial_isometries_ok = false;
  bool regular_ok = false;
  bool product_fails_ok = false;
  bool passed() const { return partial_isometries_ok && regular_ok && product_fails_ok; }
};

/// The four partial isometries in the upper-triangular realisation of
/// A(D_4) (x) M_4 inside M_16, and the three checks on them.
Example23 example_2_3(double pi_tol = 1e-9, double regular_tol = 1e-6, double failure_gap = 0.1);

}  // namespace cyclealg
