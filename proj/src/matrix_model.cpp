#include "cyclealg/matrix_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "cyclealg/errors.hpp"

namespace cyclealg {

namespace {

constexpr double kZero = 1e-14;

int wrap(int v, int n) { return ((v - 1) % n + n) % n + 1; }

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

ComplexMatrix gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = n01(rng);
      const double im = n01(rng);
      g(i, j) = {re, im};
    }
  }
  return g;
}

ComplexMatrix haar_unitary(int n, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > kZero) q.col(j) *= r(j, j) / a;
  }
  return q;
}

std::complex<double> random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  return std::polar(1.0, angle(rng));
}

// Greedy random partial matching on supported entries of the model.
ComplexMatrix random_matching(const MatrixAlgebraModel& model, std::mt19937_64& rng) {
  const int n = model.dimension();
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (model.entry_supported(i, j)) cells.emplace_back(i, j);
    }
  }
  std::shuffle(cells.begin(), cells.end(), rng);
  std::bernoulli_distribution keep(0.5);
  std::vector<bool> row_used(static_cast<std::size_t>(n), false);
  std::vector<bool> col_used(static_cast<std::size_t>(n), false);
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (auto [i, j] : cells) {
    if (row_used[static_cast<std::size_t>(i)] || col_used[static_cast<std::size_t>(j)]) continue;
    if (!keep(rng)) continue;
    row_used[static_cast<std::size_t>(i)] = true;
    col_used[static_cast<std::size_t>(j)] = true;
    a(i, j) = random_phase(rng);
  }
  return a;
}

std::vector<int> indices_of(const MatrixAlgebraModel& model, unsigned vertex_mask) {
  std::vector<int> out;
  for (int v = 1; v <= model.cycle().vertex_count(); ++v) {
    if (!(vertex_mask & (1u << (v - 1)))) continue;
    for (int k = 0; k < model.mult(v); ++k) out.push_back(model.index(v, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> vertices_of(unsigned vertex_mask, int count) {
  std::vector<int> out;
  for (int v = 1; v <= count; ++v) {
    if (vertex_mask & (1u << (v - 1))) out.push_back(v);
  }
  return out;
}

// Rank of a compression that must be a partial isometry.
std::int64_t pi_rank(const ComplexMatrix& c, double tol, const std::string& what) {
  if (c.size() == 0) return 0;
  if (distance_to_partial_isometry(c) > tol) {
    throw UnsupportedInputError(what + " is not a partial isometry");
  }
  const double fro2 = c.squaredNorm();
  const double r = std::round(fro2);
  if (std::abs(fro2 - r) > 1e-6) throw UnsupportedInputError(what + " has a non-integral rank");
  return static_cast<std::int64_t>(r);
}

}  // namespace

NumericTolerance::NumericTolerance(double t) : tol(t) {
  if (!(t > 0)) throw InvalidInputError("tolerance must be positive");
}

// ---------------------------------------------------------- model

MatrixAlgebraModel::MatrixAlgebraModel(CycleAlgebraShape shape, std::vector<int> block_order)
    : shape_(std::move(shape)), order_(std::move(block_order)) {
  const int count = shape_.cycle().vertex_count();
  if (order_.empty()) {
    order_.resize(static_cast<std::size_t>(count));
    std::iota(order_.begin(), order_.end(), 1);
  }
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(count));
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) {
    throw InvalidInputError("block order must list each vertex 1.." + std::to_string(count) + " exactly once");
  }
  offsets_.assign(static_cast<std::size_t>(count), 0);
  for (int v : order_) {
    const auto mult = shape_.mult(v);
    if (mult > 4096) throw CapacityError("vertex multiplicity too large for a dense model");
    offsets_[static_cast<std::size_t>(v - 1)] = n_;
    for (std::int64_t k = 0; k < mult; ++k) owner_.push_back(v);
    n_ += static_cast<int>(mult);
  }
}

int MatrixAlgebraModel::offset(int vertex) const {
  shape_.mult(vertex);  // range check
  return offsets_[static_cast<std::size_t>(vertex - 1)];
}

int MatrixAlgebraModel::mult(int vertex) const { return static_cast<int>(shape_.mult(vertex)); }

int MatrixAlgebraModel::index(int vertex, int slot) const {
  if (slot < 0 || slot >= mult(vertex)) {
    throw InvalidIndexError("slot " + std::to_string(slot) + " outside the block of vertex " + std::to_string(vertex));
  }
  return offset(vertex) + slot;
}

int MatrixAlgebraModel::vertex_of(int i) const {
  if (i < 0 || i >= n_) throw InvalidIndexError("global index " + std::to_string(i) + " outside 0.." + std::to_string(n_ - 1));
  return owner_[static_cast<std::size_t>(i)];
}

bool MatrixAlgebraModel::block_supported(int u, int v) const {
  const int count = cycle().vertex_count();
  if (u < 1 || u > count || v < 1 || v > count) {
    throw InvalidIndexError("vertex outside 1.." + std::to_string(count));
  }
  if (u == v) return true;
  if (u % 2 == 0 || v % 2 == 1) return false;
  return wrap(u + 1, count) == v || wrap(u - 1, count) == v;
}

std::vector<std::vector<bool>> MatrixAlgebraModel::mask() const {
  std::vector<std::vector<bool>> out(static_cast<std::size_t>(n_), std::vector<bool>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry_supported(i, j);
  }
  return out;
}

std::string MatrixAlgebraModel::mask_string() const {
  std::ostringstream os;
  for (const auto& row : mask()) {
    for (bool b : row) os << (b ? '*' : '.');
    os << '\n';
  }
  return os.str();
}

ComplexMatrix MatrixAlgebraModel::block_projection(int vertex) const {
  ComplexMatrix p = ComplexMatrix::Zero(n_, n_);
  const int o = offset(vertex);
  for (int k = 0; k < mult(vertex); ++k) p(o + k, o + k) = 1.0;
  return p;
}

ComplexMatrix MatrixAlgebraModel::block(const ComplexMatrix& x, int row_vertex, int col_vertex) const {
  if (x.rows() != n_ || x.cols() != n_) throw InvalidInputError("matrix does not match the model dimension");
  return x.block(offset(row_vertex), offset(col_vertex), mult(row_vertex), mult(col_vertex));
}

double MatrixAlgebraModel::off_support(const ComplexMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) {
    throw InvalidInputError("matrix is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                            ", model dimension is " + std::to_string(n_));
  }
  double worst = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!entry_supported(i, j)) worst = std::max(worst, std::abs(x(i, j)));
    }
  }
  return worst;
}

bool MatrixAlgebraModel::is_unit() const {
  const auto& mults = shape_.vertex_mults();
  return std::all_of(mults.begin(), mults.end(), [](std::int64_t k) { return k == 1; });
}

MatrixAlgebraModel build_cycle_algebra(const CycleAlgebraShape& shape) { return MatrixAlgebraModel(shape); }

MatrixAlgebraModel build_cycle_algebra(const CycleAlgebraShape& shape, std::vector<int> block_order) {
  return MatrixAlgebraModel(shape, std::move(block_order));
}

double distance_to_partial_isometry(const ComplexMatrix& x) {
  if (x.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  double worst = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    worst = std::max(worst, std::min(s, std::abs(s - 1.0)));
  }
  return worst;
}

double operator_norm(const ComplexMatrix& x) {
  if (x.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  return svd.singularValues()(0);
}

// ---------------------------------------------------------- embeddings

ConcreteEmbedding::ConcreteEmbedding(MatrixAlgebraModel source, MatrixAlgebraModel target)
    : source_(std::move(source)), target_(std::move(target)) {
  const auto n = static_cast<std::size_t>(source_.dimension());
  images_.resize(n * n);
  const int nt = target_.dimension();
  for (int i = 0; i < source_.dimension(); ++i) {
    for (int j = 0; j < source_.dimension(); ++j) {
      if (source_.entry_supported(i, j)) images_[key(i, j)] = ComplexMatrix::Zero(nt, nt);
    }
  }
}

std::size_t ConcreteEmbedding::key(int row, int col) const {
  if (!source_.entry_supported(row, col)) {
    throw InvalidIndexError("(" + std::to_string(row) + ", " + std::to_string(col) +
                            ") is not a supported matrix unit of the source");
  }
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(source_.dimension()) + static_cast<std::size_t>(col);
}

const ComplexMatrix& ConcreteEmbedding::image(int row, int col) const { return *images_[key(row, col)]; }

void ConcreteEmbedding::set_image(int row, int col, ComplexMatrix m) {
  if (m.rows() != target_.dimension() || m.cols() != target_.dimension()) {
    throw InvalidInputError("image does not match the target dimension");
  }
  images_[key(row, col)] = std::move(m);
}

ComplexMatrix ConcreteEmbedding::apply(const ComplexMatrix& x) const {
  if (source_.off_support(x) > 1e-9) throw InvalidInputError("element is not in the source algebra");
  const int nt = target_.dimension();
  ComplexMatrix out = ComplexMatrix::Zero(nt, nt);
  for (int i = 0; i < source_.dimension(); ++i) {
    for (int j = 0; j < source_.dimension(); ++j) {
      if (std::abs(x(i, j)) > kZero && source_.entry_supported(i, j)) out += x(i, j) * image(i, j);
    }
  }
  return out;
}

double ConcreteEmbedding::homomorphism_defect() const {
  const int n = source_.dimension();
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (source_.entry_supported(i, j)) units.emplace_back(i, j);
    }
  }
  double worst = 0;
  for (auto [i, j] : units) {
    if (source_.entry_supported(j, i)) {
      worst = std::max(worst, (image(i, j).adjoint() - image(j, i)).cwiseAbs().maxCoeff());
    }
    for (auto [k, l] : units) {
      const ComplexMatrix prod = image(i, j) * image(k, l);
      if (j == k) {
        worst = std::max(worst, (prod - image(i, l)).cwiseAbs().maxCoeff());
      } else {
        worst = std::max(worst, prod.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

ConcreteEmbedding realize_multiplicity_one(const DihedralElement& theta, const MatrixAlgebraModel& target,
                                           const Placement& slot) {
  const CycleIndex m = theta.cycle();
  if (target.cycle() != m) throw IncompatibleError("automorphism and target model have different cycle lengths");
  const int count = m.vertex_count();
  if (static_cast<int>(slot.size()) != count) {
    throw InvalidInputError("placement needs one slot per vertex (" + std::to_string(count) + ")");
  }
  for (int w = 1; w <= count; ++w) {
    const int k = slot[static_cast<std::size_t>(w - 1)];
    if (k < 0 || k >= target.mult(w)) {
      throw CapacityError("slot " + std::to_string(k) + " unavailable at target vertex " + std::to_string(w) +
                          " (multiplicity " + std::to_string(target.mult(w)) + ")");
    }
  }
  const MatrixAlgebraModel source(CycleAlgebraShape::uniform(m, 1));
  ConcreteEmbedding f(source, target);
  const int nt = target.dimension();
  for (int u = 1; u <= count; ++u) {
    for (int v = 1; v <= count; ++v) {
      if (!source.block_supported(u, v)) continue;
      const int tu = theta.act(u);
      const int tv = theta.act(v);
      ComplexMatrix img = ComplexMatrix::Zero(nt, nt);
      img(target.index(tu, slot[static_cast<std::size_t>(tu - 1)]), target.index(tv, slot[static_cast<std::size_t>(tv - 1)])) = 1.0;
      f.set_image(source.index(u, 0), source.index(v, 0), std::move(img));
    }
  }
  return f;
}

ConcreteEmbedding realize_rigid(const Signature& s, const MatrixAlgebraModel& target) {
  const CycleIndex m = s.cycle();
  if (target.cycle() != m) throw IncompatibleError("signature and target model have different cycle lengths");
  const std::int64_t total = s.total();
  for (int w = 1; w <= m.vertex_count(); ++w) {
    if (total > target.mult(w)) {
      throw CapacityError("signature " + s.to_string() + " needs " + std::to_string(total) +
                          " slots at every vertex, vertex " + std::to_string(w) + " has " +
                          std::to_string(target.mult(w)));
    }
  }
  const MatrixAlgebraModel source(CycleAlgebraShape::uniform(m, 1));
  ConcreteEmbedding out(source, target);
  int copy = 0;
  for (const auto& theta : enumerate_automorphisms(m.m())) {
    for (std::int64_t c = 0; c < s.at(theta); ++c, ++copy) {
      const auto part = realize_multiplicity_one(theta, target, Placement(static_cast<std::size_t>(m.vertex_count()), copy));
      for (int i = 0; i < source.dimension(); ++i) {
        for (int j = 0; j < source.dimension(); ++j) {
          if (source.entry_supported(i, j)) out.set_image(i, j, out.image(i, j) + part.image(i, j));
        }
      }
    }
  }
  return out;
}

ConcreteEmbedding compose_embeddings(const ConcreteEmbedding& f, const ConcreteEmbedding& g) {
  if (!(f.target() == g.source())) {
    throw IncompatibleError("target model of the first embedding differs from the source model of the second");
  }
  ConcreteEmbedding out(f.source(), g.target());
  const int n = f.source().dimension();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.source().entry_supported(i, j)) out.set_image(i, j, g.apply(f.image(i, j)));
    }
  }
  return out;
}

ConcreteEmbedding conjugate_embedding(const ConcreteEmbedding& f, const ComplexMatrix& u) {
  const auto& t = f.target();
  if (u.rows() != t.dimension() || u.cols() != t.dimension()) throw InvalidInputError("unitary has the wrong size");
  for (int a = 1; a <= t.cycle().vertex_count(); ++a) {
    for (int b = 1; b <= t.cycle().vertex_count(); ++b) {
      if (a != b && t.block(u, a, b).cwiseAbs().maxCoeff() > 1e-12) {
        throw InvalidInputError("conjugating unitary is not block diagonal");
      }
    }
  }
  ConcreteEmbedding out(f.source(), t);
  const int n = f.source().dimension();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.source().entry_supported(i, j)) out.set_image(i, j, u * f.image(i, j) * u.adjoint());
    }
  }
  return out;
}

K0Matrix k0_from_ranks(const ConcreteEmbedding& f, double tol) {
  if (!f.source().is_unit()) throw UnsupportedInputError("rank bookkeeping needs the unit source model A(D_2m)");
  const CycleIndex m = f.source().cycle();
  if (f.target().cycle() != m) throw UnsupportedInputError("source and target cycle lengths differ");
  const int count = m.vertex_count();
  std::vector<std::int64_t> k0(static_cast<std::size_t>(count * count), 0);
  for (int v = 1; v <= count; ++v) {
    const int i = f.source().index(v, 0);
    const ComplexMatrix& p = f.image(i, i);
    for (int w = 1; w <= count; ++w) {
      const auto r = pi_rank(f.target().block(p, w, w), tol,
                             "compression of the image of e_" + std::to_string(v) + std::to_string(v) +
                                 " to vertex " + std::to_string(w));
      k0[static_cast<std::size_t>(k0_position(m, w) * count + k0_position(m, v))] = r;
    }
  }
  return K0Matrix(m, std::move(k0));
}

Signature decompose_signature(const ConcreteEmbedding& f, double tol) {
  const K0Matrix k0 = k0_from_ranks(f, tol);
  const CycleIndex m = k0.cycle();
  const int count = m.vertex_count();
  const auto& src = f.source();
  const auto& tgt = f.target();
  std::optional<std::int64_t> plus;
  std::optional<std::int64_t> minus;
  for (int k = 1; k <= count; ++k) {
    const int next = wrap(k + 1, count);
    // image of the cycle step from vertex k to vertex k + 1
    const ComplexMatrix step = src.block_supported(next, k)
                                   ? f.image(src.index(next, 0), src.index(k, 0))
                                   : ComplexMatrix(f.image(src.index(k, 0), src.index(next, 0)).adjoint());
    std::int64_t p = 0;
    std::int64_t q = 0;
    for (int w = 1; w <= count; ++w) {
      const std::string where = "step " + std::to_string(k) + " at target vertex " + std::to_string(w);
      p += pi_rank(tgt.block(step, wrap(w + 1, count), w), tol, "forward compression of " + where);
      q += pi_rank(tgt.block(step, wrap(w - 1, count), w), tol, "backward compression of " + where);
    }
    if (plus && (*plus != p || *minus != q)) {
      throw DecompositionError("orientation counts differ between cycle steps: (" + std::to_string(*plus) + ", " +
                               std::to_string(*minus) + ") vs (" + std::to_string(p) + ", " + std::to_string(q) +
                               ") at step " + std::to_string(k));
    }
    plus = p;
    minus = q;
  }
  Signature s = Signature::zero(m);
  try {
    s = signature_from_k0h1({k0, *plus - *minus});
  } catch (const NotRealizableError& e) {
    throw DecompositionError(std::string("recovered invariants are not realizable: ") + e.what());
  }
  if (s.rotation_total() != *plus || s.reflection_total() != *minus) {
    throw DecompositionError("orientation counts disagree with the recovered signature " + s.to_string());
  }
  return s;
}

ComplexMatrix random_block_unitary(const MatrixAlgebraModel& model, std::uint64_t seed) {
  auto rng = make_rng(seed, 0x75);
  const int n = model.dimension();
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (int v : model.block_order()) {
    const int k = model.mult(v);
    if (k == 0) continue;
    u.block(model.offset(v), model.offset(v), k, k) = haar_unitary(k, rng);
  }
  return u;
}

std::vector<CompositionOracleResult> composition_oracle(int m, double tol) {
  const CycleIndex idx(m);
  const MatrixAlgebraModel unit(CycleAlgebraShape::uniform(idx, 1));
  const Placement first(static_cast<std::size_t>(idx.vertex_count()), 0);
  std::vector<CompositionOracleResult> out;
  for (const auto& a : enumerate_automorphisms(m)) {
    for (const auto& b : enumerate_automorphisms(m)) {
      CompositionOracleResult r{a.paper_index(), b.paper_index(), signature_compose(Signature::unit(a), Signature::unit(b)),
                                std::nullopt, {}, false};
      try {
        const auto g_after_f =
            compose_embeddings(realize_multiplicity_one(a, unit, first), realize_multiplicity_one(b, unit, first));
        r.decomposed = decompose_signature(g_after_f, tol);
        r.agrees = *r.decomposed == r.expected;
      } catch (const Error& e) {
        r.error = e.what();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------------- block-entry harnesses

ComplexMatrix random_algebra_partial_isometry(const MatrixAlgebraModel& model, std::uint64_t seed) {
  auto rng = make_rng(seed, 0x22);
  const CycleIndex m = model.cycle();
  const auto& mults = model.shape().vertex_mults();
  const auto cap = *std::min_element(mults.begin(), mults.end());

  ComplexMatrix core;
  std::bernoulli_distribution use_rigid(0.5);
  if (cap >= 1 && use_rigid(rng)) {
    // image of a random partial isometry of A(D_2m) under a random rigid map
    std::uniform_int_distribution<std::int64_t> total_dist(1, cap);
    std::uniform_int_distribution<int> label(0, m.vertex_count() - 1);
    std::vector<std::int64_t> r(static_cast<std::size_t>(m.vertex_count()), 0);
    for (std::int64_t k = total_dist(rng); k > 0; --k) ++r[static_cast<std::size_t>(label(rng))];
    const auto phi = realize_rigid(Signature(m, r), model);
    core = phi.apply(random_matching(phi.source(), rng));
  } else {
    core = random_matching(model, rng);
  }
  std::uniform_int_distribution<std::uint64_t> seeds;
  const ComplexMatrix u = random_block_unitary(model, seeds(rng));
  const ComplexMatrix v = random_block_unitary(model, seeds(rng));
  return u * core * v.adjoint();
}

double max_block_deviation(const MatrixAlgebraModel& model, const ComplexMatrix& x) {
  const int count = model.cycle().vertex_count();
  double worst = 0;
  for (int a = 1; a <= count; ++a) {
    for (int b = 1; b <= count; ++b) worst = std::max(worst, distance_to_partial_isometry(model.block(x, a, b)));
  }
  return worst;
}

Lemma22Report check_lemma_2_2(const MatrixAlgebraModel& model, int trials, double tol, std::uint64_t seed) {
  model.cycle().require_rigid();
  if (trials < 0) throw InvalidInputError("trial count must be nonnegative");
  NumericTolerance{tol};
  Lemma22Report rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.tol = tol;
  for (int t = 0; t < trials; ++t) {
    ComplexMatrix a;
    try {
      a = random_algebra_partial_isometry(model, seed + static_cast<std::uint64_t>(t));
    } catch (const Error&) {
      ++rep.construction_failures;
      continue;
    }
    const double whole = distance_to_partial_isometry(a);
    const double dev = max_block_deviation(model, a);
    rep.max_whole_deviation = std::max(rep.max_whole_deviation, whole);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (dev > tol) {
      ++rep.failures;
      if (!rep.first_failing_trial) rep.first_failing_trial = t;
    }
  }
  rep.passed = rep.failures == 0 && rep.construction_failures == 0;
  return rep;
}

Lemma31Row check_lemma_3_1(const MatrixAlgebraModel& model, double delta, int trials, double epsilon,
                           std::uint64_t seed) {
  model.cycle().require_rigid();
  if (!(delta >= 0)) throw InvalidInputError("delta must be nonnegative");
  if (!(epsilon > 0)) throw InvalidInputError("epsilon must be positive");
  if (trials < 0) throw InvalidInputError("trial count must be nonnegative");
  Lemma31Row row;
  row.delta = delta;
  const int n = model.dimension();
  for (int t = 0; t < trials; ++t) {
    const auto trial_seed = seed + static_cast<std::uint64_t>(t);
    ComplexMatrix a = random_algebra_partial_isometry(model, trial_seed);
    if (delta > 0) {
      auto rng = make_rng(trial_seed, 0x31);
      ComplexMatrix e = gaussian(n, n, rng);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (!model.entry_supported(i, j)) e(i, j) = 0;
        }
      }
      const double norm = operator_norm(e);
      if (norm > 0) a += (delta / norm) * e;
    }
    row.max_whole_deviation = std::max(row.max_whole_deviation, distance_to_partial_isometry(a));
    row.max_entry_deviation = std::max(row.max_entry_deviation, max_block_deviation(model, a));
  }
  row.within_epsilon = row.max_entry_deviation <= epsilon;
  return row;
}

Lemma31Report check_lemma_3_1_sweep(const MatrixAlgebraModel& model, const std::vector<double>& deltas, int trials,
                                    double epsilon, std::uint64_t seed) {
  Lemma31Report rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.epsilon = epsilon;
  for (double d : deltas) rep.table.push_back(check_lemma_3_1(model, d, trials, epsilon, seed));
  return rep;
}

// ---------------------------------------------------------- regularity

RegularityResult locally_regular_details(const ComplexMatrix& x, const MatrixAlgebraModel& model, double tol) {
  const int n = model.dimension();
  if (x.rows() != n || x.cols() != n) {
    throw InvalidInputError("matrix is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                            ", model dimension is " + std::to_string(n));
  }
  const int count = model.cycle().vertex_count();
  std::vector<std::pair<unsigned, unsigned>> pairs;
  if (count <= 12) {
    const unsigned full = 1u << count;
    for (unsigned p = 1; p < full; ++p) {
      for (unsigned q = 1; q < full; ++q) pairs.emplace_back(p, q);
    }
  } else {
    // minimal pairs plus a fixed pseudo-random sample of sums
    for (int a = 0; a < count; ++a) {
      for (int b = 0; b < count; ++b) pairs.emplace_back(1u << a, 1u << b);
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<unsigned> pick(1, (1u << count) - 1);
    for (int k = 0; k < 4096; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }

  std::vector<std::vector<int>> idx_cache(static_cast<std::size_t>(1u << std::min(count, 12)));
  auto rows_of = [&](unsigned mask) -> std::vector<int> {
    if (count <= 12) {
      auto& slot = idx_cache[mask];
      if (slot.empty()) slot = indices_of(model, mask);
      return slot;
    }
    return indices_of(model, mask);
  };

  RegularityResult out;
  out.regular = true;
  unsigned worst_p = 0;
  unsigned worst_q = 0;
  for (auto [p, q] : pairs) {
    const auto r = rows_of(p);
    const auto c = rows_of(q);
    if (r.empty() || c.empty()) continue;
    ComplexMatrix sub(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x(r[i], c[j]);
    }
    ++out.pairs_checked;
    const double d = distance_to_partial_isometry(sub);
    if (d > out.worst_distance) {
      out.worst_distance = d;
      worst_p = p;
      worst_q = q;
    }
  }
  out.regular = out.worst_distance <= tol;
  out.worst_p = vertices_of(worst_p, count);
  out.worst_q = vertices_of(worst_q, count);
  return out;
}

bool locally_regular_check(const ComplexMatrix& x, const MatrixAlgebraModel& model, double tol) {
  return locally_regular_details(x, model, tol).regular;
}

// ---------------------------------------------------------- upper-triangular example

namespace {

// The four displayed 8x8 arrays, row-major as printed, scaled entries.
ComplexMatrix displayed(int which) {
  ComplexMatrix d = ComplexMatrix::Zero(8, 8);
  const double h = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 1:
      d(0, 0) = 1;
      d(1, 4) = 1;
      d(4, 1) = 1;
      d(5, 5) = 1;
      break;
    case 2:
      d(0, 2) = h;
      d(0, 6) = h;
      d(1, 2) = h;
      d(1, 6) = -h;
      d(4, 3) = h;
      d(4, 7) = h;
      d(5, 3) = h;
      d(5, 7) = -h;
      break;
    case 3:
      d(2, 2) = h;
      d(2, 3) = h;
      d(3, 6) = h;
      d(3, 7) = h;
      d(6, 2) = h;
      d(6, 3) = -h;
      d(7, 6) = h;
      d(7, 7) = -h;
      break;
    case 4:
      d(2, 0) = 1;
      d(3, 4) = 1;
      d(6, 1) = 1;
      d(7, 5) = 1;
      break;
    default:
      throw InvalidIndexError("the example has four partial isometries");
  }
  return d;
}

}  // namespace

Example23 example_2_3(double pi_tol, double regular_tol, double failure_gap) {
  // A(D_4) (x) M_4 upper triangular: odd vertices first, then even ones.
  MatrixAlgebraModel model(CycleAlgebraShape::uniform(CycleIndex(2), 4), {1, 3, 2, 4});
  Example23 ex{model, {}, ComplexMatrix(), {}, {}, {}, false, false, false};
  for (int i = 1; i <= 4; ++i) {
    ComplexMatrix v = ComplexMatrix::Zero(16, 16);
    // each display is read column by column into the corner
    v.block(0, 8, 8, 8) = displayed(i).transpose();
    ex.v.push_back(std::move(v));
  }
  ex.product = ex.v[1] * ex.v[0].adjoint();
  ex.partial_isometries_ok = true;
  ex.regular_ok = true;
  for (const auto& v : ex.v) {
    const double d = distance_to_partial_isometry(v);
    ex.pi_distance.push_back(d);
    if (d > pi_tol || model.off_support(v) > 0) ex.partial_isometries_ok = false;
    ex.v_regular.push_back(locally_regular_details(v, model, regular_tol));
    if (!ex.v_regular.back().regular) ex.regular_ok = false;
  }
  ex.product_regular = locally_regular_details(ex.product, model, regular_tol);
  ex.product_fails_ok = !ex.product_regular.regular && ex.product_regular.worst_distance >= failure_gap;
  return ex;
}

}  // namespace cyclealg
