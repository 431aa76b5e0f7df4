#include "cyclealg/cycle_core.hpp"

#include "cyclealg/checked.hpp"
#include "cyclealg/errors.hpp"

namespace cyclealg {

namespace {

int wrap_vertex(int v, int n) {
  // representative in 1..n
  return static_cast<int>(checked::mod(v - 1, n)) + 1;
}

}  // namespace

CycleIndex::CycleIndex(int m) : m_(m) {
  if (m < 2) {
    throw InvalidIndexError("cycle index m must be >= 2, got " + std::to_string(m));
  }
}

void CycleIndex::require_rigid() const {
  if (m_ < 3) {
    throw InvalidIndexError("rigid embedding theory needs m >= 3 (2m-cycle with 2m >= 6), got m = " +
                            std::to_string(m_));
  }
}

DihedralElement::DihedralElement(CycleIndex m, DihedralKind kind, int shift)
    : m_(m), kind_(kind), shift_(static_cast<int>(checked::mod(shift, m.m()))) {}

DihedralElement DihedralElement::identity(CycleIndex m) {
  return DihedralElement(m, DihedralKind::kRotation, 0);
}

DihedralElement DihedralElement::from_paper_index(CycleIndex m, int index) {
  if (index < 1 || index > m.vertex_count()) {
    throw InvalidIndexError("automorphism index " + std::to_string(index) + " outside 1.." +
                            std::to_string(m.vertex_count()));
  }
  const int j = (index - 1) / 2;
  return DihedralElement(m, index % 2 == 1 ? DihedralKind::kRotation : DihedralKind::kReflection, j);
}

int DihedralElement::act(int v) const {
  const int n = m_.vertex_count();
  if (v < 1 || v > n) {
    throw InvalidIndexError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  if (is_rotation()) return wrap_vertex(v - 2 * shift_, n);
  return wrap_vertex(2 + 2 * shift_ - v, n);
}

DihedralElement DihedralElement::inverse() const {
  if (is_rotation()) return DihedralElement(m_, kind_, -shift_);
  return *this;  // reflections are involutions
}

DihedralElement dihedral_compose(const DihedralElement& a, const DihedralElement& b) {
  if (a.cycle() != b.cycle()) {
    throw IncompatibleError("cannot compose automorphisms of D_" + std::to_string(a.cycle().vertex_count()) +
                            " and D_" + std::to_string(b.cycle().vertex_count()));
  }
  const CycleIndex m = a.cycle();
  const int sa = a.shift();
  const int sb = b.shift();
  if (a.is_rotation() && b.is_rotation()) return {m, DihedralKind::kRotation, sa + sb};
  if (a.is_rotation()) return {m, DihedralKind::kReflection, sb - sa};
  if (b.is_rotation()) return {m, DihedralKind::kReflection, sa + sb};
  return {m, DihedralKind::kRotation, sb - sa};
}

std::vector<DihedralElement> enumerate_automorphisms(int m) {
  const CycleIndex idx(m);
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(idx.vertex_count()));
  for (int i = 1; i <= idx.vertex_count(); ++i) out.push_back(DihedralElement::from_paper_index(idx, i));
  return out;
}

int vertex_action(const DihedralElement& e, int v) { return e.act(v); }

VertexPermutation::VertexPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int img : images_) {
    if (img < 1 || img > n || seen[static_cast<std::size_t>(img - 1)]) {
      throw InvalidInputError("vertex images do not form a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(img - 1)] = true;
  }
}

VertexPermutation VertexPermutation::of(const DihedralElement& e) {
  std::vector<int> images;
  for (int v = 1; v <= e.cycle().vertex_count(); ++v) images.push_back(e.act(v));
  return VertexPermutation(std::move(images));
}

int VertexPermutation::operator()(int v) const {
  if (v < 1 || v > size()) {
    throw InvalidIndexError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(size()));
  }
  return images_[static_cast<std::size_t>(v - 1)];
}

VertexPermutation VertexPermutation::after(const VertexPermutation& other) const {
  if (other.size() != size()) throw IncompatibleError("permutations of different degree");
  std::vector<int> images;
  for (int v = 1; v <= size(); ++v) images.push_back((*this)(other(v)));
  return VertexPermutation(std::move(images));
}

bool VertexPermutation::preserves_parity() const {
  for (int v = 1; v <= size(); ++v) {
    if ((v - (*this)(v)) % 2 != 0) return false;
  }
  return true;
}

std::vector<int> k0_vertex_order(CycleIndex m) {
  std::vector<int> order;
  for (int v = 1; v <= m.vertex_count(); v += 2) order.push_back(v);
  for (int v = 2; v <= m.vertex_count(); v += 2) order.push_back(v);
  return order;
}

int k0_position(CycleIndex m, int v) {
  if (v < 1 || v > m.vertex_count()) {
    throw InvalidIndexError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m.vertex_count()));
  }
  return v % 2 == 1 ? (v - 1) / 2 : m.m() + (v - 2) / 2;
}

}  // namespace cyclealg
