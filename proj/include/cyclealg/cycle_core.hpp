#pragma once

// The 2m-cycle digraph D_2m, its dihedral automorphism group and the action
// on vertices.
//
// Vertices are labelled 1..2m. Odd vertices are range vertices, even vertices
// are source vertices; the edges join k and k+1 (and 2m and 1), oriented from
// the even endpoint to the odd one. Automorphisms carry the labels
// theta_1..theta_2m:
//
//   theta_1          identity
//   theta_2          the reflection fixing vertex 1 (k -> 2 - k)
//   theta_3          the shift k -> k - 2
//   theta_{2k-1}     theta_3^(k-1)
//   theta_{2k}       theta_2 o theta_{2k-1}
//
// All arithmetic on labels is mod 2m with representatives in 1..2m.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclealg {

/// Half-length of the cycle; the digraph has 2m vertices.
class CycleIndex {
 public:
  /// Throws InvalidIndexError when m < 2.
  explicit CycleIndex(int m);

  int m() const noexcept { return m_; }
  int vertex_count() const noexcept { return 2 * m_; }

  /// Rigidity theory needs m >= 3; throws InvalidIndexError for m = 2.
  void require_rigid() const;

  friend auto operator<=>(const CycleIndex&, const CycleIndex&) = default;

 private:
  int m_;
};

enum class DihedralKind : std::uint8_t { kRotation, kReflection };

/// An automorphism of D_2m stored as (kind, shift) with shift in 0..m-1.
///
///   rotation j:   v -> v - 2j
///   reflection j: v -> 2 + 2j - v
///
/// so rotation j is theta_{2j+1} and reflection j is theta_{2j+2}.
class DihedralElement {
 public:
  DihedralElement(CycleIndex m, DihedralKind kind, int shift);

  static DihedralElement identity(CycleIndex m);
  /// Builds theta_index; throws InvalidIndexError unless 1 <= index <= 2m.
  static DihedralElement from_paper_index(CycleIndex m, int index);

  CycleIndex cycle() const noexcept { return m_; }
  DihedralKind kind() const noexcept { return kind_; }
  int shift() const noexcept { return shift_; }
  bool is_rotation() const noexcept { return kind_ == DihedralKind::kRotation; }

  /// Subscript of theta, in 1..2m.
  int paper_index() const noexcept { return 2 * shift_ + (is_rotation() ? 1 : 2); }

  /// +1 for rotations, -1 for reflections: the action on H_1(D_2m) = Z.
  int orientation() const noexcept { return is_rotation() ? 1 : -1; }

  /// Image of vertex v (1-based). Throws InvalidIndexError when v is out of range.
  int act(int v) const;

  DihedralElement inverse() const;

  std::string name() const { return "theta_" + std::to_string(paper_index()); }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

 private:
  CycleIndex m_;
  DihedralKind kind_;
  int shift_;
};

/// a o b: apply b first, then a. Throws IncompatibleError on mismatched m.
DihedralElement dihedral_compose(const DihedralElement& a, const DihedralElement& b);

/// theta_1, ..., theta_2m in label order. Throws InvalidIndexError when m < 2.
std::vector<DihedralElement> enumerate_automorphisms(int m);

/// vertex_action(e, v) == e.act(v).
int vertex_action(const DihedralElement& e, int v);

/// A bijection of {1..2m}, images[k-1] = image of vertex k.
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<int> images);

  static VertexPermutation of(const DihedralElement& e);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const;
  const std::vector<int>& images() const noexcept { return images_; }

  /// (*this o other)(v) = (*this)(other(v)).
  VertexPermutation after(const VertexPermutation& other) const;

  bool preserves_parity() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// Vertex order used for K0 rows/columns: odd vertices 1,3,..,2m-1 then even
/// vertices 2,4,..,2m.
std::vector<int> k0_vertex_order(CycleIndex m);

/// Position of vertex v in k0_vertex_order.
int k0_position(CycleIndex m, int v);

}  // namespace cyclealg
