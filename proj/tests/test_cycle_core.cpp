#include <gtest/gtest.h>

#include "cyclealg/cycle_core.hpp"
#include "cyclealg/errors.hpp"
#include "oracles.hpp"

using namespace cyclealg;

namespace {

DihedralElement theta(int m, int label) { return DihedralElement::from_paper_index(CycleIndex(m), label); }

}  // namespace

TEST(CycleIndex, RejectsSmallM) {
  EXPECT_THROW(CycleIndex(1), InvalidIndexError);
  EXPECT_NO_THROW(CycleIndex(2));
  EXPECT_THROW(CycleIndex(2).require_rigid(), InvalidIndexError);
  EXPECT_NO_THROW(CycleIndex(3).require_rigid());
}

TEST(Dihedral, EnumerationM3) {
  const auto all = enumerate_automorphisms(3);
  ASSERT_EQ(all.size(), 6u);
  for (const auto& e : all) EXPECT_EQ(e.is_rotation(), e.paper_index() % 2 == 1);
  EXPECT_EQ(all[0], DihedralElement::identity(CycleIndex(3)));
}

TEST(Dihedral, VertexActionExamples) {
  EXPECT_EQ(vertex_action(theta(3, 3), 3), 1);
  EXPECT_EQ(vertex_action(theta(3, 2), 1), 1);
  for (int v = 1; v <= 6; ++v) EXPECT_EQ(vertex_action(theta(3, 1), v), v);
  EXPECT_THROW(theta(3, 1).act(7), InvalidIndexError);
  EXPECT_THROW(theta(3, 7), InvalidIndexError);
  EXPECT_THROW(theta(3, 0), InvalidIndexError);
}

TEST(Dihedral, CompositionExamples) {
  EXPECT_EQ(dihedral_compose(theta(3, 2), theta(3, 2)), theta(3, 1));
  EXPECT_EQ(dihedral_compose(theta(3, 3), theta(3, 3)), theta(3, 5));
  const auto r = dihedral_compose(theta(3, 2), theta(3, 3));
  EXPECT_FALSE(r.is_rotation());
  EXPECT_EQ(r.paper_index(), oracle::compose_labels(3, 2, 3));
  EXPECT_EQ(r, theta(3, 4));
  EXPECT_THROW(dihedral_compose(theta(3, 1), theta(4, 1)), IncompatibleError);
}

TEST(Dihedral, PowerOfShiftM4) {
  auto p = VertexPermutation::of(theta(4, 3));
  auto acc = p;
  for (int i = 0; i < 3; ++i) acc = p.after(acc);
  EXPECT_EQ(acc, VertexPermutation::of(theta(4, 1)));
}

TEST(Dihedral, LabelFormulasMatchOracle) {
  for (int m = 2; m <= 7; ++m) {
    for (int label = 1; label <= 2 * m; ++label) {
      EXPECT_EQ(VertexPermutation::of(theta(m, label)).images(), oracle::theta_permutation(m, label))
          << "m=" << m << " label=" << label;
    }
  }
}

TEST(Dihedral, GroupTableAgainstPermutations) {
  for (int m = 2; m <= 7; ++m) {
    for (const auto& a : enumerate_automorphisms(m)) {
      for (const auto& b : enumerate_automorphisms(m)) {
        const auto c = dihedral_compose(a, b);
        EXPECT_EQ(c.paper_index(), oracle::compose_labels(m, a.paper_index(), b.paper_index()));
        EXPECT_EQ(VertexPermutation::of(c), VertexPermutation::of(a).after(VertexPermutation::of(b)));
      }
    }
  }
}

TEST(Dihedral, GroupAxiomsProperty) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = static_cast<int>(gen.uniform(2, 9));
    const auto a = gen.element(m);
    const auto b = gen.element(m);
    const auto c = gen.element(m);
    const auto id = DihedralElement::identity(CycleIndex(m));
    EXPECT_EQ(dihedral_compose(dihedral_compose(a, b), c), dihedral_compose(a, dihedral_compose(b, c)));
    EXPECT_EQ(dihedral_compose(a, id), a);
    EXPECT_EQ(dihedral_compose(id, a), a);
    EXPECT_EQ(dihedral_compose(a, a.inverse()), id);
    EXPECT_EQ(a.orientation() * b.orientation(), dihedral_compose(a, b).orientation());
  }
}

TEST(Dihedral, ActionIsParityPreservingAutomorphism) {
  for (int m = 2; m <= 8; ++m) {
    const int n = 2 * m;
    for (const auto& e : enumerate_automorphisms(m)) {
      const auto p = VertexPermutation::of(e);
      EXPECT_TRUE(p.preserves_parity());
      for (int v = 1; v <= n; ++v) {
        // edges {v, v+1} go to edges
        const int w = v % n + 1;
        const int d = ((p(w) - p(v)) % n + n) % n;
        EXPECT_TRUE(d == 1 || d == n - 1);
        EXPECT_EQ(d == 1, e.is_rotation());
      }
    }
  }
}

TEST(VertexPermutation, RejectsNonBijection) {
  EXPECT_THROW(VertexPermutation({1, 1, 2, 3}), InvalidInputError);
  EXPECT_THROW(VertexPermutation({0, 1, 2, 3}), InvalidInputError);
  EXPECT_THROW(VertexPermutation({1, 2, 3, 4})(5), InvalidIndexError);
}

TEST(K0Order, OddThenEven) {
  const CycleIndex m(3);
  EXPECT_EQ(k0_vertex_order(m), (std::vector<int>{1, 3, 5, 2, 4, 6}));
  for (int i = 0; i < 6; ++i) EXPECT_EQ(k0_position(m, k0_vertex_order(m)[static_cast<std::size_t>(i)]), i);
  EXPECT_THROW(k0_position(m, 0), InvalidIndexError);
}
