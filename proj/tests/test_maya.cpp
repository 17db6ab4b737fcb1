#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "rext/maya.hpp"
#include "rext/verify.hpp"

using namespace rext;

namespace {

// Membership on a finite window, everything below the window assumed filled.
struct WindowSet {
  int lo, hi;
  std::set<int> members;

  static WindowSet of(const MayaDiagram& m, int lo, int hi) {
    WindowSet w{lo, hi, {}};
    for (int c = lo; c <= hi; ++c) {
      if (m.contains(c)) w.members.insert(c);
    }
    return w;
  }
  bool contains(int c) const { return c < lo || (c <= hi && members.count(c)); }
};

MayaDiagram tilde(int n) { return MayaDiagram::from_index_set({-n}); }

std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

const MayaDiagram GENUS2 = MayaDiagram::from_index_set({0, 1, 3, 4, 7, 8, 9});

}  // namespace

TEST(Maya, FromIndexSet) {
  EXPECT_EQ(MayaDiagram::from_index_set({}), MayaDiagram());
  EXPECT_EQ(MayaDiagram().index(), 0);
  EXPECT_EQ(GENUS2.index(), 7);
  for (int c = -3; c <= 11; ++c) {
    const bool expected = c < 2 || (3 <= c && c < 5) || (7 <= c && c < 10);
    EXPECT_EQ(GENUS2.contains(c), expected) << c;
  }
  EXPECT_EQ(tilde(3).index(), -1);
  EXPECT_FALSE(tilde(3).contains(-3));
  EXPECT_TRUE(tilde(3).contains(-2));
  EXPECT_THROW(MayaDiagram::from_index_set({1, 1}), std::invalid_argument);
}

TEST(Maya, ContainsAndIndex) {
  EXPECT_TRUE(MayaDiagram().contains(-1));
  EXPECT_FALSE(MayaDiagram().contains(0));
  EXPECT_FALSE(tilde(2).contains(-2));
  EXPECT_EQ(MayaDiagram::from_index_set({1, 2}).index(), 2);
  EXPECT_EQ(MayaDiagram::from_index_set({-2, 0}).index(), 0);
}

TEST(Maya, IndexMatchesMemberEnumeration) {
  // sigma is the offset of the ordered members m_1 > m_2 > ... with m_i = -i + sigma eventually
  for (const auto& m : diagram_family(-4, 4, 3)) {
    std::vector<int> members;
    for (int c = 10; c >= -20; --c) {
      if (m.contains(c)) members.push_back(c);
    }
    const int i = static_cast<int>(members.size());
    EXPECT_EQ(members.back() + i, m.index()) << format_diagram_spec(m);
  }
}

TEST(Maya, Flip) {
  EXPECT_EQ(MayaDiagram().flip(0), MayaDiagram::from_index_set({0}));
  EXPECT_EQ(MayaDiagram().flip(-2), MayaDiagram::from_index_set({-2}));
  for (const auto& m : diagram_family(-3, 3, 3)) {
    EXPECT_EQ(m.flip(5).flip(5), m);
    for (int k = -4; k <= 4; ++k) {
      const auto w = WindowSet::of(m, -10, 10);
      const auto f = m.flip(k);
      for (int c = -10; c <= 10; ++c) EXPECT_EQ(f.contains(c), c == k ? !w.contains(c) : w.contains(c));
    }
  }
}

TEST(Maya, MultiFlip) {
  EXPECT_EQ(multi_flip(MayaDiagram(), IntegerMultiset{0, 1}), MayaDiagram::from_index_set({0, 1}));
  const IntegerMultiset even{2, 2, -1, -1, -1, -1};
  for (const auto& m : diagram_family(-3, 3, 2)) EXPECT_EQ(multi_flip(m, even), m);
  EXPECT_EQ(multi_flip(tilde(2), IntegerMultiset{-2, -1, 0}), tilde(2).translate(1));
}

TEST(Maya, SymmetricDifference) {
  EXPECT_TRUE(symmetric_difference(GENUS2, GENUS2).empty());
  EXPECT_EQ(symmetric_difference(MayaDiagram(), MayaDiagram().translate(1)), std::vector<int>{0});
  EXPECT_EQ(symmetric_difference(tilde(2), tilde(2).translate(2)), (std::vector<int>{-2, 1}));
  // elementwise oracle
  for (const auto& a : diagram_family(-3, 3, 2)) {
    for (const auto& b : diagram_family(-2, 2, 2)) {
      std::vector<int> expected;
      for (int c = -8; c <= 8; ++c) {
        if (a.contains(c) != b.contains(c)) expected.push_back(c);
      }
      ASSERT_EQ(symmetric_difference(a, b), expected);
    }
  }
}

TEST(Maya, Translate) {
  EXPECT_EQ(MayaDiagram().translate(1), MayaDiagram::from_index_set({0}));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(tilde(n).translate(n), MayaDiagram::from_index_set(range(1, n - 1)));
  EXPECT_EQ(MayaDiagram::from_index_set({1, 2}).translate(-2), MayaDiagram::from_index_set({-2, 0}));
  for (const auto& m : diagram_family(-3, 3, 3)) {
    for (int n = -4; n <= 4; ++n) {
      const auto t = m.translate(n);
      EXPECT_EQ(t.index(), m.index() + n);
      for (int c = -12; c <= 12; ++c) ASSERT_EQ(t.contains(c), m.contains(c - n));
    }
  }
}

TEST(Maya, BlockCoordinates) {
  EXPECT_EQ(block_coordinates(MayaDiagram()).coords, std::vector<int>{0});
  EXPECT_EQ(genus(MayaDiagram()), 0);
  EXPECT_EQ(block_coordinates(GENUS2).coords, (std::vector<int>{2, 3, 5, 7, 10}));
  EXPECT_EQ(genus(GENUS2), 2);
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(block_coordinates(tilde(n)).coords, (std::vector<int>{-n, -n + 1, 0}));
    EXPECT_EQ(genus(tilde(n)), 1);
  }
  // Z_- \ {-1} is Z_{<= -2}, a translate of Z_-
  EXPECT_EQ(block_coordinates(tilde(1)).coords, std::vector<int>{-1});
  EXPECT_EQ(genus(tilde(1)), 0);
  EXPECT_EQ(from_block_coordinates({2, 3, 5, 7, 10}), GENUS2);
  EXPECT_THROW(from_block_coordinates({1, 2}), std::invalid_argument);
  EXPECT_THROW(from_block_coordinates({1, 1, 2}), std::invalid_argument);
}

TEST(Maya, BlockFlipIsUnitTranslationByToggling) {
  for (const auto& m : diagram_family(-4, 4, 3)) {
    auto w = WindowSet::of(m, -10, 10);
    for (int b : block_coordinates(m).coords) {
      if (w.members.count(b)) w.members.erase(b);
      else w.members.insert(b);
    }
    const auto shifted = m.translate(1);
    for (int c = -10; c <= 10; ++c) ASSERT_EQ(w.contains(c), shifted.contains(c)) << format_diagram_spec(m);
  }
}

TEST(Maya, FrobeniusSymbol) {
  const auto empty = frobenius_symbol(MayaDiagram());
  EXPECT_EQ(empty.r(), 0);
  EXPECT_EQ(empty.q(), 0);
  const auto a = frobenius_symbol(MayaDiagram::from_index_set({-2, 0}));
  EXPECT_EQ(a.s, std::vector<int>{1});
  EXPECT_EQ(a.t, std::vector<int>{0});
  const auto b = frobenius_symbol(MayaDiagram::from_index_set({1, 2}));
  EXPECT_TRUE(b.s.empty());
  EXPECT_EQ(b.t, (std::vector<int>{2, 1}));
  for (const auto& m : diagram_family(-4, 4, 3)) {
    const auto f = frobenius_symbol(m);
    EXPECT_EQ(m.index(), f.q() - f.r());
  }
}

TEST(Maya, ModularDecomposition) {
  EXPECT_EQ(modular_decompose(GENUS2, 1), std::vector<MayaDiagram>{GENUS2});
  const auto parts = modular_decompose(tilde(2), 2);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], MayaDiagram::from_index_set({-1}));  // Z_{<= -2}
  EXPECT_EQ(parts[1], MayaDiagram());
  EXPECT_EQ(genus(parts[0]), 0);
  EXPECT_EQ(modular_decompose(MayaDiagram(), 3), std::vector<MayaDiagram>(3));
  EXPECT_THROW(modular_decompose(GENUS2, 0), std::invalid_argument);
  // direct definition M_i = { m : m n + i in M }
  for (const auto& m : diagram_family(-4, 4, 3)) {
    for (int n = 1; n <= 4; ++n) {
      const auto ps = modular_decompose(m, n);
      for (int i = 0; i < n; ++i) {
        for (int c = -8; c <= 8; ++c) ASSERT_EQ(ps[i].contains(c), m.contains(c * n + i));
      }
    }
  }
}

TEST(Maya, LadderFlipSet) {
  EXPECT_EQ(ladder_flip_set(MayaDiagram(), 1), std::vector<int>{0});
  EXPECT_EQ(ladder_flip_set(tilde(1), 1), std::vector<int>{-1});
  for (int n = 1; n <= 5; ++n) {
    if (n > 1) EXPECT_EQ(ladder_flip_set(tilde(n), 1), (std::vector<int>{-n, -n + 1, 0}));
    std::vector<int> expected{-n};
    for (int i = 1; i <= n - 1; ++i) expected.push_back(i);
    EXPECT_EQ(ladder_flip_set(tilde(n), n), expected);
  }
  EXPECT_THROW(ladder_flip_set(GENUS2, 0), std::invalid_argument);
  for (const auto& m : diagram_family(-4, 4, 3)) {
    for (int n = 1; n <= 4; ++n) ASSERT_EQ(block_union_flip_set(m, n), ladder_flip_set(m, n));
  }
}

TEST(Maya, MultisetDecompose) {
  const auto a = multiset_decompose(IntegerMultiset{0, 1});
  EXPECT_EQ(a.odd_part, (std::vector<int>{0, 1}));
  EXPECT_TRUE(a.half_even.empty());
  const auto b = multiset_decompose(IntegerMultiset{0, 0});
  EXPECT_TRUE(b.odd_part.empty());
  EXPECT_EQ(b.half_even, IntegerMultiset{0});
  const auto c = multiset_decompose(IntegerMultiset{-2, -1, -1, 0, 0, 1});
  EXPECT_EQ(c.odd_part, (std::vector<int>{-2, 1}));
  EXPECT_EQ(c.half_even, (IntegerMultiset{-1, 0}));
  // K = K_0 + 2 K_1
  const IntegerMultiset k{3, 3, 3, -1, 5, 5};
  const auto d = multiset_decompose(k);
  EXPECT_EQ(IntegerMultiset::from_set(d.odd_part) + d.half_even + d.half_even, k);
}

TEST(Maya, CanonicalUnlabelled) {
  EXPECT_EQ(canonical_unlabelled(MayaDiagram()), std::make_pair(MayaDiagram(), 0));
  EXPECT_EQ(canonical_unlabelled(MayaDiagram::from_index_set({1, 2})),
            std::make_pair(MayaDiagram::from_index_set({-2, 0}), -2));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(canonical_unlabelled(tilde(n)), std::make_pair(tilde(n).translate(1), 1));
  for (const auto& m : diagram_family(-3, 3, 3)) {
    const auto [c, shift] = canonical_unlabelled(m);
    EXPECT_EQ(c.index(), 0);
    EXPECT_EQ(canonical_unlabelled(m.translate(2)).first, c);
  }
}

TEST(Maya, Render) {
  EXPECT_EQ(render_ascii(MayaDiagram(), -2, 2), "●●|○○○");
  EXPECT_EQ(render_ascii(tilde(2), -3, 1), "●○●|○○");
  EXPECT_EQ(render_ascii(GENUS2, -3, 11), "●●●|●●○●●○○●●●○○");
  EXPECT_EQ(render_ascii(tilde(2), -3, 1, {true}), "#.#|..");
  EXPECT_EQ(render_ascii(MayaDiagram(), 0, 2), "○○○");
  EXPECT_THROW(render_ascii(GENUS2, 2, 1), std::invalid_argument);
}
