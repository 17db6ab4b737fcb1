#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "rext/extension.hpp"
#include "rext/hermite.hpp"
#include "rext/verify.hpp"

using namespace rext;

namespace {

const Polynomial X = Polynomial::x();

// (-1)^n e^{x^2} d^n/dx^n e^{-x^2}
Polynomial rodrigues(int n) {
  GaugedRational f{-2, 1};
  for (int i = 0; i < n; ++i) f = derivative(f);
  return (n % 2 ? -f.body : f.body).num();
}

MayaDiagram k_set(std::vector<int> k) { return MayaDiagram::from_index_set(std::move(k)); }

}  // namespace

TEST(Hermite, Examples) {
  EXPECT_EQ(hermite(0), Polynomial(1));
  EXPECT_EQ(hermite(2), Polynomial({-2, 0, 4}));
  EXPECT_EQ(hermite(3), Polynomial({0, -12, 0, 8}));
  EXPECT_THROW(hermite(-1), std::invalid_argument);
}

TEST(Hermite, MatchesRodriguesFormula) {
  for (int n = 0; n <= 14; ++n) EXPECT_EQ(hermite(n), rodrigues(n)) << n;
}

TEST(Hermite, ConjugateExamplesAndRecurrence) {
  EXPECT_EQ(conjugate_hermite(1), 2 * X);
  EXPECT_EQ(conjugate_hermite(2), Polynomial({2, 0, 4}));
  EXPECT_EQ(conjugate_hermite(3), Polynomial({0, 12, 0, 8}));
  // H~_{n+1} = 2x H~_n + H~_n'
  for (int n = 0; n < 14; ++n) {
    const auto h = conjugate_hermite(n);
    ASSERT_EQ(conjugate_hermite(n + 1), 2 * X * h + derivative(h));
    for (const auto& c : h.coefficients()) ASSERT_GE(c, 0);
  }
}

TEST(Hermite, Psi) {
  EXPECT_EQ(psi(0), (GaugedRational{-1, 1}));
  EXPECT_EQ(psi(1), (GaugedRational{-1, RationalFunction(2 * X)}));
  EXPECT_EQ(psi(-1), (GaugedRational{1, 1}));
  // -psi'' + x^2 psi = (2n+1) psi for every integer n
  for (int n = -8; n <= 8; ++n) {
    const auto f = psi(n);
    const auto f2 = derivative(derivative(f));
    const GaugedRational lhs{f.gauge, RationalFunction(Polynomial{0, 0, 1}) * f.body - f2.body};
    ASSERT_EQ(lhs, BigRational(2 * n + 1) * f) << n;
  }
}

TEST(Hermite, WronskianPolynomial) {
  EXPECT_EQ(wronskian_polynomial(MayaDiagram()), Polynomial(1));
  EXPECT_EQ(wronskian_polynomial(k_set({-1, 0})), -2 * X);
  EXPECT_EQ(wronskian_polynomial(k_set({1, 2})), Polynomial({4, 0, 8}));
}

TEST(Hermite, PseudoWronskian) {
  EXPECT_EQ(pseudo_wronskian(MayaDiagram()), Polynomial(1));
  EXPECT_EQ(pseudo_wronskian(k_set({-2, 0})), -Polynomial({2, 0, 4}));
  EXPECT_EQ(pseudo_wronskian(k_set({1, 2})), Polynomial({4, 0, 8}));
}

TEST(Hermite, NormalizedH) {
  EXPECT_EQ(normalized_H(MayaDiagram()), Polynomial(1));
  EXPECT_EQ(normalized_H(k_set({1, 2})), Polynomial({2, 0, 4}));
  EXPECT_EQ(normalized_H(k_set({-2, 0})), Polynomial({2, 0, 4}));
}

TEST(Hermite, WronskianEqualsPseudoWronskianOnFamily) {
  for (const auto& m : diagram_family(-4, 4, 3)) {
    ASSERT_EQ(wronskian_polynomial(m), pseudo_wronskian(m)) << format_diagram_spec(m);
  }
}

TEST(Hermite, NormalizedHIsTranslationInvariant) {
  for (const auto& m : diagram_family(-3, 3, 3)) {
    const auto h = normalized_H(m);
    for (int n = -3; n <= 3; ++n) ASSERT_EQ(normalized_H(m.translate(n)), h) << format_diagram_spec(m) << " " << n;
  }
}

TEST(Hermite, DegreeOfWronskianPolynomial) {
  // degree is the size of the partition lambda_i = m_i + i read off the
  // index-0 translate, whose members are m_1 > m_2 > ...
  for (const auto& m : diagram_family(-3, 3, 3)) {
    const auto c = canonical_unlabelled(m).first;
    long cells = 0;
    int i = 1;
    for (int v = 20; v >= -20; --v) {
      if (!c.contains(v)) continue;
      cells += v + i;
      ++i;
    }
    ASSERT_EQ(normalized_H(m).degree(), cells) << format_diagram_spec(m);
  }
}

TEST(Hermite, CacheIsSafeUnderConcurrentUse) {
  std::vector<Polynomial> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([t, &results] {
      for (int n = 0; n <= 30; ++n) results[t] = hermite(30 - n + t);
      results[t] = wronskian_polynomial(MayaDiagram::from_index_set({1, 2, 5}));
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, wronskian_polynomial(MayaDiagram::from_index_set({1, 2, 5})));
}
