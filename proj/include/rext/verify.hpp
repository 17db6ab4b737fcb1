#pragma once

// Invariant suite over a bounded family of diagrams, used by `verify-all`.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "extension.hpp"
#include "hermite.hpp"
#include "intertwine.hpp"
#include "io.hpp"
#include "maya.hpp"

namespace rext {

/// Every subset of [lo, hi] with at most max_size elements, as diagrams.
inline std::vector<MayaDiagram> diagram_family(int lo, int hi, int max_size) {
  std::vector<MayaDiagram> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    out.push_back(MayaDiagram::from_index_set(current));
    if (static_cast<int>(current.size()) == max_size) return;
    for (int v = next; v <= hi; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(lo);
  return out;
}

struct FamilyBounds {
  int lo = -4;
  int hi = 4;
  int max_size = 3;
  int max_shift = 3;
  // flip sets used by the operator checks
  int flip_lo = -3;
  int flip_hi = 3;
  int flip_max_size = 2;
};

struct CheckReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void record(bool passed, const std::string& what) {
    ++cases;
    if (!passed && failures++ == 0) first_failure = what;
  }
};

namespace detail {

inline std::string describe(const MayaDiagram& m) { return format_diagram_spec(m); }

}  // namespace detail

inline CheckReport check_combinatorics(const std::vector<MayaDiagram>& fam, const FamilyBounds& b) {
  CheckReport r{"combinatorics: flips, edges, index shift, blocks, Frobenius"};
  for (const auto& m : fam) {
    const auto d = detail::describe(m);
    for (int k = b.lo - 1; k <= b.hi + 1; ++k) {
      r.record(m.flip(k).flip(k) == m, d + " involution at " + std::to_string(k));
      r.record(m.flip(k).flip(b.lo) == m.flip(b.lo).flip(k), d + " commutation at " + std::to_string(k));
    }
    for (std::size_t j = 0; j < fam.size(); j += 11) {
      const auto& other = fam[j];
      r.record(multi_flip(m, symmetric_difference(m, other)) == other &&
                   multi_flip(other, symmetric_difference(m, other)) == m,
               d + " edge property with " + detail::describe(other));
    }
    for (int n = -b.max_shift; n <= b.max_shift; ++n) {
      r.record(m.translate(n).index() == m.index() + n, d + " index shift " + std::to_string(n));
    }
    const auto bc = block_coordinates(m);
    r.record(multi_flip(m, bc.coords) == m.translate(1), d + " block flip gives M+1");
    r.record(from_block_coordinates(bc.coords) == m, d + " Xi(B) = M");
    const auto f = frobenius_symbol(m);
    r.record(m.index() == f.q() - f.r(), d + " sigma = q - r");
  }
  return r;
}

inline CheckReport check_wronskians(const std::vector<MayaDiagram>& fam, const FamilyBounds& b) {
  CheckReport r{"hermite: Wronskian = pseudo-Wronskian, normalized H translation invariant"};
  for (const auto& m : fam) {
    const auto d = detail::describe(m);
    r.record(wronskian_polynomial(m) == pseudo_wronskian(m), d + " Wronskian vs pseudo-Wronskian");
    const Polynomial h = normalized_H(m);
    for (int n = -b.max_shift; n <= b.max_shift; ++n) {
      r.record(normalized_H(m.translate(n)) == h, d + " normalized H shift " + std::to_string(n));
    }
  }
  return r;
}

inline CheckReport check_extensions(const std::vector<MayaDiagram>& fam, const FamilyBounds& b) {
  CheckReport r{"extension: eigen-relation, covariance, two potential forms, Krein-Adler"};
  for (const auto& m : fam) {
    const auto d = detail::describe(m);
    for (int k = -4; k <= 6; ++k) r.record(verify_eigen_relation(m, k), d + " eigen-relation k=" + std::to_string(k));
    const RationalFunction u = potential(m);
    r.record(u == potential_from_log_wronskian(m), d + " potential forms");
    for (int n = -b.max_shift; n <= b.max_shift; ++n) {
      r.record(potential(m.translate(n)) == u + RationalFunction(2 * n), d + " covariance n=" + std::to_string(n));
    }
    r.record(regularity_agrees_with_sturm(m), d + " Krein-Adler");
  }
  return r;
}

inline CheckReport check_intertwiners(const std::vector<MayaDiagram>& fam, const FamilyBounds& b) {
  CheckReport r{"intertwine: intertwining, monic order, translation invariance, functor law"};
  const auto flips = diagram_family(b.flip_lo, b.flip_hi, b.flip_max_size);
  std::size_t counter = 0;
  for (const auto& m : fam) {
    const auto d = detail::describe(m);
    for (const auto& kd : flips) {
      const auto& k = kd.index_set();
      const auto what = d + " K={" + join(k) + "}";
      const auto a = intertwiner(m, k);
      r.record(a.is_monic() && a.order() == static_cast<long>(k.size()), what + " monic order");
      const auto ks = IntegerMultiset::from_set(k);
      r.record(compose(a, schrodinger(m)) == compose(schrodinger(multi_flip(m, ks)), a), what + " intertwining");
      // one rotating shift per pair keeps every shift exercised
      const int n = static_cast<int>(counter++ % (2 * b.max_shift)) - b.max_shift;
      const int shift = n >= 0 ? n + 1 : n;
      std::vector<int> kn;
      for (int e : k) kn.push_back(e + shift);
      r.record(intertwiner(m.translate(shift), kn) == a, what + " translation by " + std::to_string(shift));
    }
  }
  // functor law on singletons, including the repeated flip
  for (const auto& m : fam) {
    for (int k1 = -2; k1 <= 2; ++k1) {
      for (int k2 = -2; k2 <= 2; ++k2) {
        r.record(verify_functor(m, IntegerMultiset{k1}, IntegerMultiset{k2}),
                 detail::describe(m) + " functor {" + std::to_string(k1) + "},{" + std::to_string(k2) + "}");
      }
    }
  }
  return r;
}

inline CheckReport check_ladders(const std::vector<MayaDiagram>& fam, const FamilyBounds& b) {
  CheckReport r{"ladder: ladder identity, order formula, syzygy, coefficients"};
  for (const auto& m : fam) {
    const auto d = detail::describe(m);
    for (int n = -b.max_shift; n <= b.max_shift; ++n) {
      if (n == 0) continue;
      r.record(verify_ladder(m, n), d + " ladder identity n=" + std::to_string(n));
      if (n < 1) continue;
      r.record(ladder(m, n).order == ladder_order(m, n), d + " order formula n=" + std::to_string(n));
      r.record(syzygy(m, n).identity_holds, d + " syzygy n=" + std::to_string(n));
    }
  }
  const MayaDiagram trivial;
  for (int n = 1; n <= b.max_shift; ++n) {
    for (int k = 0; k <= 6; ++k) {
      const BigRational expected = k >= n ? pochhammer_ladder_coefficient(n, k) : BigRational(0);
      r.record(ladder_coefficient(trivial, n, k) == expected,
               "coefficient n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return r;
}

inline std::vector<CheckReport> verify_all(const FamilyBounds& b = {},
                                           const std::function<void(const CheckReport&)>& on_done = {}) {
  const auto fam = diagram_family(b.lo, b.hi, b.max_size);
  std::vector<CheckReport> out;
  for (auto check : {check_combinatorics, check_wronskians, check_extensions, check_intertwiners, check_ladders}) {
    out.push_back(check(fam, b));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace rext
