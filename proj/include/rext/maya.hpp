#pragma once

// Maya diagrams: subsets of Z that contain every sufficiently negative
// integer and only finitely many non-negative ones.
//
// A diagram is encoded by its index set K, the symmetric difference with the
// trivial diagram Z_- = {..., -2, -1}. K is finite, which turns every
// operation below into finite set manipulation.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rext {

class MayaDiagram {
 public:
  /// The trivial diagram Z_-.
  MayaDiagram() = default;

  /// Diagram f_K(Z_-). Throws on duplicate elements.
  static MayaDiagram from_index_set(std::vector<int> k) {
    std::sort(k.begin(), k.end());
    if (std::adjacent_find(k.begin(), k.end()) != k.end()) {
      throw std::invalid_argument("index set contains duplicate elements");
    }
    MayaDiagram m;
    m.k_ = std::move(k);
    return m;
  }

  /// Sorted ascending.
  const std::vector<int>& index_set() const { return k_; }

  bool contains(int m) const { return (m < 0) != std::binary_search(k_.begin(), k_.end(), m); }

  /// sigma = #{k in K : k >= 0} - #{k in K : k < 0}.
  int index() const {
    const auto first_nonneg = std::lower_bound(k_.begin(), k_.end(), 0);
    const auto negatives = static_cast<int>(std::distance(k_.begin(), first_nonneg));
    return static_cast<int>(k_.size()) - 2 * negatives;
  }

  MayaDiagram flip(int k) const {
    MayaDiagram out = *this;
    const auto it = std::lower_bound(out.k_.begin(), out.k_.end(), k);
    if (it != out.k_.end() && *it == k) out.k_.erase(it);
    else out.k_.insert(it, k);
    return out;
  }

  /// M + n.
  MayaDiagram translate(int n) const {
    if (n == 0) return *this;
    // m in M+n iff m-n in M; only positions between the two origins and the
    // shifted index set can differ from Z_-.
    std::vector<int> out;
    const int lo = std::min(0, n) - 1;
    const int hi = std::max(0, n);
    std::set<int> candidates;
    for (int k : k_) candidates.insert(k + n);
    for (int m = lo; m <= hi; ++m) candidates.insert(m);
    for (int m : candidates) {
      if (contains(m - n) != (m < 0)) out.push_back(m);
    }
    return from_index_set(std::move(out));
  }

  friend bool operator==(const MayaDiagram& a, const MayaDiagram& b) { return a.k_ == b.k_; }
  friend bool operator<(const MayaDiagram& a, const MayaDiagram& b) { return a.k_ < b.k_; }

 private:
  std::vector<int> k_;
};

/// Finite integer multiset; union is multiplicity addition.
class IntegerMultiset {
 public:
  IntegerMultiset() = default;
  IntegerMultiset(std::initializer_list<int> elements) {
    for (int e : elements) add(e);
  }
  static IntegerMultiset from_set(const std::vector<int>& elements) {
    IntegerMultiset m;
    for (int e : elements) m.add(e);
    return m;
  }

  void add(int element, int multiplicity = 1) {
    if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    if (multiplicity == 0) return;
    entries_[element] += multiplicity;
  }

  int multiplicity(int element) const {
    const auto it = entries_.find(element);
    return it == entries_.end() ? 0 : it->second;
  }
  const std::map<int, int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int cardinality() const {
    int total = 0;
    for (const auto& [e, m] : entries_) total += m;
    return total;
  }
  bool is_set() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second == 1; });
  }
  bool is_even() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second % 2 == 0; });
  }
  /// Distinct elements, ascending.
  std::vector<int> support() const {
    std::vector<int> out;
    for (const auto& [e, m] : entries_) out.push_back(e);
    return out;
  }
  IntegerMultiset shifted(int n) const {
    IntegerMultiset out;
    for (const auto& [e, m] : entries_) out.add(e + n, m);
    return out;
  }

  friend IntegerMultiset operator+(IntegerMultiset a, const IntegerMultiset& b) {
    for (const auto& [e, m] : b.entries_) a.add(e, m);
    return a;
  }
  friend bool operator==(const IntegerMultiset& a, const IntegerMultiset& b) { return a.entries_ == b.entries_; }

 private:
  std::map<int, int> entries_;
};

struct MultisetParts {
  std::vector<int> odd_part;  // K_0: elements of odd multiplicity
  IntegerMultiset half_even;  // K_1: K = K_0 + K_1 + K_1
};

inline MultisetParts multiset_decompose(const IntegerMultiset& k) {
  MultisetParts parts;
  for (const auto& [e, m] : k.entries()) {
    if (m % 2 == 1) parts.odd_part.push_back(e);
    parts.half_even.add(e, m / 2);
  }
  return parts;
}

inline MayaDiagram from_index_set(std::vector<int> k) { return MayaDiagram::from_index_set(std::move(k)); }
inline bool contains(const MayaDiagram& m, int k) { return m.contains(k); }
inline int index(const MayaDiagram& m) { return m.index(); }
inline MayaDiagram flip(const MayaDiagram& m, int k) { return m.flip(k); }
inline MayaDiagram translate(const MayaDiagram& m, int n) { return m.translate(n); }

inline MayaDiagram multi_flip(const MayaDiagram& m, const std::vector<int>& k) {
  MayaDiagram out = m;
  for (int e : k) out = out.flip(e);
  return out;
}

/// f_K(M) = f_{K_0}(M): even multiplicities cancel.
inline MayaDiagram multi_flip(const MayaDiagram& m, const IntegerMultiset& k) {
  return multi_flip(m, multiset_decompose(k).odd_part);
}

/// M1 (-) M2; ascending.
inline std::vector<int> symmetric_difference(const MayaDiagram& a, const MayaDiagram& b) {
  // M1 (-) M2 = K1 (-) K2, since both are measured against Z_-.
  std::vector<int> out;
  std::set_symmetric_difference(a.index_set().begin(), a.index_set().end(), b.index_set().begin(),
                                b.index_set().end(), std::back_inserter(out));
  return out;
}

struct BlockCoordinates {
  std::vector<int> coords;  // b_0 < b_1 < ... < b_{2g}
  int genus = 0;
};

/// Xi(B) = (-inf, b_0) u [b_1, b_2) u ... u [b_{2g-1}, b_{2g}).
inline MayaDiagram from_block_coordinates(const std::vector<int>& b) {
  if (b.size() % 2 == 0) throw std::invalid_argument("block coordinates must have odd length");
  if (std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) != b.end()) {
    throw std::invalid_argument("block coordinates must be strictly increasing");
  }
  auto member = [&b](int m) {
    if (m < b[0]) return true;
    for (std::size_t i = 1; i + 1 < b.size(); i += 2) {
      if (b[i] <= m && m < b[i + 1]) return true;
    }
    return false;
  };
  std::vector<int> k;
  for (int m = std::min(b.front(), 0); m <= std::max(b.back(), 0); ++m) {
    if (member(m) != (m < 0)) k.push_back(m);
  }
  return MayaDiagram::from_index_set(std::move(k));
}

/// Block coordinates: the boundaries where membership changes, which is
/// also the unique set B with f_B(M) = M + 1.
inline BlockCoordinates block_coordinates(const MayaDiagram& m) {
  const auto& k = m.index_set();
  const int lo = std::min(k.empty() ? 0 : k.front(), 0) - 1;
  const int hi = std::max(k.empty() ? 0 : k.back(), 0) + 1;
  BlockCoordinates out;
  // b is a boundary iff b-1 in M differs from b in M.
  for (int b = lo + 1; b <= hi; ++b) {
    if (m.contains(b - 1) != m.contains(b)) out.coords.push_back(b);
  }
  out.genus = static_cast<int>(out.coords.size() - 1) / 2;
  return out;
}

inline int genus(const MayaDiagram& m) { return block_coordinates(m).genus; }

struct FrobeniusSymbol {
  std::vector<int> s;  // s_1 > ... > s_r >= 0
  std::vector<int> t;  // t_1 > ... > t_q >= 0
  int r() const { return static_cast<int>(s.size()); }
  int q() const { return static_cast<int>(t.size()); }
  friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

inline FrobeniusSymbol frobenius_symbol(const MayaDiagram& m) {
  FrobeniusSymbol f;
  for (int k : m.index_set()) {
    if (k < 0) f.s.push_back(-1 - k);  // ascending k gives descending s
  }
  for (auto it = m.index_set().rbegin(); it != m.index_set().rend(); ++it) {
    if (*it >= 0) f.t.push_back(*it);
  }
  return f;
}

/// M_i = { m : m n + i in M }, i = 0..n-1.
inline std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, int n) {
  if (n < 1) throw std::invalid_argument("modular_decompose: n must be positive");
  std::vector<std::vector<int>> ks(n);
  for (int k : m.index_set()) {
    // floor division so that negative k land in the right residue class
    const int i = ((k % n) + n) % n;
    const int q = (k - i) / n;
    ks[i].push_back(q);
  }
  std::vector<MayaDiagram> out;
  out.reserve(n);
  for (auto& k : ks) out.push_back(MayaDiagram::from_index_set(std::move(k)));
  return out;
}

/// (M + n) (-) M. n = 0 is rejected as a degenerate ladder.
inline std::vector<int> ladder_flip_set(const MayaDiagram& m, int n) {
  if (n == 0) throw std::invalid_argument("ladder_flip_set: n must be nonzero");
  return symmetric_difference(m.translate(n), m);
}

/// Union over residues i of n B_i + i, where B_i are the block coordinates of
/// the i-th modular component. Equals ladder_flip_set(m, n) for n >= 1.
inline std::vector<int> block_union_flip_set(const MayaDiagram& m, int n) {
  std::vector<int> out;
  const auto parts = modular_decompose(m, n);
  for (int i = 0; i < n; ++i) {
    for (int b : block_coordinates(parts[i]).coords) out.push_back(b * n + i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The translate with index 0, and the shift that produced it.
inline std::pair<MayaDiagram, int> canonical_unlabelled(const MayaDiagram& m) {
  const int shift = -m.index();
  return {m.translate(shift), shift};
}

struct RenderStyle {
  bool ascii_safe = false;
};

/// One glyph per cell of [lo, hi]; "|" marks the origin between -1 and 0.
inline std::string render_ascii(const MayaDiagram& m, int lo, int hi, RenderStyle style = {}) {
  if (lo > hi) throw std::invalid_argument("render: empty window");
  const char* filled = style.ascii_safe ? "#" : "●";
  const char* empty = style.ascii_safe ? "." : "○";
  std::string out;
  for (int c = lo; c <= hi; ++c) {
    if (c == 0 && lo < 0) out += "|";
    out += m.contains(c) ? filled : empty;
  }
  return out;
}

}  // namespace rext
