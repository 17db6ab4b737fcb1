#pragma once

// Golden fixtures: a genus-2 block diagram, and the diagrams Z_- \ {-n} with
// their ladders, first-order factorization and syzygy.

#include <string>
#include <utility>
#include <vector>

#include "extension.hpp"
#include "hermite.hpp"
#include "intertwine.hpp"
#include "io.hpp"
#include "maya.hpp"

namespace rext {

inline json block_diagram_fixture(const std::string& spec, int lo, int hi) {
  const MayaDiagram m = parse_diagram_spec(spec);
  const auto b = block_coordinates(m);
  const auto f = frobenius_symbol(m);
  json out;
  out["spec"] = spec;
  out["diagram"] = to_json(m);
  out["sigma"] = m.index();
  out["genus"] = b.genus;
  out["blockCoordinates"] = b.coords;
  out["frobenius"] = json{{"s", f.s}, {"t", f.t}};
  out["render"] = json{{"from", lo}, {"to", hi}, {"row", render_ascii(m, lo, hi)}};
  out["regular"] = is_regular(m);
  return out;
}

inline json single_flip_family_fixture(int n) {
  const MayaDiagram tilde = MayaDiagram::from_index_set({-n});
  const MayaDiagram hat = tilde.translate(n);
  const auto l1 = ladder(tilde, 1);
  const auto ln = ladder(tilde, n);
  const auto chain = first_order_factorization(tilde, ln.flip_set);
  const auto syz = syzygy(tilde, n);

  json out;
  out["n"] = n;
  out["diagram"] = to_json(tilde);
  out["blockCoordinates"] = block_coordinates(tilde).coords;
  out["genus"] = genus(tilde);
  out["translated"] = to_json(hat);
  out["ladder1"] = json{{"flipSet", l1.flip_set}, {"order", l1.order}, {"operator", to_json(l1.op)}};
  out["ladderN"] = json{{"flipSet", ln.flip_set},
                        {"order", ln.order},
                        {"orderFormula", ladder_order(tilde, n)},
                        {"operator", to_json(ln.op)}};
  json arrows = json::array();
  for (const auto& a : chain) arrows.push_back(to_json(a));
  out["factorization"] = json{{"arrows", arrows}, {"matchesLadderN", realize_chain(chain) == ln.op}};
  std::vector<int> roots = syz.polynomial_roots;
  out["syzygy"] = json{{"multiset", to_json(syz.accumulated)},
                       {"oddPart", syz.odd_part},
                       {"evenPart", to_json(syz.even_part)},
                       {"roots", roots},
                       {"identityHolds", syz.identity_holds}};
  return out;
}

/// (file name, document) pairs in a fixed order.
inline std::vector<std::pair<std::string, json>> golden_corpus() {
  std::vector<std::pair<std::string, json>> out;
  out.emplace_back("genus2_blocks.json", block_diagram_fixture("B:(2,3,5,7,10)", -3, 11));
  for (int n = 1; n <= 4; ++n) {
    out.emplace_back("single_flip_n" + std::to_string(n) + ".json", single_flip_family_fixture(n));
  }
  return out;
}

inline std::string dump_fixture(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rext
