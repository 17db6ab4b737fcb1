// rext: command-line front end for the rational-extension library.
//
// Exit codes: 0 success, 1 a verified identity failed, 2 usage error,
// 130 interrupted.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rext/cancel.hpp"
#include "rext/corpus.hpp"
#include "rext/extension.hpp"
#include "rext/hermite.hpp"
#include "rext/intertwine.hpp"
#include "rext/io.hpp"
#include "rext/maya.hpp"
#include "rext/verify.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

struct Options {
  std::string format = "text";
  bool ascii_safe = false;
  std::string diagram;
  std::optional<int> from, to;
  int n = 1;
  std::optional<int> k;
  std::string flips;
  std::string out_dir = "corpus";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o), json_(o.format == "json") {}

  int render() {
    const auto m = diagram();
    const auto& k = m.index_set();
    const int lo = o_.from.value_or(std::min(k.empty() ? 0 : k.front(), 0) - 3);
    const int hi = o_.to.value_or(std::max(k.empty() ? 0 : k.back(), 0) + 3);
    if (lo > hi) throw UsageError("--from must not exceed --to");
    const std::string row = rext::render_ascii(m, lo, hi, {o_.ascii_safe});
    if (json_) emit(rext::json{{"diagram", rext::to_json(m)}, {"from", lo}, {"to", hi}, {"row", row}});
    else std::cout << row << "\n";
    return 0;
  }

  int info() {
    const auto m = diagram();
    const auto b = rext::block_coordinates(m);
    const auto f = rext::frobenius_symbol(m);
    const auto [canon, shift] = rext::canonical_unlabelled(m);
    if (json_) {
      emit(rext::json{{"diagram", rext::to_json(m)},
                      {"sigma", m.index()},
                      {"genus", b.genus},
                      {"blockCoordinates", b.coords},
                      {"frobenius", {{"s", f.s}, {"t", f.t}}},
                      {"canonical", {{"diagram", rext::to_json(canon)}, {"shift", shift}}},
                      {"regular", rext::is_regular(m)}});
      return 0;
    }
    std::cout << "index set: " << rext::format_diagram_spec(m) << "\n"
              << "block coordinates: " << rext::format_block_spec(m) << "\n"
              << "sigma: " << m.index() << "\n"
              << "genus: " << b.genus << "\n"
              << "frobenius: (" << rext::join(f.s) << " | " << rext::join(f.t) << ")\n"
              << "canonical: " << rext::format_diagram_spec(canon) << " (shift " << shift << ")\n"
              << "regular: " << (rext::is_regular(m) ? "yes" : "no") << "\n";
    return 0;
  }

  int hm() {
    const auto m = diagram();
    const auto h = rext::wronskian_polynomial(m);
    const auto hh = rext::normalized_H(m);
    if (json_) {
      emit(rext::json{{"H", rext::to_string(h)},
                      {"Hhat", rext::to_string(hh)},
                      {"sigma", m.index()},
                      {"genus", rext::genus(m)},
                      {"HCoefficients", rext::to_json(h)},
                      {"HhatCoefficients", rext::to_json(hh)}});
      return 0;
    }
    std::cout << "H: " << h << "\nHhat: " << hh << "\nsigma: " << m.index() << "\ngenus: " << rext::genus(m) << "\n";
    return 0;
  }

  int potential() {
    const auto m = diagram();
    const auto u = rext::potential(m);
    if (json_) {
      emit(rext::json{{"diagram", rext::to_json(m)},
                      {"U", rext::to_json(u)},
                      {"UText", rext::to_string(u)},
                      {"T", rext::to_json(rext::schrodinger(m))}});
      return 0;
    }
    std::cout << "U: " << u << "\nT: " << rext::schrodinger(m) << "\n";
    return 0;
  }

  int eigencheck() {
    const auto m = diagram();
    std::vector<int> ks;
    if (o_.k) ks.push_back(*o_.k);
    else {
      const int lo = o_.from.value_or(-4);
      const int hi = o_.to.value_or(6);
      if (lo > hi) throw UsageError("--from must not exceed --to");
      for (int k = lo; k <= hi; ++k) ks.push_back(k);
    }
    bool all = true;
    rext::json rows = rext::json::array();
    for (int k : ks) {
      const auto st = rext::eigenfunction(m, k);
      const bool ok = rext::verify_eigen_relation(m, k);
      all = all && ok;
      if (json_) {
        rows.push_back({{"k", k},
                        {"eigenvalue", 2 * k + 1},
                        {"epsilon", st.epsilon},
                        {"bound", st.bound},
                        {"psi", rext::to_json(st.function)},
                        {"holds", ok}});
      } else {
        std::cout << "k=" << k << " eigenvalue=" << 2 * k + 1 << " bound=" << (st.bound ? "yes" : "no")
                  << " psi=" << rext::to_string(st.function) << " : " << (ok ? "holds" : "FAILS") << "\n";
      }
    }
    if (json_) emit(rext::json{{"diagram", rext::to_json(m)}, {"states", rows}, {"allHold", all}});
    return all ? 0 : 1;
  }

  int intertwiner() {
    const auto m = diagram();
    rext::IntegerMultiset k;
    for (int e : rext::parse_int_list(o_.flips)) k.add(e);
    const rext::Arrow arrow{m, k};
    const auto op = arrow.realize();
    const bool ok = rext::verify_intertwining(m, k);
    if (json_) {
      emit(rext::json{{"arrow", rext::to_json(arrow)},
                      {"target", rext::to_json(arrow.target())},
                      {"primitive", arrow.primitive()},
                      {"order", op.order()},
                      {"operator", rext::to_json(op)},
                      {"intertwines", ok}});
    } else {
      std::cout << "source: " << rext::format_diagram_spec(m) << "\n"
                << "target: " << rext::format_diagram_spec(arrow.target()) << "\n"
                << "primitive: " << (arrow.primitive() ? "yes" : "no") << "\n"
                << "order: " << op.order() << "\n"
                << "operator: " << op << "\n"
                << "intertwining: " << (ok ? "holds" : "FAILS") << "\n";
    }
    return ok ? 0 : 1;
  }

  int ladder() {
    const auto m = diagram();
    if (o_.n == 0) throw UsageError("-n must be nonzero");
    const auto l = rext::ladder(m, o_.n);
    const bool ok = rext::verify_ladder(m, o_.n);
    std::optional<int> formula;
    if (o_.n >= 1) formula = rext::ladder_order(m, o_.n);
    std::optional<rext::BigRational> coefficient;
    if (o_.k) {
      if (m.contains(*o_.k)) throw UsageError("-k must not be a member of the diagram");
      coefficient = rext::ladder_coefficient(m, o_.n, *o_.k);
    }
    if (json_) {
      rext::json out{{"diagram", rext::to_json(m)},
                     {"n", o_.n},
                     {"flipSet", l.flip_set},
                     {"order", l.order},
                     {"orderFormula", formula ? rext::json(*formula) : rext::json(nullptr)},
                     {"operator", rext::to_json(l.op)},
                     {"ladderIdentity", ok}};
      if (coefficient) out["coefficient"] = {{"k", *o_.k}, {"value", coefficient->get_str()}};
      emit(out);
    } else {
      std::cout << "flip set: {" << rext::join(l.flip_set) << "}\n"
                << "order: " << l.order << "\n";
      if (formula) std::cout << "order formula n+2*sum(g_i): " << *formula << "\n";
      std::cout << "operator: " << l.op << "\n"
                << "ladder identity: " << (ok ? "holds" : "FAILS") << "\n";
      if (coefficient) std::cout << "C(k=" << *o_.k << "): " << coefficient->get_str() << "\n";
    }
    return ok ? 0 : 1;
  }

  int syzygy() {
    const auto m = diagram();
    if (o_.n < 1) throw UsageError("-n must be positive");
    const auto s = rext::syzygy(m, o_.n);
    if (json_) {
      emit(rext::json{{"diagram", rext::to_json(m)},
                      {"n", o_.n},
                      {"multiset", rext::to_json(s.accumulated)},
                      {"oddPart", s.odd_part},
                      {"evenPart", rext::to_json(s.even_part)},
                      {"roots", s.polynomial_roots},
                      {"identityHolds", s.identity_holds}});
    } else {
      std::cout << "K_0: {" << rext::join(s.odd_part) << "}\n"
                << "K_1: {" << rext::join(multiset_elements(s.even_part)) << "}\n"
                << "roots of p: {" << rext::join(s.polynomial_roots) << "}\n"
                << "identity: " << (s.identity_holds ? "holds" : "FAILS") << "\n";
    }
    return s.identity_holds ? 0 : 1;
  }

  int regular() {
    const auto m = diagram();
    const bool parity = rext::is_regular(m);
    const int roots = rext::sturm_real_roots(rext::wronskian_polynomial(m));
    const bool agree = parity == (roots == 0);
    if (json_) {
      emit(rext::json{{"diagram", rext::to_json(m)}, {"regular", parity}, {"realRoots", roots}, {"agree", agree}});
    } else {
      std::cout << "block parity: " << (parity ? "regular" : "singular") << "\n"
                << "real roots of H: " << roots << "\n"
                << "agree: " << (agree ? "yes" : "NO") << "\n";
    }
    return agree ? 0 : 1;
  }

  int verify_all() {
    bool all = true;
    rext::json rows = rext::json::array();
    rext::verify_all({}, [&](const rext::CheckReport& r) {
      all = all && r.ok();
      if (json_) {
        rows.push_back({{"check", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"firstFailure", r.first_failure}});
      } else {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
        if (!r.ok()) std::cout << ", " << r.failures << " failures, first: " << r.first_failure;
        std::cout << ")" << std::endl;
      }
    });
    if (json_) emit(rext::json{{"checks", rows}, {"allPass", all}});
    return all ? 0 : 1;
  }

  int seed_corpus() {
    namespace fs = std::filesystem;
    fs::create_directories(o_.out_dir);
    for (const auto& [name, doc] : rext::golden_corpus()) {
      const fs::path path = fs::path(o_.out_dir) / name;
      std::ofstream out(path, std::ios::binary);
      out << rext::dump_fixture(doc);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      if (!json_) std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
  }

 private:
  static std::vector<int> multiset_elements(const rext::IntegerMultiset& k) {
    std::vector<int> out;
    for (const auto& [e, m] : k.entries()) out.insert(out.end(), m, e);
    return out;
  }

  rext::MayaDiagram diagram() const { return rext::parse_diagram_spec(o_.diagram); }

  static void emit(const rext::json& j) { std::cout << j.dump(2) << "\n"; }

  const Options& o_;
  bool json_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational extensions of the harmonic oscillator from Maya diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--ascii-safe", o.ascii_safe, "Use # and . glyphs when rendering");

  auto diagram_arg = [&o](CLI::App* sub) {
    sub->add_option("diagram", o.diagram, "Diagram spec, K:{...} or B:(...)")->required();
  };
  auto window = [&o](CLI::App* sub) {
    sub->add_option("--from", o.from, "Lower end of the window");
    sub->add_option("--to", o.to, "Upper end of the window");
  };

  auto* render = app.add_subcommand("render", "Draw the diagram as a row of boxes");
  diagram_arg(render);
  window(render);
  auto* info = app.add_subcommand("info", "Index, genus, block coordinates, Frobenius symbol");
  diagram_arg(info);
  auto* hm = app.add_subcommand("hm", "Wronskian polynomial H_M and its normalization");
  diagram_arg(hm);
  auto* potential = app.add_subcommand("potential", "Potential U_M and Hamiltonian T_M");
  diagram_arg(potential);
  auto* eigencheck = app.add_subcommand("eigencheck", "Check T_M psi_{M,k} = (2k+1) psi_{M,k}");
  diagram_arg(eigencheck);
  window(eigencheck);
  eigencheck->add_option("-k", o.k, "Single state to check");
  auto* intertwiner = app.add_subcommand("intertwiner", "Intertwiner A_{M,K} for a flip multiset");
  diagram_arg(intertwiner);
  intertwiner->add_option("--flips", o.flips, "Comma-separated flips, repeats allowed")->required();
  auto* ladder = app.add_subcommand("ladder", "Ladder operator L_n");
  diagram_arg(ladder);
  ladder->add_option("-n", o.n, "Shift")->required();
  ladder->add_option("-k", o.k, "Also report the coefficient C_{M,n,k}");
  auto* syzygy = app.add_subcommand("syzygy", "Syzygy L_1^n = L_n p(T_M)");
  diagram_arg(syzygy);
  syzygy->add_option("-n", o.n, "Power")->required();
  auto* regular = app.add_subcommand("regular", "Krein-Adler regularity vs Sturm count");
  diagram_arg(regular);
  auto* verify_all = app.add_subcommand("verify-all", "Run the invariant suite over the bounded family");
  auto* seed = app.add_subcommand("seed-corpus", "Write the golden JSON fixtures");
  seed->add_option("--out", o.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::signal(SIGINT, on_sigint);
  rext::cancel_scope scope(g_interrupted);
  Runner run(o);
  try {
    if (*render) return run.render();
    if (*info) return run.info();
    if (*hm) return run.hm();
    if (*potential) return run.potential();
    if (*eigencheck) return run.eigencheck();
    if (*intertwiner) return run.intertwiner();
    if (*ladder) return run.ladder();
    if (*syzygy) return run.syzygy();
    if (*regular) return run.regular();
    if (*verify_all) return run.verify_all();
    if (*seed) return run.seed_corpus();
  } catch (const rext::cancelled&) {
    std::cerr << "interrupted\n";
    return 130;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
