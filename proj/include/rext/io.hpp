#pragma once

// Text grammar and JSON forms.
//
//   diagram spec   K:{k1,k2,...}       index set
//                  B:(b0,b1,...,b2g)   block coordinates
//   diagram JSON   {"indexSet":[...]}
//   polynomial     ["c0","c1",...]     ascending exact rationals "p" or "p/q"
//   rational fn    {"num":poly,"den":poly}
//   gauged         {"gauge":c,"body":rational fn}
//   operator       [a0,a1,...]         rational fn coefficient of d^j/dx^j
//   multiset       [[k,multiplicity],...]
//   arrow          {"source":diagram,"flips":multiset}

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gauged.hpp"
#include "intertwine.hpp"
#include "maya.hpp"
#include "operator.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace rext {

using json = nlohmann::ordered_json;

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  MayaDiagram parse() {
    skip_ws();
    if (pos_ >= s_.size()) throw parse_error("empty diagram spec", pos_);
    const char kind = s_[pos_];
    if (kind != 'K' && kind != 'B') throw parse_error("expected 'K:' or 'B:'", pos_);
    ++pos_;
    expect(':');
    if (kind == 'K') {
      auto values = list('{', '}');
      return MayaDiagram::from_index_set(std::move(values));
    }
    const std::size_t at = pos_;
    auto values = list('(', ')');
    if (values.size() % 2 == 0) throw parse_error("block tuple must have odd length", at);
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] <= values[i - 1]) throw parse_error("block tuple must be strictly increasing", at);
    }
    return from_block_coordinates(values);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) throw parse_error("expected an integer", start);
    if (pos_ - digits > 9) throw parse_error("integer out of range", start);
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  std::vector<int> list(char open, char close) {
    expect(open);
    std::vector<int> out;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == close) {
      ++pos_;
      finish();
      return out;
    }
    for (;;) {
      const std::size_t at = pos_;
      out.push_back(integer());
      if (open == '{') {
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
          if (out[i] == out.back()) throw parse_error("duplicate element in index set", at);
        }
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(close);
      finish();
      return out;
    }
  }
  void finish() {
    skip_ws();
    if (pos_ != s_.size()) throw parse_error("trailing characters", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MayaDiagram parse_diagram_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

inline std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string format_diagram_spec(const MayaDiagram& m) { return "K:{" + join(m.index_set()) + "}"; }
inline std::string format_block_spec(const MayaDiagram& m) { return "B:(" + join(block_coordinates(m).coords) + ")"; }

/// Parses a comma-separated integer list such as "-2,1,1"; repetitions allowed.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw parse_error("expected an integer", pos);
    }
    if (used != item.size()) throw parse_error("expected an integer", pos);
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

// JSON ------------------------------------------------------------------

inline json to_json(const MayaDiagram& m) { return json{{"indexSet", m.index_set()}}; }

inline MayaDiagram diagram_from_json(const json& j) {
  return MayaDiagram::from_index_set(j.at("indexSet").get<std::vector<int>>());
}

inline json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

inline Polynomial polynomial_from_json(const json& j) {
  std::vector<BigRational> c;
  for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
  return Polynomial(std::move(c));
}

inline json to_json(const RationalFunction& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline RationalFunction rational_function_from_json(const json& j) {
  return RationalFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

inline json to_json(const GaugedRational& f) { return json{{"gauge", f.gauge}, {"body", to_json(f.body)}}; }

inline GaugedRational gauged_from_json(const json& j) {
  return {j.at("gauge").get<int>(), rational_function_from_json(j.at("body"))};
}

inline json to_json(const DifferentialOperator& op) {
  json out = json::array();
  for (const auto& c : op.coefficients()) out.push_back(to_json(c));
  return out;
}

inline DifferentialOperator operator_from_json(const json& j) {
  std::vector<RationalFunction> c;
  for (const auto& v : j) c.push_back(rational_function_from_json(v));
  return DifferentialOperator(std::move(c));
}

inline json to_json(const IntegerMultiset& k) {
  json out = json::array();
  for (const auto& [e, m] : k.entries()) out.push_back(json::array({e, m}));
  return out;
}

inline IntegerMultiset multiset_from_json(const json& j) {
  IntegerMultiset k;
  for (const auto& pair : j) {
    const int mult = pair.at(1).get<int>();
    if (mult < 1) throw std::invalid_argument("multiset multiplicity must be positive");
    k.add(pair.at(0).get<int>(), mult);
  }
  return k;
}

inline json to_json(const Arrow& a) { return json{{"source", to_json(a.source)}, {"flips", to_json(a.flips)}}; }

inline Arrow arrow_from_json(const json& j) {
  return {diagram_from_json(j.at("source")), multiset_from_json(j.at("flips"))};
}

}  // namespace rext
