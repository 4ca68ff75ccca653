#pragma once

// JSON exchange formats. Every scalar is a rational string "p/q" (or "p").

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyop/bases.hpp"
#include "polyop/diffrep.hpp"
#include "polyop/error.hpp"
#include "polyop/operators.hpp"
#include "polyop/random.hpp"
#include "polyop/symbol.hpp"

namespace polyop::io {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw Error(Errc::parse_error, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t index_value(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars and polynomials
// ---------------------------------------------------------------------------

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  detail::malformed("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) detail::malformed("polynomial must be an array of coefficients, got " + j.dump());
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

inline json to_json(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

inline std::vector<Poly> polys_from_json(const json& j) {
  if (!j.is_array()) detail::malformed("expected an array of polynomials");
  std::vector<Poly> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(poly_from_json(e));
  return out;
}

/// Flag syntax: comma-separated ascending coefficients, e.g. "-1/4,0,1".
inline Poly parse_poly_literal(std::string_view text) {
  std::vector<Rational> c;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return {};
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(c));
}

// ---------------------------------------------------------------------------
// Sequences and bases
// ---------------------------------------------------------------------------

inline json to_json(const SequenceSpec& s) {
  if (const auto* l = std::get_if<ExplicitList>(&s)) {
    json v = json::array();
    for (const auto& r : l->values) v.push_back(to_json(r));
    return {{"list", v}};
  }
  return {{"poly_in_k", to_json(std::get<PolynomialInK>(s).f)}};
}

inline SequenceSpec sequence_from_json(const json& j) {
  if (j.is_object() && j.contains("list")) {
    const auto& l = j.at("list");
    if (!l.is_array()) detail::malformed("sequence list must be an array");
    ExplicitList out;
    for (const auto& e : l) out.values.push_back(rational_from_json(e));
    return out;
  }
  if (j.is_object() && j.contains("poly_in_k")) return PolynomialInK{poly_from_json(j.at("poly_in_k"))};
  detail::malformed("sequence must be {\"list\":[...]} or {\"poly_in_k\":[...]}");
}

inline json to_json(const BasisSpec& b) {
  return std::visit(
      [](const auto& v) -> json {
        using B = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<B, StandardBasis>) return {{"kind", "standard"}};
        else if constexpr (std::is_same_v<B, AffineBasis>)
          return {{"kind", "affine"}, {"a", to_json(v.a)}, {"b", to_json(v.b)}, {"c", to_json(v.c)}};
        else if constexpr (std::is_same_v<B, GeneralizedHermiteBasis>)
          return {{"kind", "hermite"}, {"alpha", to_json(v.alpha)}};
        else
          return {{"kind", "legendre"}};
      },
      b);
}

inline BasisSpec basis_from_json(const json& j) {
  const auto& kind = detail::field(j, "kind");
  if (!kind.is_string()) detail::malformed("basis kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "standard") return StandardBasis{};
  if (k == "legendre") return LegendreBasis{};
  if (k == "hermite") {
    Rational alpha = rational_from_json(detail::field(j, "alpha"));
    if (alpha <= 0) throw Error(Errc::bad_parameter, "hermite alpha must be positive");
    return GeneralizedHermiteBasis{alpha};
  }
  if (k == "affine") {
    AffineBasis a{j.contains("c") ? sequence_from_json(j.at("c")) : SequenceSpec{PolynomialInK{Poly{1}}},
                  rational_from_json(detail::field(j, "a")), rational_from_json(detail::field(j, "b"))};
    if (a.a == 0) throw Error(Errc::bad_parameter, "affine basis needs a != 0");
    return a;
  }
  detail::malformed("unknown basis kind '" + k + "'");
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

inline json to_json(const FunctionalSpec& f) {
  json v = json::array();
  for (const auto& r : f.values) v.push_back(to_json(r));
  return {{"values", v}, {"default", to_json(f.fallback)}};
}

inline FunctionalSpec functional_from_json(const json& j) {
  FunctionalSpec f;
  const auto& v = detail::field(j, "values");
  if (!v.is_array()) detail::malformed("functional values must be an array");
  for (const auto& e : v) f.values.push_back(rational_from_json(e));
  if (j.contains("default")) f.fallback = rational_from_json(j.at("default"));
  return f;
}

inline json to_json(const OperatorSpec& op) {
  return std::visit(
      [](const auto& v) -> json {
        using Op = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<Op, RankTwo>)
          return {{"type", "rank_two"},
                  {"alpha", to_json(v.alpha)},
                  {"beta", to_json(v.beta)},
                  {"P", to_json(v.p)},
                  {"R", to_json(v.r)}};
        else if constexpr (std::is_same_v<Op, DiagonalInBasis>)
          return {{"type", "diagonal"}, {"basis", to_json(v.basis)}, {"eigenvalues", to_json(v.eigenvalues)}};
        else if constexpr (std::is_same_v<Op, ExplicitImages>)
          return {{"type", "explicit"}, {"images", to_json(v.images)}};
        else
          return {{"type", "finite_diffop"}, {"Q", to_json(v.q)}};
      },
      op);
}

inline OperatorSpec operator_from_json(const json& j) {
  const auto& type = detail::field(j, "type");
  if (!type.is_string()) detail::malformed("operator type must be a string");
  const auto t = type.get<std::string>();
  if (t == "rank_two")
    return RankTwo{functional_from_json(detail::field(j, "alpha")), functional_from_json(detail::field(j, "beta")),
                   poly_from_json(detail::field(j, "P")), poly_from_json(detail::field(j, "R"))};
  if (t == "diagonal")
    return DiagonalInBasis{basis_from_json(detail::field(j, "basis")),
                           sequence_from_json(detail::field(j, "eigenvalues"))};
  if (t == "explicit") return ExplicitImages{polys_from_json(detail::field(j, "images"))};
  if (t == "finite_diffop") return FiniteDiffOp{polys_from_json(detail::field(j, "Q"))};
  detail::malformed("unknown operator type '" + t + "'");
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

inline json to_json(const DiffOpPrefix& rep) {
  json degrees = json::array();
  for (const auto& q : rep.q) degrees.push_back(q.is_zero() ? json(nullptr) : json(q.degree().value()));
  return {{"N", rep.order()}, {"Q", to_json(rep.q)}, {"degrees", degrees}};
}

inline DiffOpPrefix prefix_from_json(const json& j) {
  DiffOpPrefix rep;
  const std::size_t n = detail::index_value(detail::field(j, "N"), "N");
  rep.q = polys_from_json(detail::field(j, "Q"));
  if (rep.q.size() != n + 1) detail::malformed("Q must hold N+1 polynomials");
  return rep;
}

inline json to_json(const MonotoneVerdict& v) {
  if (const auto* n = std::get_if<NotMonotone>(&v)) return {{"verdict", "NotMonotone"}, {"witness", n->witness}};
  if (const auto* t = std::get_if<MonotoneThrough>(&v)) return {{"verdict", "MonotoneThrough"}, {"order", t->order}};
  return {{"verdict", "MonotoneProved"}, {"reason", std::get<MonotoneProved>(v).reason}};
}

inline json to_json(const TruncatedBiSeries& s) {
  return {{"order", s.order()}, {"w_coeffs", to_json(s.w_coeffs)}};
}

inline TruncatedBiSeries series_from_json(const json& j) {
  TruncatedBiSeries s;
  const std::size_t n = detail::index_value(detail::field(j, "order"), "order");
  s.w_coeffs = polys_from_json(detail::field(j, "w_coeffs"));
  if (s.w_coeffs.size() != n + 1) detail::malformed("w_coeffs must hold order+1 polynomials");
  return s;
}

inline json to_json(const PreserveReport& r) {
  json items = json::array();
  for (std::size_t i = 0; i < r.items.size(); ++i)
    items.push_back({{"index", i},
                     {"input", to_json(r.items[i].input)},
                     {"image", to_json(r.items[i].image)},
                     {"verdict", to_string(r.items[i].verdict)}});
  return {{"items", items}, {"violations", r.violations}, {"count", r.items.size()}};
}

// ---------------------------------------------------------------------------
// Corpora: an array of polynomials, {"polys": [...]}, or a generator
// {"seed": s, "count": n, "max_degree": d, "root_pool": b}.
// ---------------------------------------------------------------------------

inline std::vector<Poly> corpus_from_json(const json& j) {
  if (j.is_array()) return polys_from_json(j);
  if (j.is_object() && j.contains("polys")) return polys_from_json(j.at("polys"));
  if (j.is_object() && j.contains("seed")) {
    CorpusGenerator g;
    const auto& seed = j.at("seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) detail::malformed("seed must be an integer");
    g.seed = seed.get<std::uint64_t>();
    g.count = detail::index_value(detail::field(j, "count"), "count");
    g.max_degree = detail::index_value(detail::field(j, "max_degree"), "max_degree");
    if (j.contains("root_pool")) g.root_pool = static_cast<long>(detail::index_value(j.at("root_pool"), "root_pool"));
    return generate_corpus(g);
  }
  detail::malformed("corpus must be an array, {\"polys\":[...]}, or a generator object");
}

/// nlohmann parse errors become ParseError.
inline json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

}  // namespace polyop::io
