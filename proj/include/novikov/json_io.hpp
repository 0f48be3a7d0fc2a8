#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "novikov/chain_complex.hpp"
#include "novikov/collapse.hpp"
#include "novikov/cut_system.hpp"
#include "novikov/dirichlet.hpp"
#include "novikov/invariants.hpp"
#include "novikov/representation.hpp"

namespace novikov {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "novikov-forge/1";

// Parses text, turning syntax errors into ParseError with line and column.
Json parse_json_text(const std::string& text, const std::string& source);
// Reads a file ("-" for stdin) and parses it.
Json read_json_file(const std::string& path);

// Shared decoding context for ring elements.
struct JsonContext {
  std::optional<std::size_t> rank;
  ClassPtr xi;
  std::optional<Rational> cutoff;
  std::uint64_t characteristic = 0;
};

Integer integer_from_json(const Json& j, const std::string& where);
Json integer_to_json(const Integer& x);
Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& x);

CohomologyClass class_from_json(const Json& j, const std::string& where);
Json class_to_json(const CohomologyClass& xi);

// Ring tag written into complexes and matrices.
template <class Ring>
struct RingTag;
template <> struct RingTag<Integer> { static constexpr const char* value = "Z"; };
template <> struct RingTag<Rational> { static constexpr const char* value = "Q"; };
template <> struct RingTag<Fp> { static constexpr const char* value = "Fp"; };
template <> struct RingTag<GroupRingElement> { static constexpr const char* value = "ZH"; };
template <> struct RingTag<Laurent<Rational>> { static constexpr const char* value = "QH"; };
template <> struct RingTag<NovikovElement> { static constexpr const char* value = "novikov"; };
template <> struct RingTag<RationalFnR> { static constexpr const char* value = "R"; };
template <> struct RingTag<RationalFunction<Rational>> { static constexpr const char* value = "ratfield"; };
template <> struct RingTag<RationalFunction<Fp>> { static constexpr const char* value = "ratfield"; };

Json element_to_json(const Integer& x);
Json element_to_json(const Rational& x);
Json element_to_json(const Fp& x);
Json element_to_json(const GroupRingElement& x);
Json element_to_json(const Laurent<Rational>& x);
Json element_to_json(const Laurent<Fp>& x);
Json element_to_json(const NovikovElement& x);
Json element_to_json(const RationalFnR& x);
Json element_to_json(const RationalFunction<Rational>& x);
Json element_to_json(const RationalFunction<Fp>& x);

template <class Ring>
Ring element_from_json(const Json& j, const JsonContext& ctx, const std::string& where);

template <class Ring>
Json matrix_to_json(const Matrix<Ring>& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(element_to_json(m(i, k)));
    entries.push_back(std::move(row));
  }
  return Json{{"ring", RingTag<Ring>::value}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

// Accepts {"rows","cols","entries"} or a bare nested array.
template <class Ring>
Matrix<Ring> matrix_from_json(const Json& j, const JsonContext& ctx, const std::string& where,
                              std::optional<Eigen::Index> rows = std::nullopt,
                              std::optional<Eigen::Index> cols = std::nullopt) {
  const Json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw ParseError(where + ": matrix needs \"entries\"");
    entries = &j.at("entries");
    if (j.contains("rows")) rows = j.at("rows").get<Eigen::Index>();
    if (j.contains("cols")) cols = j.at("cols").get<Eigen::Index>();
  }
  if (!entries->is_array()) throw ParseError(where + ": matrix entries must be an array of rows");
  const auto r = static_cast<Eigen::Index>(entries->size());
  if (rows && *rows != r) throw ParseError(where + ": expected " + std::to_string(*rows) + " rows, got " + std::to_string(r));
  Eigen::Index c = cols.value_or(r > 0 && entries->at(0).is_array() ? static_cast<Eigen::Index>(entries->at(0).size()) : 0);
  Matrix<Ring> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = entries->at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
      throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(c) + " entries");
    }
    for (Eigen::Index k = 0; k < c; ++k) {
      m(i, k) = element_from_json<Ring>(row.at(static_cast<std::size_t>(k)), ctx,
                                        where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  return m;
}

template <class Ring>
Json complex_to_json(const ChainComplex<Ring>& x, const JsonContext& ctx = {}) {
  Json j;
  j["schema"] = kSchema;
  j["ring"] = RingTag<Ring>::value;
  if (ctx.characteristic != 0) j["char"] = ctx.characteristic;
  if (ctx.rank) j["rank"] = *ctx.rank;
  if (ctx.xi) j["xi"] = class_to_json(*ctx.xi);
  if (ctx.cutoff) j["cutoff"] = rational_to_json(*ctx.cutoff);
  j["degrees"] = x.top_degree();
  j["basis"] = x.basis();
  Json ds = Json::array();
  for (const auto& d : x.differentials()) ds.push_back(matrix_to_json(d));
  j["differentials"] = std::move(ds);
  return j;
}

// Reads the complex-level context keys ("rank", "xi", "cutoff", "char").
JsonContext context_from_json(const Json& j);

template <class Ring>
ChainComplex<Ring> complex_from_json(const Json& j, const JsonContext& ctx) {
  if (!j.is_object()) throw ParseError("complex must be a JSON object");
  if (!j.contains("basis") || !j.at("basis").is_array()) throw ParseError("complex needs a \"basis\" array");
  std::vector<std::vector<std::string>> basis;
  for (std::size_t i = 0; i < j.at("basis").size(); ++i) {
    const Json& degree = j.at("basis").at(i);
    if (!degree.is_array()) throw ParseError("basis[" + std::to_string(i) + "] must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& l : degree) {
      if (!l.is_string()) throw ParseError("basis[" + std::to_string(i) + "] labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    basis.push_back(std::move(labels));
  }
  if (j.contains("degrees") && j.at("degrees").get<long>() + 1 != static_cast<long>(basis.size())) {
    throw ParseError("\"degrees\" disagrees with the number of basis lists");
  }
  std::vector<Matrix<Ring>> ds;
  const Json empty = Json::array();
  const Json& djson = j.contains("differentials") ? j.at("differentials") : empty;
  if (!djson.is_array()) throw ParseError("\"differentials\" must be an array");
  if (basis.size() > 0 && djson.size() + 1 != basis.size()) {
    throw ParseError("complex with " + std::to_string(basis.size()) + " degrees needs " +
                     std::to_string(basis.size() - 1) + " differentials, got " + std::to_string(djson.size()));
  }
  for (std::size_t k = 0; k < djson.size(); ++k) {
    ds.push_back(matrix_from_json<Ring>(djson.at(k), ctx, "differentials[" + std::to_string(k) + "]",
                                        static_cast<Eigen::Index>(basis[k].size()),
                                        static_cast<Eigen::Index>(basis[k + 1].size())));
  }
  return ChainComplex<Ring>(std::move(basis), std::move(ds));
}

// Complex over any ring of the tower, dispatched on "ring" (default "ZH").
AnyComplex any_complex_from_json(const Json& j);
Json any_complex_to_json(const AnyComplex& x, const JsonContext& ctx = {});
std::string ring_tag(const AnyComplex& x);

Json violation_to_json(const Violation& v);

BlockPartition partition_from_json(const Json& j);

template <class Ring>
Json witness_to_json(const CollapseWitness<Ring>& w) {
  Json j;
  for (const auto& [key, maps] : {std::pair{"f", &w.f}, std::pair{"g", &w.g}, std::pair{"h", &w.h}}) {
    Json arr = Json::array();
    for (const auto& m : *maps) arr.push_back(matrix_to_json(m));
    j[key] = std::move(arr);
  }
  return j;
}

MonodromyRep bundle_from_json(const Json& j);
CutSystem cut_system_from_json(const Json& j);
Json generators_to_json(const std::vector<std::vector<GeneratorId>>& g);

MinimalPolynomialCandidate candidate_from_text(const std::string& text);
IntPoly int_poly_from_json(const Json& j, const std::string& where);
// Highest degree first, as in the polynomial syntax of the CLI.
Json int_poly_to_json(const IntPoly& p);

Json checks_to_json(const std::vector<InequalityCheck>& checks);
NovikovNumbers numbers_from_json(const Json& j);
Json numbers_to_json(const NovikovNumbers& n);

std::vector<std::size_t> counts_from_json(const Json& j, const std::string& where);

}  // namespace novikov
