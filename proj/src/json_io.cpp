#include "novikov/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace novikov {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string text_of(const Json& j) { return j.dump(); }

template <class C>
C coef_from_json(const Json& j, const JsonContext& ctx, const std::string& where);
template <>
Integer coef_from_json<Integer>(const Json& j, const JsonContext&, const std::string& where) {
  return integer_from_json(j, where);
}
template <>
Rational coef_from_json<Rational>(const Json& j, const JsonContext&, const std::string& where) {
  return rational_from_json(j, where);
}
template <>
Fp coef_from_json<Fp>(const Json& j, const JsonContext& ctx, const std::string& where) {
  if (ctx.characteristic < 2) throw ParseError(where + ": F_p entries need \"char\"");
  return Fp::from_rational(rational_from_json(j, where), ctx.characteristic);
}

Json coef_to_json(const Integer& c) { return integer_to_json(c); }
Json coef_to_json(const Rational& c) { return rational_to_json(c); }
Json coef_to_json(const Fp& c) { return c.value(); }

template <class C>
Laurent<C> laurent_from_json(const Json& j, const JsonContext& ctx, const std::string& where) {
  if (!j.is_object()) {
    C c = coef_from_json<C>(j, ctx, where);
    if (ctx.rank) return Laurent<C>::constant(*ctx.rank, c);
    Laurent<C> p;
    p.add_term(Exponent{}, c);
    return p;
  }
  std::optional<std::size_t> rank = ctx.rank;
  if (j.contains("rank")) {
    auto r = j.at("rank").get<std::size_t>();
    if (rank && *rank != r) {
      throw DimensionError(where + ": element of rank " + std::to_string(r) + " in a context of rank " +
                           std::to_string(*rank));
    }
    rank = r;
  }
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) throw ParseError(where + ": \"terms\" must be an array");
  Laurent<C> p = rank ? Laurent<C>(*rank) : Laurent<C>();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string w = where + ".terms[" + std::to_string(k) + "]";
    const Json& t = terms.at(k);
    Exponent e = field(t, "exp", w).get<Exponent>();
    if (rank && e.size() != *rank) {
      throw DimensionError(w + ": exponent of length " + std::to_string(e.size()) + " in rank " +
                           std::to_string(*rank));
    }
    p.add_term(e, coef_from_json<C>(field(t, "coef", w), ctx, w));
  }
  if (rank) p.bind_rank(*rank);
  return p;
}

template <class C>
Json laurent_to_json(const Laurent<C>& p) {
  if (!p.has_rank()) {
    if (p.is_zero()) return 0;
    return coef_to_json(p.terms().begin()->second);
  }
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coef", coef_to_json(c)}});
  return Json{{"rank", p.rank()}, {"terms", std::move(terms)}};
}

IntPoly ascending_int_poly(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of integer coefficients");
  std::vector<Integer> v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(integer_from_json(j.at(k), where + "[" + std::to_string(k) + "]"));
  return IntPoly(std::move(v));
}

template <class F>
RationalFunction<F> rational_function_from_json(const Json& j, const JsonContext& ctx, const std::string& where) {
  if (j.is_object() && j.contains("num")) {
    Laurent<F> num = laurent_from_json<F>(j.at("num"), ctx, where + ".num");
    Laurent<F> den = j.contains("den") ? laurent_from_json<F>(j.at("den"), ctx, where + ".den") : Laurent<F>(1);
    return RationalFunction<F>(std::move(num), std::move(den));
  }
  return RationalFunction<F>(laurent_from_json<F>(j, ctx, where));
}

template <class F>
Json rational_function_to_json(const RationalFunction<F>& f) {
  return Json{{"num", laurent_to_json(f.numerator())}, {"den", laurent_to_json(f.denominator())}};
}

std::vector<ChainTerm> chain_terms_from_json(const Json& j, const JsonContext& ctx, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of {\"cell\", \"coef\"}");
  std::vector<ChainTerm> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string w = where + "[" + std::to_string(k) + "]";
    const Json& t = j.at(k);
    out.emplace_back(field(t, "cell", w).get<std::string>(),
                     laurent_from_json<Integer>(t.contains("coef") ? t.at("coef") : Json(1), ctx, w + ".coef"));
  }
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset to line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_json_text(text, path == "-" ? "<stdin>" : path);
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer, got " + text_of(j));
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return to_string(x);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected a rational \"p/q\", got " + text_of(j));
}

Json rational_to_json(const Rational& x) { return to_string(x); }

CohomologyClass class_from_json(const Json& j, const std::string& where) {
  const Json& w = j.is_object() ? field(j, "weights", where) : j;
  if (!w.is_array()) throw ParseError(where + ": class weights must be an array");
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < w.size(); ++k) weights.push_back(rational_from_json(w.at(k), where + ".weights[" + std::to_string(k) + "]"));
  return CohomologyClass(std::move(weights));
}

Json class_to_json(const CohomologyClass& xi) {
  Json w = Json::array();
  for (const auto& x : xi.weights) w.push_back(rational_to_json(x));
  return Json{{"weights", std::move(w)}};
}

Json element_to_json(const Integer& x) { return integer_to_json(x); }
Json element_to_json(const Rational& x) { return rational_to_json(x); }
Json element_to_json(const Fp& x) { return x.value(); }
Json element_to_json(const GroupRingElement& x) { return laurent_to_json(x); }
Json element_to_json(const Laurent<Rational>& x) { return laurent_to_json(x); }
Json element_to_json(const Laurent<Fp>& x) { return laurent_to_json(x); }

Json element_to_json(const NovikovElement& x) {
  Json j = laurent_to_json(x.terms());
  if (!j.is_object()) {
    if (!x.cutoff()) return j;
    j = Json{{"rank", x.xi() ? x.xi()->rank() : 0}, {"terms", Json::array()}};
    if (!x.terms().is_zero()) {
      j["terms"].push_back(Json{{"exp", Exponent(x.xi() ? x.xi()->rank() : 0, 0)},
                                {"coef", integer_to_json(x.terms().terms().begin()->second)}});
    }
  }
  if (x.cutoff()) j["cutoff"] = rational_to_json(*x.cutoff());
  return j;
}

Json element_to_json(const RationalFnR& x) {
  Json den = Json::array();
  for (const auto& c : x.denominator().coeffs()) den.push_back(integer_to_json(c));
  return Json{{"num", laurent_to_json(x.numerator().bound_to(1))}, {"den", std::move(den)}};
}

Json element_to_json(const RationalFunction<Rational>& x) { return rational_function_to_json(x); }
Json element_to_json(const RationalFunction<Fp>& x) { return rational_function_to_json(x); }

template <>
Integer element_from_json<Integer>(const Json& j, const JsonContext&, const std::string& where) {
  return integer_from_json(j, where);
}
template <>
Rational element_from_json<Rational>(const Json& j, const JsonContext&, const std::string& where) {
  return rational_from_json(j, where);
}
template <>
Fp element_from_json<Fp>(const Json& j, const JsonContext& ctx, const std::string& where) {
  return coef_from_json<Fp>(j, ctx, where);
}
template <>
GroupRingElement element_from_json<GroupRingElement>(const Json& j, const JsonContext& ctx, const std::string& where) {
  return laurent_from_json<Integer>(j, ctx, where);
}
template <>
Laurent<Rational> element_from_json<Laurent<Rational>>(const Json& j, const JsonContext& ctx, const std::string& where) {
  return laurent_from_json<Rational>(j, ctx, where);
}
template <>
NovikovElement element_from_json<NovikovElement>(const Json& j, const JsonContext& ctx, const std::string& where) {
  if (!ctx.xi) throw ParseError(where + ": Novikov entries need a complex-level \"xi\"");
  JsonContext c = ctx;
  c.rank = ctx.xi->rank();
  GroupRingElement terms = laurent_from_json<Integer>(j, c, where);
  std::optional<Rational> cutoff = ctx.cutoff;
  if (j.is_object() && j.contains("cutoff")) cutoff = rational_from_json(j.at("cutoff"), where + ".cutoff");
  return NovikovElement(std::move(terms), ctx.xi, cutoff);
}
template <>
RationalFnR element_from_json<RationalFnR>(const Json& j, const JsonContext& ctx, const std::string& where) {
  JsonContext c = ctx;
  c.rank = 1;
  if (j.is_object() && j.contains("num")) {
    GroupRingElement num = laurent_from_json<Integer>(j.at("num"), c, where + ".num");
    IntPoly den = j.contains("den") ? ascending_int_poly(j.at("den"), where + ".den") : IntPoly(1);
    if (den.is_zero() || (den.lead() != 1)) throw ParseError(where + ": denominator must be monic");
    return RationalFnR::from_laurent(num, den);
  }
  return RationalFnR::from_laurent(laurent_from_json<Integer>(j, c, where));
}
template <>
RationalFunction<Rational> element_from_json<RationalFunction<Rational>>(const Json& j, const JsonContext& ctx,
                                                                         const std::string& where) {
  return rational_function_from_json<Rational>(j, ctx, where);
}
template <>
RationalFunction<Fp> element_from_json<RationalFunction<Fp>>(const Json& j, const JsonContext& ctx,
                                                             const std::string& where) {
  return rational_function_from_json<Fp>(j, ctx, where);
}

JsonContext context_from_json(const Json& j) {
  JsonContext ctx;
  if (j.contains("rank")) ctx.rank = j.at("rank").get<std::size_t>();
  if (j.contains("xi")) ctx.xi = std::make_shared<const CohomologyClass>(class_from_json(j.at("xi"), "xi"));
  if (j.contains("cutoff")) ctx.cutoff = rational_from_json(j.at("cutoff"), "cutoff");
  if (j.contains("char")) ctx.characteristic = j.at("char").get<std::uint64_t>();
  return ctx;
}

AnyComplex any_complex_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("complex must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) {
    throw ParseError("unsupported schema " + j.at("schema").dump() + ", expected " + kSchema);
  }
  const std::string ring = j.contains("ring") ? j.at("ring").get<std::string>() : "ZH";
  JsonContext ctx = context_from_json(j);
  if (ring == "ZH") {
    if (!ctx.rank && ctx.xi) ctx.rank = ctx.xi->rank();
    return complex_from_json<GroupRingElement>(j, ctx);
  }
  if (ring == "Z") return complex_from_json<Integer>(j, ctx);
  if (ring == "Q") return complex_from_json<Rational>(j, ctx);
  if (ring == "Fp") return complex_from_json<Fp>(j, ctx);
  if (ring == "novikov") return complex_from_json<NovikovElement>(j, ctx);
  if (ring == "R") return complex_from_json<RationalFnR>(j, ctx);
  if (ring == "ratfield") {
    if (ctx.characteristic == 0) return complex_from_json<RationalFunction<Rational>>(j, ctx);
    return complex_from_json<RationalFunction<Fp>>(j, ctx);
  }
  throw ParseError("unknown ring \"" + ring + "\"");
}

Json any_complex_to_json(const AnyComplex& x, const JsonContext& ctx) {
  return std::visit([&](const auto& c) { return complex_to_json(c, ctx); }, x);
}

std::string ring_tag(const AnyComplex& x) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = typename std::decay_t<decltype(c)>;
        using Ring = typename std::decay_t<decltype(c.differentials())>::value_type::Scalar;
        (void)sizeof(T);
        return RingTag<Ring>::value;
      },
      x);
}

Json violation_to_json(const Violation& v) {
  return Json{{"message", v.message},
              {"degrees", Json::array({v.degree_from, v.degree_to})},
              {"row", v.row_label},
              {"column", v.column_label}};
}

BlockPartition partition_from_json(const Json& j) {
  const Json& blocks = j.is_object() ? field(j, "blocks", "partition") : j;
  if (!blocks.is_array()) throw ParseError("partition: \"blocks\" must be an array per degree");
  BlockPartition p;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Block> degree;
    for (const auto& b : blocks.at(i)) {
      const std::string s = b.get<std::string>();
      if (s == "D'" || s == "Dprime") {
        degree.push_back(Block::DPrime);
      } else if (s == "D") {
        degree.push_back(Block::D);
      } else if (s == "C") {
        degree.push_back(Block::C);
      } else {
        throw ParseError("partition: unknown block \"" + s + "\" in degree " + std::to_string(i));
      }
    }
    p.blocks.push_back(std::move(degree));
  }
  return p;
}

MonodromyRep bundle_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("bundle must be a JSON object");
  const std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : 1;
  if (j.contains("values")) {
    if (dim != 1) throw ParseError("bundle: \"values\" describes a line bundle, dim must be 1");
    std::vector<Rational> values;
    for (std::size_t k = 0; k < j.at("values").size(); ++k)
      values.push_back(rational_from_json(j.at("values").at(k), "bundle.values[" + std::to_string(k) + "]"));
    return MonodromyRep::line(values);
  }
  const Json& mats = field(j, "matrices", "bundle");
  if (!mats.is_array()) throw ParseError("bundle: \"matrices\" must be an array");
  std::vector<Matrix<Rational>> out;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    out.push_back(matrix_from_json<Rational>(mats.at(k), {}, "bundle.matrices[" + std::to_string(k) + "]",
                                             static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
  }
  return MonodromyRep::from_rational_matrices(std::move(out), dim);
}

CutSystem cut_system_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("cut system must be a JSON object");
  CutSystem cs;
  cs.r = field(j, "r", "cut system").get<std::size_t>();
  cs.xi = class_from_json(field(j, "xi", "cut system"), "xi");
  JsonContext ctx;
  ctx.rank = cs.xi.rank();
  if (j.contains("strata_cells")) {
    for (std::size_t k = 0; k < j.at("strata_cells").size(); ++k) {
      const std::string w = "strata_cells[" + std::to_string(k) + "]";
      const Json& c = j.at("strata_cells").at(k);
      cs.strata_cells.push_back(StrataCell{field(c, "label", w).get<std::string>(), field(c, "dim", w).get<int>(),
                                           field(c, "alpha", w).get<std::vector<int>>()});
    }
  }
  if (j.contains("internal_cells")) {
    for (std::size_t k = 0; k < j.at("internal_cells").size(); ++k) {
      const std::string w = "internal_cells[" + std::to_string(k) + "]";
      const Json& c = j.at("internal_cells").at(k);
      cs.internal_cells.push_back(InternalCell{field(c, "label", w).get<std::string>(), field(c, "dim", w).get<int>()});
    }
  }
  if (j.contains("boundary")) {
    const Json& b = j.at("boundary");
    if (!b.is_object()) throw ParseError("boundary must map cell labels to chains");
    for (const auto& [label, terms] : b.items()) {
      cs.boundary[label] = chain_terms_from_json(terms, ctx, "boundary." + label);
    }
  }
  if (j.contains("incidence")) {
    for (std::size_t k = 0; k < j.at("incidence").size(); ++k) {
      const std::string w = "incidence[" + std::to_string(k) + "]";
      const Json& inc = j.at("incidence").at(k);
      cs.incidence.push_back(IncidenceData{field(inc, "cell", w).get<std::string>(), field(inc, "i", w).get<int>(),
                                           chain_terms_from_json(field(inc, "targets", w), ctx, w + ".targets")});
    }
  }
  return cs;
}

Json generators_to_json(const std::vector<std::vector<GeneratorId>>& g) {
  Json out = Json::array();
  for (const auto& degree : g) {
    Json d = Json::array();
    for (const auto& id : degree) {
      Json e{{"label", id.label()}, {"cell", id.cell}, {"beta", id.beta}};
      if (id.internal) e["internal"] = true;
      d.push_back(std::move(e));
    }
    out.push_back(std::move(d));
  }
  return out;
}

MinimalPolynomialCandidate candidate_from_text(const std::string& text) {
  MinimalPolynomialCandidate c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coefficient in \"" + text + "\"");
    c.coefficients.push_back(parse_integer(item.substr(b, e - b + 1)));
  }
  if (c.coefficients.empty()) throw ParseError("no coefficients in \"" + text + "\"");
  return c;
}

IntPoly int_poly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected coefficients, highest degree first");
  std::vector<Integer> v;
  for (auto it = j.rbegin(); it != j.rend(); ++it) v.push_back(integer_from_json(*it, where));
  return IntPoly(std::move(v));
}

Json int_poly_to_json(const IntPoly& p) {
  Json out = Json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out.push_back(integer_to_json(*it));
  return out;
}

Json checks_to_json(const std::vector<InequalityCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back(Json{{"degree", c.degree},
                       {"kind", c.kind},
                       {"lhs", rational_to_json(c.lhs)},
                       {"rhs", rational_to_json(c.rhs)},
                       {"slack", rational_to_json(c.slack)},
                       {"verdict", to_string(c.verdict)}});
  }
  return out;
}

std::vector<std::size_t> counts_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of nonnegative integers");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw ParseError(where + ": expected nonnegative integers, got " + x.dump());
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

NovikovNumbers numbers_from_json(const Json& j) {
  NovikovNumbers n;
  n.b = counts_from_json(field(j, "b", "report"), "report.b");
  if (j.contains("q") && !j.at("q").is_null()) n.q = counts_from_json(j.at("q"), "report.q");
  return n;
}

Json numbers_to_json(const NovikovNumbers& n) {
  Json j{{"b", n.b}};
  j["q"] = n.q ? Json(*n.q) : Json(nullptr);
  return j;
}

}  // namespace novikov
