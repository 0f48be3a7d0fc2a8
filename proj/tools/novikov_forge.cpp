// novikov-forge: JSON front end to the novikov library.
//
// Exit codes: 0 success or passing verdict, 1 failing verdict, 2 input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "novikov/collapse.hpp"
#include "novikov/cut_system.hpp"
#include "novikov/dirichlet.hpp"
#include "novikov/invariants.hpp"
#include "novikov/json_io.hpp"
#include "novikov/representation.hpp"

namespace {

using namespace novikov;

constexpr int kOk = 0;
constexpr int kVerdictFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string input;
  std::string second;
  std::string output = "-";
  std::string ring;
  std::string cutoff;
  std::string a;
  std::uint64_t characteristic = 0;
  std::string xi;
  std::string bundle;
  std::string counts;
  std::string poly;
  std::string number;
  bool irreducible = false;
};

void emit(const Json& j, const Options& o) {
  const std::string text = j.dump(2) + "\n";
  if (o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw ParseError(o.output + ": cannot write file");
  out << text;
}

Json report() { return Json{{"schema", kSchema}}; }

std::vector<Rational> rationals_from_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError(what + ": empty entry in \"" + text + "\"");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return out;
}

std::vector<std::size_t> counts_from_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& x : rationals_from_list(text, "--counts")) {
    if (!is_integral(x) || x < 0) throw ParseError("--counts: expected nonnegative integers");
    out.push_back(x.get_num().get_ui());
  }
  return out;
}

ChainComplex<GroupRingElement> group_ring_complex(const Json& j) {
  AnyComplex any = any_complex_from_json(j);
  if (auto* x = std::get_if<ChainComplex<GroupRingElement>>(&any)) return *x;
  throw PreconditionError("this command needs a complex over ZH, got ring \"" + ring_tag(any) + "\"");
}

// Class from --xi, else the complex's "xi", else (1) in rank <= 1.
CohomologyClass resolve_class(const Options& o, const Json& j, const ChainComplex<GroupRingElement>& x) {
  if (!o.xi.empty()) return CohomologyClass(rationals_from_list(o.xi, "--xi"));
  if (j.contains("xi")) return class_from_json(j.at("xi"), "xi");
  auto r = entry_rank(x);
  if (!r || *r <= 1) return CohomologyClass({Rational(1)});
  throw PreconditionError("a class is needed for a complex of rank " + std::to_string(*r) + "; pass --xi");
}

MonodromyRep resolve_bundle(const Options& o, std::size_t rank) {
  if (o.bundle.empty()) return MonodromyRep::trivial(rank, 1);
  return bundle_from_json(read_json_file(o.bundle));
}

std::vector<CohomologyClass> identity_basis(std::size_t rank) {
  std::vector<CohomologyClass> basis;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Rational> w(rank, Rational(0));
    w[i] = 1;
    basis.emplace_back(std::move(w));
  }
  return basis;
}

RepresentationDescriptor descriptor_from_flags(const Options& o, const CohomologyClass& xi) {
  if (o.ring == "novikov") {
    if (o.cutoff.empty()) throw PreconditionError("--ring novikov needs --cutoff");
    return NovikovRepresentation{std::make_shared<const CohomologyClass>(xi), parse_rational(o.cutoff)};
  }
  if (o.ring == "R") return RationalFnRRepresentation{xi};
  if (o.ring == "scalar") {
    if (o.a.empty()) throw PreconditionError("--ring scalar needs --a");
    return ScalarRepresentation{parse_rational(o.a), xi};
  }
  if (o.ring == "ratfield") return RationalFieldRepresentation{identity_basis(xi.rank()), FieldSpec{o.characteristic}};
  throw PreconditionError("--ring must be one of novikov, R, scalar, ratfield");
}

JsonContext context_for(const RepresentationDescriptor& rho) {
  JsonContext ctx;
  if (const auto* n = std::get_if<NovikovRepresentation>(&rho)) {
    ctx.xi = n->xi;
    ctx.cutoff = n->cutoff;
  }
  if (const auto* f = std::get_if<RationalFieldRepresentation>(&rho)) {
    ctx.characteristic = f->field.characteristic;
    ctx.rank = f->basis.size();
  }
  if (std::holds_alternative<ScalarRepresentation>(rho)) ctx.rank.reset();
  if (std::holds_alternative<RationalFnRRepresentation>(rho)) ctx.rank = 1;
  return ctx;
}

// ---- subcommands ----

int cmd_validate(const Options& o) {
  AnyComplex x = any_complex_from_json(read_json_file(o.input));
  auto v = std::visit([](const auto& c) { return validate(c); }, x);
  Json j = report();
  j["ring"] = ring_tag(x);
  j["ok"] = !v.has_value();
  if (v) j["violation"] = violation_to_json(*v);
  emit(j, o);
  return v ? kVerdictFailure : kOk;
}

template <class Ring>
Json collapse_report(const ChainComplex<Ring>& b, const BlockPartition& p, const JsonContext& ctx) {
  CollapseResult<Ring> res = collapse(b, p);
  Json j = report();
  j["ring"] = RingTag<Ring>::value;
  j["simple"] = res.simple;
  j["verified"] = true;
  j["euler_characteristic"] = {{"before", euler_characteristic(b)}, {"after", euler_characteristic(res.complex)}};
  j["complex"] = complex_to_json(res.complex, ctx);
  j["witness"] = witness_to_json(res.witness);
  return j;
}

int cmd_collapse(const Options& o) {
  Json cj = read_json_file(o.input);
  BlockPartition p = partition_from_json(read_json_file(o.second));
  AnyComplex x = any_complex_from_json(cj);
  JsonContext ctx = context_from_json(cj);
  if (auto* zh = std::get_if<ChainComplex<GroupRingElement>>(&x)) {
    if (o.ring.empty()) throw PreconditionError("collapse over ZH needs a representation; pass --ring");
    auto rho = descriptor_from_flags(o, resolve_class(o, cj, *zh));
    ctx = context_for(rho);
    x = base_change(*zh, rho);
  }
  Json j = std::visit(
      [&](const auto& c) -> Json {
        using Ring = typename std::decay_t<decltype(c.differentials())>::value_type::Scalar;
        if constexpr (std::is_same_v<Ring, GroupRingElement> || std::is_same_v<Ring, Integer>) {
          throw PreconditionError(std::string("collapse needs inverses; ring ") + RingTag<Ring>::value +
                                  " is not supported");
        } else {
          return collapse_report(c, p, ctx);
        }
      },
      x);
  emit(j, o);
  return kOk;
}

int cmd_build_cut_system(const Options& o) {
  CutComplex y = build_complex(cut_system_from_json(read_json_file(o.input)));
  JsonContext ctx;
  ctx.rank = y.xi.rank();
  ctx.xi = std::make_shared<const CohomologyClass>(y.xi);
  Json j = report();
  j["generator_count"] = [&] {
    std::size_t n = 0;
    for (const auto& d : y.generators) n += d.size();
    return n;
  }();
  j["euler_characteristic"] = euler_characteristic(y.complex);
  j["complex"] = complex_to_json(y.complex, ctx);
  j["generators"] = generators_to_json(y.generators);
  emit(j, o);
  return kOk;
}

template <class Ring>
Json cascade_report(const CutComplex& y, const ChainComplex<Ring>& based, const JsonContext& ctx) {
  CascadeResult<Ring> res = cascade_collapse(y, based);
  Json j = report();
  j["ring"] = RingTag<Ring>::value;
  if (ctx.cutoff) j["cutoff"] = rational_to_json(*ctx.cutoff);
  j["counts"] = res.counts;
  j["steps"] = y.r;
  std::vector<bool> required(res.simple.begin(), res.simple.begin() + static_cast<std::ptrdiff_t>(y.r > 0 ? y.r - 1 : 0));
  j["simple_flags"] = required;
  j["collapse_simple"] = res.simple;
  Json steps = Json::array();
  for (std::size_t s = 0; s < res.witnesses.size(); ++s) {
    steps.push_back(Json{{"step", s + 1}, {"simple", static_cast<bool>(res.simple[s])}, {"verified", true}});
  }
  j["witnesses"] = std::move(steps);
  j["euler_characteristic"] = euler_characteristic(res.complex);
  j["complex"] = complex_to_json(res.complex, ctx);
  return j;
}

int cmd_cascade(const Options& o) {
  CutComplex y = build_complex(cut_system_from_json(read_json_file(o.input)));
  const std::string ring = o.ring.empty() ? "R" : o.ring;
  Options oo = o;
  oo.ring = ring;
  auto rho = descriptor_from_flags(oo, y.xi);
  check_descriptor(rho, y.xi.rank());
  JsonContext ctx = context_for(rho);
  AnyComplex based = base_change(y.complex, rho);
  Json j = std::visit(
      [&](const auto& c) -> Json {
        using Ring = typename std::decay_t<decltype(c.differentials())>::value_type::Scalar;
        if constexpr (std::is_same_v<Ring, GroupRingElement> || std::is_same_v<Ring, Integer>) {
          throw PreconditionError("cascade needs a Sigma_xi-inverting representation");
        } else {
          return cascade_report(y, c, ctx);
        }
      },
      based);
  emit(j, o);
  return kOk;
}

int cmd_novikov_numbers(const Options& o) {
  Json cj = read_json_file(o.input);
  auto x = group_ring_complex(cj);
  CohomologyClass xi = resolve_class(o, cj, x);
  NovikovNumbers n = novikov_numbers(x, xi);
  Json j = report();
  j["xi"] = class_to_json(xi);
  j["representation"] = xi.is_integral() ? "R" : "novikov";
  j["b"] = n.b;
  j["q"] = n.q ? Json(*n.q) : Json(nullptr);
  j["euler_characteristic"] = euler_characteristic(x);
  emit(j, o);
  return kOk;
}

int cmd_inequalities(const Options& o) {
  Json rj = read_json_file(o.input);
  if (o.counts.empty()) throw PreconditionError("inequalities needs --counts");
  auto c = counts_from_list(o.counts);
  Json j = report();
  j["counts"] = c;
  std::vector<InequalityCheck> checks;
  if (rj.contains("dims")) {
    auto dims = counts_from_json(rj.at("dims"), "report.dims");
    std::size_t dim_e = rj.contains("dim_e") ? rj.at("dim_e").get<std::size_t>() : 1;
    checks = morse_type_inequalities(c, dims, dim_e);
    j["family"] = "morse-type";
  } else {
    checks = check_novikov_inequalities(c, numbers_from_json(rj));
    j["family"] = "novikov";
  }
  bool computed = std::none_of(checks.begin(), checks.end(), [](const auto& k) { return k.verdict == Verdict::not_computed; });
  bool pass = all_pass(checks);
  j["verdict"] = to_string(!computed ? Verdict::not_computed : pass ? Verdict::pass : Verdict::fail);
  j["checks"] = checks_to_json(checks);
  emit(j, o);
  return pass ? kOk : kVerdictFailure;
}

int cmd_bundle_homology(const Options& o) {
  Json cj = read_json_file(o.input);
  auto x = group_ring_complex(cj);
  CohomologyClass xi = resolve_class(o, cj, x);
  if (o.a.empty()) throw PreconditionError("bundle-homology needs --a");
  Rational a = parse_rational(o.a);
  MonodromyRep e = resolve_bundle(o, xi.rank());
  auto dims = bundle_homology_dims(x, a, e, xi);
  Json j = report();
  j["a"] = rational_to_json(a);
  j["xi"] = class_to_json(xi);
  j["dim_e"] = e.dim();
  j["dims"] = dims;
  emit(j, o);
  return kOk;
}

int cmd_jump_points(const Options& o) {
  Json cj = read_json_file(o.input);
  auto x = group_ring_complex(cj);
  CohomologyClass xi = resolve_class(o, cj, x);
  MonodromyRep e = resolve_bundle(o, xi.rank());
  JumpReport rep = generic_betti_and_jumps(x, e, xi);
  Json j = report();
  j["xi"] = class_to_json(xi);
  j["dim_e"] = e.dim();
  j["generic_b"] = rep.generic_b;
  Json polys = Json::array();
  Json roots = Json::array();
  for (const auto& p : rep.jump_polynomials) {
    polys.push_back(int_poly_to_json(p));
    Json r = Json::array();
    if (p.degree() >= 1)
      for (const auto& z : rational_roots(p)) r.push_back(rational_to_json(z));
    roots.push_back(std::move(r));
  }
  j["jump_polynomials"] = std::move(polys);
  j["rational_jump_roots"] = std::move(roots);
  emit(j, o);
  return kOk;
}

int cmd_mapping_torus(const Options& o) {
  Json cj = read_json_file(o.input);
  JsonContext ctx = context_from_json(cj);
  auto c = complex_from_json<Integer>(cj, ctx);
  Json hj = read_json_file(o.second);
  const Json& maps = hj.is_object() ? hj.at("maps") : hj;
  if (!maps.is_array()) throw ParseError("chain map: expected {\"maps\": [matrix per degree]}");
  std::vector<Matrix<Integer>> h;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto s = static_cast<Eigen::Index>(c.size(static_cast<int>(i)));
    h.push_back(matrix_from_json<Integer>(maps.at(i), {}, "maps[" + std::to_string(i) + "]", s, s));
  }
  auto torus = mapping_torus(c, h);
  JsonContext out;
  out.rank = 1;
  Json j = complex_to_json(torus, out);
  emit(j, o);
  return kOk;
}

int cmd_dirichlet(const Options& o) {
  Json j = report();
  bool unit = false;
  if (!o.poly.empty()) {
    MinimalPolynomialCandidate c = candidate_from_text(o.poly);
    if (o.irreducible) c.irreducible = true;
    j["polynomial"] = int_poly_to_json(c.polynomial());
    j["algebraic_integer"] = is_algebraic_integer(c);
    unit = is_dirichlet_unit(c);
  } else if (!o.number.empty()) {
    Rational x = parse_rational(o.number);
    j["number"] = rational_to_json(x);
    j["algebraic_integer"] = is_algebraic_integer(x);
    unit = is_dirichlet_unit(x);
  } else {
    throw PreconditionError("dirichlet-check needs --poly or --number");
  }
  j["dirichlet_unit"] = unit;
  emit(j, o);
  return unit ? kOk : kVerdictFailure;
}

int cmd_xi_generic(const Options& o) {
  Json cj = read_json_file(o.input);
  auto x = group_ring_complex(cj);
  std::size_t rank = entry_rank(x).value_or(cj.contains("rank") ? cj.at("rank").get<std::size_t>() : 1);
  MonodromyRep e = resolve_bundle(o, rank);
  GenericityReport rep = is_xi_generic(x, e, FieldSpec{o.characteristic});
  Json j = report();
  j["char"] = o.characteristic;
  j["xi_generic"] = rep.generic;
  j["fraction_field_dims"] = rep.fraction_field_dims;
  j["trivial_line_dims"] = rep.trivial_line_dims;
  emit(j, o);
  return rep.generic ? kOk : kVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Novikov-type invariants of chain complexes over Z[H]"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;

  auto add_output = [&](CLI::App* s) { s->add_option("-o,--output", o.output, "output path, - for stdout"); };
  auto add_rep = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "representation: novikov, R, scalar, ratfield")
        ->check(CLI::IsMember({"novikov", "R", "scalar", "ratfield"}));
    s->add_option("--cutoff", o.cutoff, "truncation level p/q for --ring novikov");
    s->add_option("--a", o.a, "evaluation point p/q for --ring scalar");
    s->add_option("--char", o.characteristic, "characteristic of the coefficient field (0 or a prime)");
    s->add_option("--xi", o.xi, "class weights, comma separated");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check d^2 = 0");
  validate_cmd->add_option("complex", o.input, "complex JSON, - for stdin")->required();
  add_output(validate_cmd);
  validate_cmd->callback([&] { run = cmd_validate; });

  auto* collapse_cmd = app.add_subcommand("collapse", "collapse D' against D and emit the witness");
  collapse_cmd->add_option("complex", o.input)->required();
  collapse_cmd->add_option("partition", o.second)->required();
  add_rep(collapse_cmd);
  add_output(collapse_cmd);
  collapse_cmd->callback([&] { run = cmd_collapse; });

  auto* build_cmd = app.add_subcommand("build-cut-system", "complex of a cut system");
  build_cmd->add_option("cut_system", o.input)->required();
  add_output(build_cmd);
  build_cmd->callback([&] { run = cmd_build_cut_system; });

  auto* cascade_cmd = app.add_subcommand("cascade", "r-step collapse of a cut system");
  cascade_cmd->add_option("cut_system", o.input)->required();
  add_rep(cascade_cmd);
  add_output(cascade_cmd);
  cascade_cmd->callback([&] { run = cmd_cascade; });

  auto* numbers_cmd = app.add_subcommand("novikov-numbers", "Novikov numbers b_i and q_i");
  numbers_cmd->add_option("complex", o.input)->required();
  numbers_cmd->add_option("--xi", o.xi, "class weights, comma separated");
  add_output(numbers_cmd);
  numbers_cmd->callback([&] { run = cmd_novikov_numbers; });

  auto* ineq_cmd = app.add_subcommand("inequalities", "check zero counts against a report");
  ineq_cmd->add_option("report", o.input)->required();
  ineq_cmd->add_option("--counts", o.counts, "zero counts c_0,c_1,...")->required();
  add_output(ineq_cmd);
  ineq_cmd->callback([&] { run = cmd_inequalities; });

  auto* bundle_cmd = app.add_subcommand("bundle-homology", "dims of H_*(X; a^xi (x) E)");
  bundle_cmd->add_option("complex", o.input)->required();
  bundle_cmd->add_option("--a", o.a, "rational a != 0")->required();
  bundle_cmd->add_option("--bundle", o.bundle, "bundle JSON (default trivial line bundle)");
  bundle_cmd->add_option("--xi", o.xi, "class weights, comma separated");
  add_output(bundle_cmd);
  bundle_cmd->callback([&] { run = cmd_bundle_homology; });

  auto* jump_cmd = app.add_subcommand("jump-points", "generic Betti numbers and jump polynomials");
  jump_cmd->add_option("complex", o.input)->required();
  jump_cmd->add_option("--bundle", o.bundle, "bundle JSON (default trivial line bundle)");
  jump_cmd->add_option("--xi", o.xi, "class weights, comma separated");
  add_output(jump_cmd);
  jump_cmd->callback([&] { run = cmd_jump_points; });

  auto* torus_cmd = app.add_subcommand("mapping-torus", "cone of 1 - t h");
  torus_cmd->add_option("complex", o.input, "complex over Z")->required();
  torus_cmd->add_option("chain_map", o.second, "{\"maps\": [matrix per degree]}")->required();
  add_output(torus_cmd);
  torus_cmd->callback([&] { run = cmd_mapping_torus; });

  auto* dirichlet_cmd = app.add_subcommand("dirichlet-check", "algebraic integer and Dirichlet unit tests");
  dirichlet_cmd->add_option("--poly", o.poly, "integer coefficients, highest degree first");
  dirichlet_cmd->add_option("--number", o.number, "rational p/q");
  dirichlet_cmd->add_flag("--irreducible", o.irreducible, "assert irreducibility above degree 4");
  add_output(dirichlet_cmd);
  dirichlet_cmd->callback([&] { run = cmd_dirichlet; });

  auto* generic_cmd = app.add_subcommand("xi-generic", "xi-genericity of a flat bundle");
  generic_cmd->add_option("complex", o.input)->required();
  generic_cmd->add_option("--bundle", o.bundle, "bundle JSON (default trivial line bundle)");
  generic_cmd->add_option("--char", o.characteristic, "characteristic of the coefficient field (0 or a prime)");
  add_output(generic_cmd);
  generic_cmd->callback([&] { run = cmd_xi_generic; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return run(o);
  } catch (const novikov::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInputError;
  }
}
