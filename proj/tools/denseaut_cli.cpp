// Batch front end: one query per invocation, JSON on stdout.
//
// Exit codes: 0 decided, 2 bounds or search exhausted, 1 bad input.

#include <CLI11.hpp>
#include <iostream>

#include "denseaut/parser.hpp"
#include "denseaut/serialize.hpp"
#include "denseaut/witness.hpp"

using namespace denseaut;

namespace {

struct Options {
  unsigned height = 3;
  bool pretty = false;
  std::size_t budget = 10000;
  std::string group;
  std::string value;
  std::string m;
  std::string r2;
  std::size_t k = 4;
};

int emit(const Json& j, const Options& o, int code = 0) {
  std::cout << (o.pretty ? j.dump(2) : j.dump()) << '\n';
  return code;
}

// Scalars and matrices share the aut-member argument.
ExactMatrix element(const std::string& text, std::size_t n) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return parse_matrix(text);
  return as_matrix(parse_scalar(text), n);
}

Json element_json(const ExactMatrix& m) { return m.size() == 1 ? to_json(m(0, 0)) : to_json(m); }

int run_aut(const Options& o) {
  Group g = parse_group(o.group);
  AutResult r = aut_group(g);
  Json j;
  j["group"] = g.to_string();
  Json body = to_json(r);
  for (auto& [k, v] : body.items()) j[k] = v;
  if (r.is_exact()) {
    auto c = cardinality_class(r);
    j["cardinality"] = c.cls == Cardinality::Two ? "Two" : "Infinite";
    j["cardinality_witness"] = c.witness ? element_json(*c.witness) : Json(nullptr);
  }
  return emit(j, o, r.is_exact() ? 0 : 2);
}

int run_member(const Options& o) {
  Group g = parse_group(o.group);
  Vector v = parse_vector(o.value);
  auto verdict = member(g, v);
  Json j;
  j["group"] = g.to_string();
  j["vector"] = to_json(v);
  j["member"] = verdict.member;
  j["witness"] = verdict.witness ? to_json(Vector(*verdict.witness)) : Json(nullptr);
  return emit(j, o);
}

int run_aut_member(const Options& o) {
  Group g = parse_group(o.group);
  ExactMatrix a = element(o.value, g.dimension());
  bool in = aut_member(g, a);
  AutResult r = aut_group(g);
  Json j;
  j["group"] = g.to_string();
  j["element"] = element_json(a);
  j["member"] = in;
  j["decided_by"] = r.is_exact() ? "descriptor" : "certificate";
  try {
    j["certificate"] = to_json(acts_invariantly(g, a));
  } catch (const UnsupportedError&) {
    j["certificate"] = nullptr;
  }
  return emit(j, o);
}

int run_divisible(const Options& o) {
  Group g = parse_group(o.group);
  Json j;
  j["group"] = g.to_string();
  j["divisible"] = is_divisible(g);
  if (auto c = divisibility_counterexample(g))
    j["counterexample"] = {{"v", to_json(c->first)}, {"m", c->second}};
  else
    j["counterexample"] = nullptr;
  return emit(j, o);
}

int run_dim(const Options& o) {
  Group g = parse_group(o.group);
  AutResult r = aut_group(g);
  Json j;
  j["group"] = g.to_string();
  Json body = to_json(r);
  for (auto& [k, v] : body.items()) j[k] = v;
  if (!r.is_exact()) {
    j["dim"] = nullptr;
    return emit(j, o, 2);
  }
  j["dim"] = dim_of_aut(r);
  return emit(j, o);
}

int run_realize(const Options& o) {
  Integer m(o.m);
  Realization r = realize_Ax(m);
  Json j;
  j["m"] = to_string(m);
  j["realizable"] = r.group.has_value();
  if (r.group) {
    j["group"] = r.group->to_string();
    j["aut"] = to_json(*aut_group(*r.group).exact);
  } else {
    j["refuter"] = to_string(*r.refuter);
    j["certificate"] = to_json(*r.refuter_certificate);
  }
  return emit(j, o);
}

int run_oracle(const Options& o, bool cross) {
  Group g = parse_group(o.group);
  OracleOptions opts;
  opts.height = o.height;
  OracleReport rep = cross ? cross_check(g, opts) : brute_force_aut(g, opts);
  Json j;
  j["group"] = g.to_string();
  j["height"] = o.height;
  Json body = to_json(rep);
  for (auto& [k, v] : body.items()) j[k] = v;
  return emit(j, o, cross && rep.one_sided ? 2 : 0);
}

int run_sl(const Options& o) {
  Group g = parse_group(o.group);
  Json j;
  j["group"] = g.to_string();
  try {
    SLWitness w = sl_obstruction_witness(g, o.budget);
    j["witness"] = to_json(w.matrix);
    j["certificate"] = to_json(w.certificate);
    j["tried"] = w.tried;
    return emit(j, o);
  } catch (const SearchExhausted& e) {
    j["witness"] = nullptr;
    j["error"] = e.what();
    return emit(j, o, 2);
  }
}

int run_circle(const Options& o) {
  Rational r2 = parse_rational(o.r2);
  Vector target = parse_vector(o.value);
  auto [c1, c2] = circle_sum_witness(r2, target);
  Json j;
  j["r2"] = to_string(r2);
  j["target"] = to_json(target);
  j["c1"] = to_json(c1);
  j["c2"] = to_json(c2);
  return emit(j, o);
}

int run_perm(const Options& o) {
  InjectivityReport r = injectivity_demo(o.k);
  Json j;
  j["k"] = o.k;
  j["permutations"] = r.permutations;
  j["distinct_images"] = r.distinct_images;
  j["injective"] = r.injective;
  return emit(j, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of closed-form subgroups of R^n"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  bool json_flag = false;
  app.add_option("--height", o.height, "oracle height bound")->check(CLI::Range(1u, 16u));
  app.add_flag("--json", json_flag, "compact JSON output (default)");
  app.add_flag("--pretty", o.pretty, "indented JSON output");
  app.add_option("--budget", o.budget, "sl-witness candidate cap")->check(CLI::PositiveNumber);

  auto group_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("group", o.group, "group descriptor")->required();
    return c;
  };
  auto* aut = group_cmd("aut", "automorphism group");
  auto* mem = group_cmd("member", "membership of a vector");
  mem->add_option("vector", o.value, "scalar or (a, b, ...)")->required();
  auto* autm = group_cmd("aut-member", "is a scalar or matrix an automorphism");
  autm->add_option("element", o.value, "scalar or [a, b; c, d]")->required();
  auto* div = group_cmd("divisible", "divisibility");
  auto* dense = group_cmd("dense", "density");
  auto* cyc = group_cmd("cyclic", "cyclicity");
  auto* dim = group_cmd("dim", "covering dimension of the automorphism group");
  auto* real = app.add_subcommand("realize-ax", "is {+-m^k} realized by Z[1/m]");
  real->add_option("m", o.m, "integer >= 2")->required();
  auto* orc = group_cmd("oracle", "brute-force candidates at the given height");
  auto* cross = group_cmd("cross-check", "compare the closed form with the oracle");
  auto* sl = group_cmd("sl-witness", "determinant-one matrix that moves the group");
  auto* circ = app.add_subcommand("circle-witness", "two circle points summing to an axis point");
  circ->add_option("r2", o.r2, "squared radius")->required();
  circ->add_option("target", o.value, "(s, 0) or (0, s)")->required();
  auto* perm = app.add_subcommand("perm-demo", "injectivity of finite-support permutation actions");
  perm->add_option("k", o.k, "permutation size")->check(CLI::Range(1, 8));

  CLI11_PARSE(app, argc, argv);
  (void)json_flag;

  try {
    if (aut->parsed()) return run_aut(o);
    if (mem->parsed()) return run_member(o);
    if (autm->parsed()) return run_aut_member(o);
    if (div->parsed()) return run_divisible(o);
    if (dense->parsed()) {
      Group g = parse_group(o.group);
      return emit({{"group", g.to_string()}, {"dense", is_dense(g)}}, o);
    }
    if (cyc->parsed()) {
      Group g = parse_group(o.group);
      return emit({{"group", g.to_string()}, {"cyclic", is_cyclic(g)}}, o);
    }
    if (dim->parsed()) return run_dim(o);
    if (real->parsed()) return run_realize(o);
    if (orc->parsed()) return run_oracle(o, false);
    if (cross->parsed()) return run_oracle(o, true);
    if (sl->parsed()) return run_sl(o);
    if (circ->parsed()) return run_circle(o);
    if (perm->parsed()) return run_perm(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
