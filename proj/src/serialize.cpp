#include "denseaut/serialize.hpp"

#include "denseaut/parser.hpp"

namespace denseaut {

Json to_json(const ExactScalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.rows()) out.push_back(to_json(Vector(row)));
  return out;
}

Json to_json(const Group& g) {
  Json j;
  j["kind"] = to_string(g.kind());
  j["dsl"] = g.to_string();
  j["dimension"] = g.dimension();
  switch (g.kind()) {
    case Group::Kind::Cyclic:
      j["generator"] = to_json(g.generator());
      break;
    case Group::Kind::MixedModule: {
      Json terms = Json::array();
      for (const auto& t : g.terms())
        terms.push_back({{"domain", t.domain == CoeffDomain::Int ? "Int" : "Rat"}, {"generator", to_json(t.generator)}});
      j["terms"] = std::move(terms);
      break;
    }
    case Group::Kind::LaurentRing:
      j["coeffs"] = g.coeffs() == CoeffDomain::Int ? "Int" : "Rat";
      break;
    case Group::Kind::FractionRing:
      j["m"] = to_string(g.modulus());
      break;
    case Group::Kind::Scaled:
      j["r"] = to_json(g.scale_factor());
      j["inner"] = to_json(g.inner());
      break;
    case Group::Kind::DivisibleHull:
      j["inner"] = to_json(g.inner());
      break;
    case Group::Kind::Image:
      j["inner"] = to_json(g.inner());
      j["matrix"] = to_json(g.matrix());
      break;
    case Group::Kind::Product: {
      Json fs = Json::array();
      for (const auto& f : g.factors()) fs.push_back(to_json(f));
      j["factors"] = std::move(fs);
      break;
    }
    default:
      break;
  }
  return j;
}

Json to_json(const AutDescriptor& d) {
  using K = AutDescriptor::Kind;
  Json j;
  j["kind"] = to_string(d.kind);
  switch (d.kind) {
    case K::FieldUnits:
      j["d"] = d.d.get_si();
      break;
    case K::PMPowers:
    case K::RatTimesPMPowers:
      j["base"] = to_json(d.base);
      break;
    case K::BlockTriangular:
      j["p"] = d.p;
      j["q"] = d.q;
      break;
    case K::PatternQuad:
      j["x"] = to_json(d.pattern);
      break;
    case K::Conjugated:
      j["inner"] = to_json(*d.inner);
      j["matrix"] = to_json(*d.conjugator);
      break;
    default:
      break;
  }
  if (d.kind != K::FieldUnits && d.kind != K::PMPowers && d.kind != K::RatTimesPMPowers && d.kind != K::RatStar &&
      d.kind != K::BlockTriangular && d.kind != K::PatternQuad)
    j["n"] = d.n;
  j["label"] = d.label();
  return j;
}

Json to_json(const AutResult& r) {
  Json j;
  if (r.is_exact()) {
    j["aut"] = to_json(*r.exact);
    return j;
  }
  Json lower = Json::array(), upper = Json::array();
  for (const auto& d : r.lower) lower.push_back(d.label());
  for (const auto& d : r.upper) upper.push_back(d.label());
  j["bounds"] = {{"lower", lower}, {"upper", upper}};
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["verdict"] = c.verdict;
  j["direction"] = c.direction == Certificate::Direction::Forward ? "forward" : "inverse";
  j["failing_generator"] = c.failing_generator ? to_json(*c.failing_generator) : Json(nullptr);
  j["image"] = c.image ? to_json(*c.image) : Json(nullptr);
  j["reason"] = c.reason;
  return j;
}

namespace {

Json candidate_json(const ExactMatrix& m) { return m.size() == 1 ? to_json(m(0, 0)) : to_json(m); }

}  // namespace

Json to_json(const OracleReport& r) {
  Json j;
  j["candidates"] = r.candidates;
  Json confirmed = Json::array();
  for (const auto& m : r.confirmed) confirmed.push_back(candidate_json(m));
  j["confirmed"] = std::move(confirmed);
  Json refuted = Json::array();
  for (const auto& f : r.refuted)
    refuted.push_back({{"candidate", candidate_json(f.candidate)}, {"witness", to_json(f.certificate)}});
  j["refuted"] = std::move(refuted);
  j["agreement"] = r.agreement ? Json(*r.agreement) : Json(nullptr);
  if (r.agreement) {
    j["one_sided"] = r.one_sided;
    Json dis = Json::array();
    for (const auto& m : r.disagreements) dis.push_back(candidate_json(m));
    j["disagreements"] = std::move(dis);
  }
  return j;
}

ExactScalar scalar_from_json(const Json& j) { return parse_scalar(j.get<std::string>()); }

ExactMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<ExactScalar>> rows;
  for (const auto& row : j) {
    rows.emplace_back();
    for (const auto& x : row) rows.back().push_back(scalar_from_json(x));
  }
  return ExactMatrix(std::move(rows));
}

Group group_from_json(const Json& j) { return parse_group(j.at("dsl").get<std::string>()); }

AutDescriptor aut_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  auto n = [&] { return j.at("n").get<std::size_t>(); };
  if (kind == "PlusMinusOne") return AutDescriptor::plus_minus_one(n());
  if (kind == "RatStar") return AutDescriptor::rat_star();
  if (kind == "FieldUnits") return AutDescriptor::field_units(Integer(j.at("d").get<long>()));
  if (kind == "PMPowers") return AutDescriptor::pm_powers(scalar_from_json(j.at("base")));
  if (kind == "RatTimesPMPowers") return AutDescriptor::rat_times_pm_powers(scalar_from_json(j.at("base")));
  if (kind == "GLQ") return AutDescriptor::glq(n());
  if (kind == "GLR") return AutDescriptor::glr(n());
  if (kind == "BlockTriangular")
    return AutDescriptor::block_triangular(j.at("p").get<std::size_t>(), j.at("q").get<std::size_t>());
  if (kind == "PatternQuad") return AutDescriptor::pattern_quad(scalar_from_json(j.at("x")));
  if (kind == "EZLowerBound") return AutDescriptor::ez_lower_bound(n());
  if (kind == "Conjugated")
    return AutDescriptor::conjugated(aut_from_json(j.at("inner")), matrix_from_json(j.at("matrix")));
  throw DomainError("unknown automorphism descriptor kind '" + kind + "'");
}

}  // namespace denseaut
