#include "denseaut/aut.hpp"

#include <algorithm>

#include "denseaut/linalg.hpp"

namespace denseaut {

using Kind = AutDescriptor::Kind;
using GKind = Group::Kind;

// ------------------------------------------------------------ descriptors

AutDescriptor AutDescriptor::plus_minus_one(std::size_t n) {
  AutDescriptor d;
  d.kind = Kind::PlusMinusOne;
  d.n = n;
  return d;
}

AutDescriptor AutDescriptor::rat_star() {
  AutDescriptor d;
  d.kind = Kind::RatStar;
  return d;
}

AutDescriptor AutDescriptor::field_units(const Integer& radicand) {
  AutDescriptor d;
  d.kind = Kind::FieldUnits;
  d.d = radicand;
  return d;
}

AutDescriptor AutDescriptor::pm_powers(const ExactScalar& base) {
  AutDescriptor d;
  d.kind = Kind::PMPowers;
  d.base = base;
  return d;
}

AutDescriptor AutDescriptor::rat_times_pm_powers(const ExactScalar& base) {
  AutDescriptor d;
  d.kind = Kind::RatTimesPMPowers;
  d.base = base;
  return d;
}

AutDescriptor AutDescriptor::glq(std::size_t n) {
  AutDescriptor d;
  d.kind = Kind::GLQ;
  d.n = n;
  return d;
}

AutDescriptor AutDescriptor::glr(std::size_t n) {
  AutDescriptor d;
  d.kind = Kind::GLR;
  d.n = n;
  return d;
}

AutDescriptor AutDescriptor::block_triangular(std::size_t p, std::size_t q) {
  AutDescriptor d;
  d.kind = Kind::BlockTriangular;
  d.p = p;
  d.q = q;
  d.n = p + q;
  return d;
}

AutDescriptor AutDescriptor::pattern_quad(const ExactScalar& x) {
  AutDescriptor d;
  d.kind = Kind::PatternQuad;
  d.n = 2;
  d.pattern = x;
  return d;
}

AutDescriptor AutDescriptor::ez_lower_bound(std::size_t n) {
  AutDescriptor d;
  d.kind = Kind::EZLowerBound;
  d.n = n;
  return d;
}

AutDescriptor AutDescriptor::conjugated(const AutDescriptor& inner, const ExactMatrix& a) {
  if (inner.n != a.size()) throw DomainError("conjugating matrix has the wrong size");
  AutDescriptor d;
  d.kind = Kind::Conjugated;
  d.n = inner.n;
  d.inner = std::make_shared<const AutDescriptor>(inner);
  d.conjugator = a;
  return d;
}

const char* to_string(AutDescriptor::Kind kind) {
  switch (kind) {
    case Kind::PlusMinusOne: return "PlusMinusOne";
    case Kind::RatStar: return "RatStar";
    case Kind::FieldUnits: return "FieldUnits";
    case Kind::PMPowers: return "PMPowers";
    case Kind::RatTimesPMPowers: return "RatTimesPMPowers";
    case Kind::GLQ: return "GLQ";
    case Kind::GLR: return "GLR";
    case Kind::BlockTriangular: return "BlockTriangular";
    case Kind::PatternQuad: return "PatternQuad";
    case Kind::EZLowerBound: return "EZLowerBound";
    case Kind::Conjugated: return "Conjugated";
  }
  return "?";
}

std::string AutDescriptor::label() const {
  const std::string dim = "(" + std::to_string(n) + ")";
  switch (kind) {
    case Kind::PlusMinusOne: return "PM1";
    case Kind::RatStar: return "RatStar";
    case Kind::FieldUnits: return "FieldUnits(" + d.get_str() + ")";
    case Kind::PMPowers: return "PMPowers(" + base.to_string() + ")";
    case Kind::RatTimesPMPowers: return "RatTimesPMPowers(" + base.to_string() + ")";
    case Kind::GLQ: return "GLQ" + dim;
    case Kind::GLR: return "GLR" + dim;
    case Kind::BlockTriangular: return "BlockTriangular(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Kind::PatternQuad: return "PatternQuad(" + pattern.to_string() + ")";
    case Kind::EZLowerBound: return "EZ" + dim;
    case Kind::Conjugated: return "Conjugated(" + inner->label() + ", " + conjugator->to_string() + ")";
  }
  return "?";
}

bool operator==(const AutDescriptor& a, const AutDescriptor& b) {
  if (a.kind != b.kind || a.n != b.n) return false;
  switch (a.kind) {
    case Kind::FieldUnits: return a.d == b.d;
    case Kind::PMPowers:
    case Kind::RatTimesPMPowers: return a.base == b.base;
    case Kind::BlockTriangular: return a.p == b.p && a.q == b.q;
    case Kind::PatternQuad: return a.pattern == b.pattern;
    case Kind::Conjugated: return *a.inner == *b.inner && *a.conjugator == *b.conjugator;
    default: return true;
  }
}

ExactMatrix as_matrix(const ExactScalar& s, std::size_t n) { return ExactMatrix::scalar(n, s); }

namespace {

bool is_scalar_matrix(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i == j ? m(i, j) != m(0, 0) : !m(i, j).is_zero()) return false;
  return true;
}

bool lives_in_quad(const ExactScalar& s, const Integer& d) {
  try {
    s.embed(FieldContext::quad(d));
    return true;
  } catch (const ContextError&) {
    return false;
  }
}

// +-base^k for integer k.
bool is_pm_power(const ExactScalar& s, const ExactScalar& base) {
  if (s.is_zero()) return false;
  if (base == ExactScalar::t_power(1)) {
    if (!s.is_monomial() || s.context().is_algebraic()) return false;
    return abs(s.laurent().begin()->second) == 1;
  }
  if (!base.is_rational() || !s.is_rational()) return false;
  long k = 0;
  return integer_log(s.rational_value(), base.rational_value().get_num(), k);
}

bool is_rat_times_power(const ExactScalar& s, const ExactScalar& base) {
  if (s.is_zero()) return false;
  if (base == ExactScalar::t_power(1)) {
    if (s.is_rational()) return true;
    return s.is_monomial() && !s.context().is_algebraic();
  }
  return s.is_rational();
}

}  // namespace

bool AutDescriptor::contains(const ExactMatrix& m) const {
  if (m.size() != n) throw DomainError("matrix size " + std::to_string(m.size()) + " does not match " + label());
  if (m.det().is_zero()) return false;
  switch (kind) {
    case Kind::PlusMinusOne:
      return is_scalar_matrix(m) && (m(0, 0) == ExactScalar(1) || m(0, 0) == ExactScalar(-1));
    case Kind::RatStar:
      return m(0, 0).is_rational();
    case Kind::FieldUnits:
      return lives_in_quad(m(0, 0), d);
    case Kind::PMPowers:
      return is_pm_power(m(0, 0), base);
    case Kind::RatTimesPMPowers:
      return is_rat_times_power(m(0, 0), base);
    case Kind::GLQ:
      return m.is_rational();
    case Kind::GLR:
      return true;
    case Kind::BlockTriangular:
      return block_triangular_member(p, q, m);
    case Kind::PatternQuad:
      return pattern_quad_member(pattern, m);
    case Kind::EZLowerBound:
      return classify(m).in_EZ;
    case Kind::Conjugated:
      if (!conjugator->is_invertible()) return false;
      return inner->contains(*conjugator * m * conjugator->inverse());
  }
  return false;
}

bool AutDescriptor::contains(const ExactScalar& s) const { return contains(as_matrix(s, n)); }

// ------------------------------------------------------------ certificates

namespace {

// v outside every field containing G cannot be in G, so a context clash
// answers "not a member" here.
bool member_or_outside(const Group& g, const Vector& v) {
  try {
    return member(g, v).member;
  } catch (const ContextError&) {
    return false;
  }
}

bool is_ring(const Group& g) { return g.kind() == GKind::LaurentRing || g.kind() == GKind::FractionRing; }

Certificate ring_certificate(const Group& ring, const ExactScalar& shift, const ExactScalar& r) {
  Certificate c;
  Vector one{shift};
  Vector image{shift * r};
  if (!member_or_outside(ring, Vector{r})) {
    c.verdict = false;
    c.failing_generator = one;
    c.image = image;
    c.reason = r.to_string() + " is not in " + ring.to_string();
    return c;
  }
  if (!is_unit(ring, r)) {
    c.verdict = false;
    c.failing_generator = one;
    c.direction = Certificate::Direction::Inverse;
    if (r.is_invertible()) c.image = Vector{shift * r.inverse()};
    c.reason = r.to_string() + " is not a unit of " + ring.to_string();
    return c;
  }
  c.reason = r.to_string() + " is a unit of " + ring.to_string();
  return c;
}

std::optional<Certificate> check_direction(const Group& g, const std::vector<Generator>& gens, const ExactMatrix& a,
                                           Certificate::Direction dir) {
  for (const auto& gen : gens) {
    Vector image = vec_mat_mul(gen.vector, a);
    Certificate c;
    c.verdict = false;
    c.direction = dir;
    switch (gen.domain) {
      case SpanDomain::Int:
        if (member_or_outside(g, image)) continue;
        c.failing_generator = gen.vector;
        c.image = image;
        c.reason = "image of a Z-generator leaves the group";
        return c;
      case SpanDomain::Rat: {
        std::optional<Rational> q;
        try {
          q = rat_line_witness(g, image);
        } catch (const ContextError&) {
          q = Rational(1);
        }
        if (!q) continue;
        c.failing_generator = scale(ExactScalar(*q), gen.vector);
        c.image = scale(ExactScalar(*q), image);
        c.reason = "a rational multiple of the image of a Q-generator leaves the group";
        return c;
      }
      case SpanDomain::Real: {
        bool inside = false;
        try {
          inside = real_line_member(g, image);
        } catch (const ContextError&) {
        }
        if (inside) continue;
        ExactScalar r(1);
        try {
          if (member_or_outside(g, image))
            if (auto w = real_line_witness(g, image)) r = *w;
        } catch (const ContextError&) {
        }
        c.failing_generator = scale(r, gen.vector);
        c.image = scale(r, image);
        c.reason = "a real multiple of the image of an R-generator leaves the group";
        return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate acts_invariantly(const Group& g0, const ExactMatrix& a) {
  if (a.size() != g0.dimension())
    throw DomainError("matrix size " + std::to_string(a.size()) + " does not match group dimension " +
                      std::to_string(g0.dimension()));
  if (a.det().is_zero()) throw DomainError("singular matrix " + a.to_string());
  const Group g = normalize(g0);

  if (g.dimension() == 1) {
    if (is_ring(g)) return ring_certificate(g, ExactScalar(1), a(0, 0));
    if (g.kind() == GKind::Scaled && is_ring(g.inner()))
      return ring_certificate(g.inner(), g.scale_factor(), a(0, 0));
  }

  auto gens = generating_system(g);
  if (!gens) throw UnsupportedError("no certificate procedure for " + g.to_string());
  if (auto c = check_direction(g, *gens, a, Certificate::Direction::Forward)) return *c;
  if (!a.is_invertible())
    throw DomainError("determinant " + a.det().to_string() + " is not invertible in its context");
  if (auto c = check_direction(g, *gens, a.inverse(), Certificate::Direction::Inverse)) return *c;
  Certificate ok;
  ok.reason = "every generator image stays in the group in both directions";
  return ok;
}

Certificate acts_invariantly(const Group& g, const ExactScalar& s) {
  return acts_invariantly(g, as_matrix(s, g.dimension()));
}

// ------------------------------------------------------------ units

bool is_unit(const Group& ring0, const ExactScalar& r) {
  const Group ring = normalize(ring0);
  if (r.is_zero()) throw DomainError("zero is never a unit");
  if (!member_or_outside(ring, Vector{r})) throw DomainError(r.to_string() + " is not in " + ring.to_string());
  switch (ring.kind()) {
    case GKind::LaurentRing: {
      if (!r.is_monomial()) return false;
      Rational c = r.context().is_algebraic() ? r.rational_value() : r.laurent().begin()->second;
      return ring.coeffs() == CoeffDomain::Rat || abs(c) == 1;
    }
    case GKind::FractionRing:
      return is_supported_on(r.rational_value(), prime_divisors(ring.modulus()));
    case GKind::Cyclic:
      if (!ring.generator().is_one()) break;
      return r == ExactScalar(1) || r == ExactScalar(-1);
    case GKind::MixedModule: {
      const auto& ts = ring.terms();
      bool field_like = std::all_of(ts.begin(), ts.end(), [](const Term& t) { return t.domain == CoeffDomain::Rat; });
      field_like = field_like && rat_line_member(ring, Vector{ExactScalar(1)});
      for (const auto& x : ts)
        for (const auto& y : ts)
          if (field_like && !rat_line_member(ring, Vector{x.generator * y.generator})) field_like = false;
      if (!field_like) break;
      // closed under products and finite-dimensional over Q, hence a field
      return true;
    }
    default:
      break;
  }
  throw DomainError(ring.to_string() + " is not a supported ring");
}

// ------------------------------------------------------------ rule table

namespace {

std::optional<ExactScalar> rat_line_generator(const Group& f) {
  if (f.kind() == GKind::MixedModule && f.terms().size() == 1 && f.terms()[0].domain == CoeffDomain::Rat)
    return f.terms()[0].generator;
  return std::nullopt;
}

bool square_is_rational(const ExactScalar& x) { return (x * x).is_rational(); }

AutResult fallback(const Group& g) {
  std::vector<AutDescriptor> lower;
  const std::size_t n = g.dimension();
  if (is_divisible(g)) lower.push_back(n == 1 ? AutDescriptor::rat_star() : AutDescriptor::glq(n));
  lower.push_back(AutDescriptor::plus_minus_one(n));
  return AutResult::bounds(std::move(lower));
}

AutResult module_rule(const Group& g) {
  const auto& ts = g.terms();
  if (ts.size() == 1) {
    if (ts[0].domain == CoeffDomain::Rat) return AutResult::of(AutDescriptor::rat_star());
    return AutResult::of(AutDescriptor::plus_minus_one());
  }
  if (ts.size() != 2) return fallback(g);
  if (ts[0].domain != ts[1].domain) {
    // Z*a + Q*b with (b/a)^2 rational and b/a irrational: rigid
    const ExactScalar& zi = ts[0].domain == CoeffDomain::Int ? ts[0].generator : ts[1].generator;
    const ExactScalar& qr = ts[0].domain == CoeffDomain::Int ? ts[1].generator : ts[0].generator;
    auto rho = ratio(qr, zi);
    if (rho && !rho->is_rational() && square_is_rational(*rho)) return AutResult::of(AutDescriptor::plus_minus_one());
    return fallback(g);
  }
  if (ts[0].domain == CoeffDomain::Int) return fallback(g);
  // x*(Q + Q*rho)
  auto rho = ratio(ts[1].generator, ts[0].generator);
  if (!rho) rho = ratio(ts[0].generator, ts[1].generator);
  if (!rho || rho->is_rational()) return fallback(g);
  ExactScalar sq = *rho * *rho;
  std::optional<std::vector<Rational>> c;
  try {
    c = solve_rational({ExactScalar(1), *rho}, sq);
  } catch (const ContextError&) {
    return fallback(g);
  }
  if (!c) return AutResult::of(AutDescriptor::rat_star());
  FieldContext k = minimal_context(*rho);
  if (k.kind() != FieldContext::Kind::Quad) return fallback(g);
  return AutResult::of(AutDescriptor::field_units(k.radicands()[1]));
}

AutResult product_rule(const Group& g) {
  const auto& fs = g.factors();
  const std::size_t n = fs.size();
  std::vector<std::optional<ExactScalar>> lines;
  for (const auto& f : fs) lines.push_back(rat_line_generator(f));

  std::size_t p = 0;
  while (p < n && lines[p]) ++p;
  bool rest_real = std::all_of(fs.begin() + static_cast<long>(p), fs.end(),
                               [](const Group& f) { return f.kind() == GKind::FullLine; });
  bool commensurable = p > 0;
  for (std::size_t i = 1; i < p && commensurable; ++i) {
    auto r = ratio(*lines[i], *lines[0]);
    commensurable = r && r->is_rational();
  }

  if (p == n && commensurable) return AutResult::of(AutDescriptor::glq(n));
  if (p == n && n == 2) {
    auto rho = ratio(*lines[1], *lines[0]);
    if (rho && !rho->is_rational() && square_is_rational(*rho)) {
      RadicalForm rf = canonicalize_radical((*rho * *rho).rational_value());
      return AutResult::of(AutDescriptor::pattern_quad(ExactScalar::sqrt_of(Rational(rf.core))));
    }
  }
  if (p > 0 && p < n && rest_real && commensurable) return AutResult::of(AutDescriptor::block_triangular(p, n - p));

  bool identical = std::all_of(fs.begin(), fs.end(), [&](const Group& f) { return f == fs[0]; });
  if (identical) {
    std::vector<AutDescriptor> lower;
    if (is_divisible(fs[0])) lower.push_back(AutDescriptor::glq(n));
    lower.push_back(AutDescriptor::ez_lower_bound(n));
    lower.push_back(AutDescriptor::plus_minus_one(n));
    return AutResult::bounds(std::move(lower));
  }
  return fallback(g);
}

AutResult conjugate_result(const AutResult& r, const ExactMatrix& a) {
  if (r.is_exact()) return AutResult::of(AutDescriptor::conjugated(*r.exact, a));
  AutResult out;
  for (const auto& d : r.lower) out.lower.push_back(AutDescriptor::conjugated(d, a));
  for (const auto& d : r.upper) out.upper.push_back(AutDescriptor::conjugated(d, a));
  return out;
}

AutResult rule(const Group& g) {
  switch (g.kind()) {
    case GKind::Cyclic:
      return AutResult::of(AutDescriptor::plus_minus_one());
    case GKind::MixedModule:
      return module_rule(g);
    case GKind::LaurentRing:
      if (g.coeffs() == CoeffDomain::Int) return AutResult::of(AutDescriptor::pm_powers(ExactScalar::t_power(1)));
      return AutResult::of(AutDescriptor::rat_times_pm_powers(ExactScalar::t_power(1)));
    case GKind::FractionRing: {
      if (is_prime(g.modulus())) return AutResult::of(AutDescriptor::pm_powers(ExactScalar(g.modulus())));
      std::vector<AutDescriptor> lower;
      for (const auto& p : prime_divisors(g.modulus())) lower.push_back(AutDescriptor::pm_powers(ExactScalar(p)));
      return AutResult::bounds(std::move(lower));
    }
    case GKind::FullLine:
      return AutResult::of(AutDescriptor::glr(1));
    case GKind::FullSpace:
      return AutResult::of(AutDescriptor::glr(g.dimension()));
    case GKind::Scaled:
      return rule(g.inner());
    case GKind::Image: {
      AutResult inner = rule(g.inner());
      return conjugate_result(inner, g.matrix());
    }
    case GKind::Product:
      return product_rule(g);
    case GKind::DivisibleHull:
      return rule(normalize(g));
  }
  return fallback(g);
}

}  // namespace

AutResult aut_group(const Group& g) { return rule(normalize(g)); }

bool aut_member(const Group& g, const ExactMatrix& a) {
  AutResult res = aut_group(g);
  if (!res.is_exact()) return acts_invariantly(g, a).verdict;
  bool predicate = res.exact->contains(a);
  try {
    bool certified = acts_invariantly(g, a).verdict;
    if (certified != predicate)
      throw std::logic_error("descriptor " + res.exact->label() + " and certificate disagree on " + a.to_string() +
                             " for " + g.to_string());
  } catch (const UnsupportedError&) {
  }
  return predicate;
}

bool aut_member(const Group& g, const ExactScalar& s) { return aut_member(g, as_matrix(s, g.dimension())); }

// ------------------------------------------------------------ realizability

Realization realize_Ax(const Integer& m) {
  if (m < 2) throw DomainError("realize_Ax needs m >= 2");
  Realization r;
  if (is_prime(m)) {
    r.group = Group::fraction_ring(m);
    return r;
  }
  Integer d = prime_divisors(m).front();
  Group g = Group::fraction_ring(m);
  Certificate c = acts_invariantly(g, ExactScalar(d));
  long k = 0;
  if (!c.verdict || integer_log(Rational(d), m, k))
    throw std::logic_error("refuting divisor " + d.get_str() + " failed to certify for m = " + m.get_str());
  r.refuter = d;
  r.refuter_certificate = c;
  return r;
}

bool conjugation_transfer(const Group& g, const ExactMatrix& a, const ExactMatrix& b) {
  if (a.det().is_zero() || b.det().is_zero()) throw DomainError("conjugation_transfer needs invertible matrices");
  bool lhs = acts_invariantly(Group::image(g, a), b).verdict;
  bool rhs = acts_invariantly(g, a * b * a.inverse()).verdict;
  if (lhs != rhs) throw std::logic_error("conjugation transfer failed for " + g.to_string());
  return lhs;
}

// ------------------------------------------------------------ cardinality

namespace {

ExactMatrix infinite_order_witness(const AutDescriptor& d) {
  switch (d.kind) {
    case Kind::RatStar:
      return as_matrix(ExactScalar(2));
    case Kind::FieldUnits:
      return as_matrix(ExactScalar(1) + ExactScalar::sqrt_of(Rational(d.d)));
    case Kind::PMPowers:
    case Kind::RatTimesPMPowers:
      return as_matrix(d.base);
    case Kind::GLQ:
    case Kind::GLR:
    case Kind::BlockTriangular:
    case Kind::PatternQuad:
      return as_matrix(ExactScalar(2), d.n);
    case Kind::EZLowerBound:
      return ExactMatrix::shear(d.n, 0, 1, ExactScalar(1));
    case Kind::Conjugated: {
      ExactMatrix w = infinite_order_witness(*d.inner);
      return d.conjugator->inverse() * w * *d.conjugator;
    }
    case Kind::PlusMinusOne:
      break;
  }
  throw std::logic_error("no infinite-order witness for " + d.label());
}

}  // namespace

CardinalityVerdict cardinality_class(const AutResult& res) {
  if (!res.is_exact()) throw DomainError("cardinality_class needs an exact result");
  const AutDescriptor& d = *res.exact;
  if (d.kind == Kind::PlusMinusOne) return {Cardinality::Two, std::nullopt};
  ExactMatrix s = infinite_order_witness(d);
  ExactMatrix s2 = s * s;
  ExactMatrix s3 = s2 * s;
  if (s == s2 || s == s3 || s2 == s3 || !d.contains(s) || !d.contains(s2) || !d.contains(s3))
    throw std::logic_error("infinite-order witness check failed for " + d.label());
  return {Cardinality::Infinite, s};
}

}  // namespace denseaut
