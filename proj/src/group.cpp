#include "denseaut/group.hpp"

#include <algorithm>
#include <numeric>

#include "denseaut/linalg.hpp"

namespace denseaut {

struct Group::Node {
  Kind kind = Kind::FullLine;
  ExactScalar scalar;
  std::vector<Term> terms;
  CoeffDomain coeffs = CoeffDomain::Int;
  Integer modulus;
  std::vector<Group> children;
  std::optional<ExactMatrix> matrix;
  std::size_t n = 1;
};

const char* to_string(Group::Kind kind) {
  switch (kind) {
    case Group::Kind::Cyclic: return "Cyclic";
    case Group::Kind::MixedModule: return "MixedModule";
    case Group::Kind::LaurentRing: return "LaurentRing";
    case Group::Kind::FractionRing: return "FractionRing";
    case Group::Kind::DivisibleHull: return "DivisibleHull";
    case Group::Kind::Scaled: return "Scaled";
    case Group::Kind::FullLine: return "FullLine";
    case Group::Kind::Product: return "Product";
    case Group::Kind::Image: return "Image";
    case Group::Kind::FullSpace: return "FullSpace";
  }
  return "?";
}

// ------------------------------------------------------------ construction

Group Group::cyclic(const ExactScalar& generator) {
  if (generator.is_zero()) throw DomainError("cyclic generator must be nonzero");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cyclic;
  n->scalar = generator;
  return Group(std::move(n));
}

Group Group::mixed(std::vector<Term> terms) {
  if (terms.empty()) throw DomainError("module needs at least one generator");
  std::vector<ExactScalar> gens;
  for (const auto& t : terms) {
    if (t.generator.is_zero()) throw DomainError("module generators must be nonzero");
    gens.push_back(t.generator);
  }
  std::size_t rank = 0;
  try {
    rank = rational_rank(gens);
  } catch (const ContextError& e) {
    throw DomainError(std::string("module generators share no context: ") + e.what());
  }
  if (rank != gens.size()) throw DomainError("dependent generators: module generators must be Q-linearly independent");
  auto n = std::make_shared<Node>();
  n->kind = Kind::MixedModule;
  n->terms = std::move(terms);
  return Group(std::move(n));
}

Group Group::laurent_ring(CoeffDomain coeffs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::LaurentRing;
  n->coeffs = coeffs;
  return Group(std::move(n));
}

Group Group::fraction_ring(const Integer& m) {
  if (m < 2) throw DomainError("Zinv(m) needs m >= 2");
  auto n = std::make_shared<Node>();
  n->kind = Kind::FractionRing;
  n->modulus = m;
  return Group(std::move(n));
}

Group Group::hull(const Group& inner) {
  divisible_hull_form(inner);  // validates
  auto n = std::make_shared<Node>();
  n->kind = Kind::DivisibleHull;
  n->children = {inner};
  n->n = inner.dimension();
  return Group(std::move(n));
}

Group Group::scaled(const ExactScalar& r, const Group& inner) {
  if (!r.is_invertible()) throw DomainError("scale factor " + r.to_string() + " is not invertible");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scaled;
  n->scalar = r;
  n->children = {inner};
  n->n = inner.dimension();
  return Group(std::move(n));
}

Group Group::full_line() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FullLine;
  return Group(std::move(n));
}

Group Group::product(std::vector<Group> factors) {
  if (factors.empty()) throw DomainError("product needs at least one factor");
  for (const auto& f : factors)
    if (f.dimension() != 1) throw DomainError("product factors must be one-dimensional");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->n = factors.size();
  n->children = std::move(factors);
  return Group(std::move(n));
}

Group Group::image(const Group& inner, const ExactMatrix& a) {
  if (a.size() != inner.dimension()) throw DomainError("image: matrix size does not match group dimension");
  if (a.det().is_zero()) throw DomainError("image: singular matrix " + a.to_string());
  if (!a.det().is_invertible()) throw DomainError("image: determinant is not invertible in its context");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Image;
  n->children = {inner};
  n->matrix = a;
  n->n = a.size();
  return Group(std::move(n));
}

Group Group::full_space(std::size_t n) {
  if (n == 0) throw DomainError("dimension must be positive");
  if (n == 1) return full_line();
  auto node = std::make_shared<Node>();
  node->kind = Kind::FullSpace;
  node->n = n;
  return Group(std::move(node));
}

Group Group::power(const Group& factor, std::size_t n) {
  if (n == 0) throw DomainError("power must be positive");
  if (n == 1) return factor;
  if (factor.kind() == Kind::FullLine) return full_space(n);
  return product(std::vector<Group>(n, factor));
}

Group::Kind Group::kind() const { return node().kind; }
std::size_t Group::dimension() const { return node().n; }

namespace {
[[noreturn]] void wrong_kind(const char* what, Group::Kind k) {
  throw std::logic_error(std::string(what) + " called on " + to_string(k));
}
}  // namespace

const ExactScalar& Group::generator() const {
  if (kind() != Kind::Cyclic) wrong_kind("generator()", kind());
  return node().scalar;
}
const std::vector<Term>& Group::terms() const {
  if (kind() != Kind::MixedModule) wrong_kind("terms()", kind());
  return node().terms;
}
CoeffDomain Group::coeffs() const {
  if (kind() != Kind::LaurentRing) wrong_kind("coeffs()", kind());
  return node().coeffs;
}
const Integer& Group::modulus() const {
  if (kind() != Kind::FractionRing) wrong_kind("modulus()", kind());
  return node().modulus;
}
const Group& Group::inner() const {
  if (node().children.size() != 1 || kind() == Kind::Product) wrong_kind("inner()", kind());
  return node().children[0];
}
const ExactScalar& Group::scale_factor() const {
  if (kind() != Kind::Scaled) wrong_kind("scale_factor()", kind());
  return node().scalar;
}
const std::vector<Group>& Group::factors() const {
  if (kind() != Kind::Product) wrong_kind("factors()", kind());
  return node().children;
}
const ExactMatrix& Group::matrix() const {
  if (kind() != Kind::Image) wrong_kind("matrix()", kind());
  return *node().matrix;
}

// ------------------------------------------------------------ printing

namespace {

std::string scalar_atom(const ExactScalar& s) {
  std::string text = s.to_string();
  if (text.find(' ') != std::string::npos || text[0] == '-') return "(" + text + ")";
  return text;
}

bool needs_parens(const Group& g) {
  return (g.kind() == Group::Kind::MixedModule && g.terms().size() > 1) || g.kind() == Group::Kind::Product ||
         g.kind() == Group::Kind::Scaled;
}

std::string group_atom(const Group& g) {
  return needs_parens(g) ? "(" + g.to_string() + ")" : g.to_string();
}

}  // namespace

std::string Group::to_string() const {
  switch (kind()) {
    case Kind::Cyclic:
      return generator().is_one() ? "Z" : "cyclic(" + generator().to_string() + ")";
    case Kind::MixedModule: {
      const auto& ts = terms();
      if (ts.size() == 1 && ts[0].domain == CoeffDomain::Rat && ts[0].generator.is_one()) return "Q";
      std::string s;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) s += " + ";
        s += ts[i].domain == CoeffDomain::Int ? "Z*" : "Q*";
        s += scalar_atom(ts[i].generator);
      }
      return s;
    }
    case Kind::LaurentRing:
      return coeffs() == CoeffDomain::Int ? "ring(Z[t,1/t])" : "ring(Q[t,1/t])";
    case Kind::FractionRing:
      return "Zinv(" + modulus().get_str() + ")";
    case Kind::DivisibleHull:
      return "hull(" + inner().to_string() + ")";
    case Kind::Scaled:
      return scalar_atom(scale_factor()) + "*" + group_atom(inner());
    case Kind::FullLine:
      return "R";
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < factors().size(); ++i) {
        if (i) s += " x ";
        s += group_atom(factors()[i]);
      }
      return s;
    }
    case Kind::Image:
      return "image(" + inner().to_string() + ", " + matrix().to_string() + ")";
    case Kind::FullSpace:
      return "R^" + std::to_string(dimension());
  }
  return "?";
}

bool operator==(const Group& a, const Group& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.kind != y.kind || x.n != y.n) return false;
  switch (x.kind) {
    case Group::Kind::Cyclic:
      return x.scalar == y.scalar;
    case Group::Kind::MixedModule:
      if (x.terms.size() != y.terms.size()) return false;
      for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (x.terms[i].domain != y.terms[i].domain || x.terms[i].generator != y.terms[i].generator) return false;
      return true;
    case Group::Kind::LaurentRing:
      return x.coeffs == y.coeffs;
    case Group::Kind::FractionRing:
      return x.modulus == y.modulus;
    case Group::Kind::Scaled:
      return x.scalar == y.scalar && x.children == y.children;
    case Group::Kind::Image:
      return *x.matrix == *y.matrix && x.children == y.children;
    default:
      return x.children == y.children;
  }
}

// ------------------------------------------------------------ helpers

namespace {

using Kind = Group::Kind;

Vector single(const ExactScalar& s) { return Vector{s}; }

void require_dim(const Group& g, const Vector& v) {
  if (v.size() != g.dimension())
    throw DomainError("vector of dimension " + std::to_string(v.size()) + " tested against a " +
                      std::to_string(g.dimension()) + "-dimensional group");
}

std::vector<ExactScalar> generators_of(const std::vector<Term>& terms) {
  std::vector<ExactScalar> gens;
  for (const auto& t : terms) gens.push_back(t.generator);
  return gens;
}

// Throws ContextError when v cannot live alongside the group's scalars.
void check_context(const std::vector<ExactScalar>& gens, const ExactScalar& v) {
  FieldContext ctx = minimal_context(v);
  for (const auto& g : gens) ctx = FieldContext::join_or_throw(ctx, minimal_context(g));
}

bool laurent_ring_member(CoeffDomain coeffs, const ExactScalar& v) {
  if (v.context().is_algebraic()) {
    if (!v.is_rational()) {
      check_context({ExactScalar::t_power(1)}, v);
      return false;
    }
    return coeffs == CoeffDomain::Rat || is_integer(v.rational_value());
  }
  if (coeffs == CoeffDomain::Rat) return true;
  for (const auto& [k, c] : v.laurent())
    if (!is_integer(c)) return false;
  return true;
}

bool fraction_ring_member(const Integer& m, const ExactScalar& v) {
  if (!v.is_rational()) return false;
  Rational q = v.rational_value();
  if (q == 0) return true;
  return is_supported_on(Rational(q.get_den()), prime_divisors(m));
}

Vector pull_back(const Vector& v, const ExactMatrix& a) { return vec_mat_mul(v, a.inverse()); }

}  // namespace

// ------------------------------------------------------------ hull / normalize

Group divisible_hull_form(const Group& g) {
  switch (g.kind()) {
    case Kind::Cyclic:
      return Group::mixed({{CoeffDomain::Rat, g.generator()}});
    case Kind::MixedModule: {
      std::vector<Term> ts = g.terms();
      for (auto& t : ts) t.domain = CoeffDomain::Rat;
      return Group::mixed(std::move(ts));
    }
    case Kind::LaurentRing:
      return Group::laurent_ring(CoeffDomain::Rat);
    case Kind::FractionRing:
      throw DomainError("the divisible hull of " + g.to_string() + " has no supported closed form");
    case Kind::DivisibleHull:
      return divisible_hull_form(g.inner());
    case Kind::Scaled:
      return Group::scaled(g.scale_factor(), divisible_hull_form(g.inner()));
    case Kind::FullLine:
    case Kind::FullSpace:
      return g;
    case Kind::Product: {
      std::vector<Group> fs;
      for (const auto& f : g.factors()) fs.push_back(divisible_hull_form(f));
      return Group::product(std::move(fs));
    }
    case Kind::Image:
      return Group::image(divisible_hull_form(g.inner()), g.matrix());
  }
  return g;
}

namespace {

// Sign (and for Q-slots, scale) so the first coordinate in key order is positive (resp. 1).
ExactScalar canonical_generator(const ExactScalar& g, CoeffDomain domain) {
  auto coords = g.coordinate_map();
  if (coords.empty()) return g;
  const Rational& lead = coords.begin()->second;
  if (domain == CoeffDomain::Rat) return g * ExactScalar(Rational(1 / lead));
  return sgn(lead) < 0 ? -g : g;
}

bool term_less(const Term& a, const Term& b) {
  if (a.domain != b.domain) return a.domain == CoeffDomain::Int;
  return coord_less(a.generator, b.generator);
}

Group normalize_module(std::vector<Term> terms) {
  for (auto& t : terms) t.generator = canonical_generator(t.generator, t.domain);
  std::sort(terms.begin(), terms.end(), term_less);
  if (terms.size() == 1 && terms[0].domain == CoeffDomain::Int) return Group::cyclic(terms[0].generator);
  return Group::mixed(std::move(terms));
}

bool is_ring_unit(const Group& ring, const ExactScalar& r) {
  if (ring.kind() == Kind::LaurentRing) {
    if (!r.is_monomial()) return false;
    if (r.context().is_algebraic() && !r.is_rational()) return false;
    Rational c = r.context().is_algebraic() ? r.rational_value() : r.laurent().begin()->second;
    return ring.coeffs() == CoeffDomain::Rat || abs(c) == 1;
  }
  if (ring.kind() == Kind::FractionRing) {
    if (!r.is_rational() || r.is_zero()) return false;
    return is_supported_on(r.rational_value(), prime_divisors(ring.modulus()));
  }
  return false;
}

bool all_full_line(const std::vector<Group>& fs) {
  return std::all_of(fs.begin(), fs.end(), [](const Group& f) { return f.kind() == Kind::FullLine; });
}

Group normalize_scaled(const ExactScalar& r, const Group& inner);

Group normalize_image(const Group& inner, const ExactMatrix& a) {
  if (a == ExactMatrix::identity(a.size())) return inner;
  if (inner.kind() == Kind::FullSpace || inner.kind() == Kind::FullLine) return inner;
  if (inner.kind() == Kind::Image) return normalize_image(inner.inner(), inner.matrix() * a);
  bool scalar_matrix = true;
  for (std::size_t i = 0; i < a.size() && scalar_matrix; ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i == j ? a(i, j) != a(0, 0) : !a(i, j).is_zero()) {
        scalar_matrix = false;
        break;
      }
  if (scalar_matrix) return normalize_scaled(a(0, 0), inner);
  return Group::image(inner, a);
}

Group normalize_scaled(const ExactScalar& r, const Group& inner) {
  if (r.is_one()) return inner;
  switch (inner.kind()) {
    case Kind::Cyclic:
      return normalize_module({{CoeffDomain::Int, r * inner.generator()}});
    case Kind::MixedModule: {
      std::vector<Term> ts = inner.terms();
      for (auto& t : ts) t.generator = r * t.generator;
      return normalize_module(std::move(ts));
    }
    case Kind::FullLine:
    case Kind::FullSpace:
      return inner;
    case Kind::Product: {
      std::vector<Group> fs;
      for (const auto& f : inner.factors()) fs.push_back(normalize_scaled(r, f));
      return Group::product(std::move(fs));
    }
    case Kind::Image:
      return normalize_image(normalize_scaled(r, inner.inner()), inner.matrix());
    case Kind::Scaled:
      return normalize_scaled(r * inner.scale_factor(), inner.inner());
    case Kind::LaurentRing:
    case Kind::FractionRing:
      if (is_ring_unit(inner, r)) return inner;
      return Group::scaled(r, inner);
    case Kind::DivisibleHull:
      return normalize_scaled(r, normalize(inner));
  }
  return Group::scaled(r, inner);
}

}  // namespace

Group normalize(const Group& g) {
  switch (g.kind()) {
    case Kind::Cyclic:
      return Group::cyclic(canonical_generator(g.generator(), CoeffDomain::Int));
    case Kind::MixedModule:
      return normalize_module(g.terms());
    case Kind::LaurentRing:
    case Kind::FractionRing:
    case Kind::FullLine:
    case Kind::FullSpace:
      return g;
    case Kind::DivisibleHull:
      return normalize(divisible_hull_form(normalize(g.inner())));
    case Kind::Scaled:
      return normalize_scaled(g.scale_factor(), normalize(g.inner()));
    case Kind::Product: {
      std::vector<Group> fs;
      for (const auto& f : g.factors()) fs.push_back(normalize(f));
      if (fs.size() == 1) return fs[0];
      if (all_full_line(fs)) return Group::full_space(fs.size());
      return Group::product(std::move(fs));
    }
    case Kind::Image:
      return normalize_image(normalize(g.inner()), g.matrix());
  }
  return g;
}

// ------------------------------------------------------------ generating systems

std::optional<std::vector<Generator>> generating_system(const Group& g) {
  switch (g.kind()) {
    case Kind::Cyclic:
      return std::vector<Generator>{{SpanDomain::Int, single(g.generator())}};
    case Kind::MixedModule: {
      std::vector<Generator> out;
      for (const auto& t : g.terms())
        out.push_back({t.domain == CoeffDomain::Int ? SpanDomain::Int : SpanDomain::Rat, single(t.generator)});
      return out;
    }
    case Kind::LaurentRing:
    case Kind::FractionRing:
      return std::nullopt;
    case Kind::DivisibleHull:
      return generating_system(divisible_hull_form(g.inner()));
    case Kind::Scaled: {
      auto inner = generating_system(g.inner());
      if (!inner) return std::nullopt;
      for (auto& gen : *inner) gen.vector = scale(g.scale_factor(), gen.vector);
      return inner;
    }
    case Kind::FullLine:
      return std::vector<Generator>{{SpanDomain::Real, single(ExactScalar(1))}};
    case Kind::FullSpace: {
      std::vector<Generator> out;
      for (std::size_t i = 0; i < g.dimension(); ++i) {
        Vector e(g.dimension());
        e[i] = ExactScalar(1);
        out.push_back({SpanDomain::Real, std::move(e)});
      }
      return out;
    }
    case Kind::Product: {
      std::vector<Generator> out;
      const std::size_t n = g.dimension();
      for (std::size_t i = 0; i < n; ++i) {
        auto fg = generating_system(g.factors()[i]);
        if (!fg) return std::nullopt;
        for (const auto& gen : *fg) {
          Vector v(n);
          v[i] = gen.vector[0];
          out.push_back({gen.domain, std::move(v)});
        }
      }
      return out;
    }
    case Kind::Image: {
      auto inner = generating_system(g.inner());
      if (!inner) return std::nullopt;
      for (auto& gen : *inner) gen.vector = vec_mat_mul(gen.vector, g.matrix());
      return inner;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ membership

namespace {

MembershipVerdict member_module(const std::vector<Term>& terms, const ExactScalar& v) {
  std::vector<ExactScalar> gens = generators_of(terms);
  check_context(gens, v);
  auto c = solve_rational(gens, v);
  if (!c) return {false, std::nullopt};
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].domain == CoeffDomain::Int && !is_integer((*c)[i])) return {false, std::nullopt};
  std::vector<ExactScalar> w(c->begin(), c->end());
  return {true, std::move(w)};
}

}  // namespace

MembershipVerdict member(const Group& g, const Vector& v) {
  require_dim(g, v);
  switch (g.kind()) {
    case Kind::Cyclic:
      return member_module({{CoeffDomain::Int, g.generator()}}, v[0]);
    case Kind::MixedModule:
      return member_module(g.terms(), v[0]);
    case Kind::LaurentRing:
      return {laurent_ring_member(g.coeffs(), v[0]), std::nullopt};
    case Kind::FractionRing:
      return {fraction_ring_member(g.modulus(), v[0]), std::nullopt};
    case Kind::DivisibleHull:
      return member(divisible_hull_form(g.inner()), v);
    case Kind::Scaled:
      return member(g.inner(), scale(g.scale_factor().inverse(), v));
    case Kind::FullLine:
      return {true, std::vector<ExactScalar>{v[0]}};
    case Kind::FullSpace:
      return {true, v};
    case Kind::Product: {
      std::vector<ExactScalar> w;
      bool have_witness = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto r = member(g.factors()[i], single(v[i]));
        if (!r.member) return {false, std::nullopt};
        if (r.witness)
          w.insert(w.end(), r.witness->begin(), r.witness->end());
        else
          have_witness = false;
      }
      if (!have_witness) return {true, std::nullopt};
      return {true, std::move(w)};
    }
    case Kind::Image:
      return member(g.inner(), pull_back(v, g.matrix()));
  }
  return {};
}

MembershipVerdict member(const Group& g, const ExactScalar& v) { return member(g, single(v)); }

std::optional<Rational> rat_line_witness(const Group& g, const Vector& v) {
  require_dim(g, v);
  if (is_zero(v)) return std::nullopt;
  switch (g.kind()) {
    case Kind::Cyclic:
    case Kind::MixedModule: {
      std::vector<Term> terms =
          g.kind() == Kind::Cyclic ? std::vector<Term>{{CoeffDomain::Int, g.generator()}} : g.terms();
      std::vector<ExactScalar> gens = generators_of(terms);
      check_context(gens, v[0]);
      auto c = solve_rational(gens, v[0]);
      if (!c) return Rational(1);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const Rational& ci = (*c)[i];
        if (terms[i].domain == CoeffDomain::Int && ci != 0) {
          Rational q(1, Integer(2 * abs(ci.get_num())));
          q.canonicalize();
          return q;
        }
      }
      return std::nullopt;
    }
    case Kind::LaurentRing: {
      if (!laurent_ring_member(g.coeffs(), v[0])) return Rational(1);
      if (g.coeffs() == CoeffDomain::Rat) return std::nullopt;
      Rational c = v[0].context().is_algebraic() ? v[0].rational_value() : v[0].laurent().begin()->second;
      Rational q(1, Integer(2 * abs(c.get_num())));
      q.canonicalize();
      return q;
    }
    case Kind::FractionRing: {
      if (!fraction_ring_member(g.modulus(), v[0])) return Rational(1);
      Integer num = abs(v[0].rational_value().get_num());
      Integer p = 2;
      while (mpz_divisible_p(g.modulus().get_mpz_t(), p.get_mpz_t()) ||
             mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t()) || !is_prime(p))
        ++p;
      return Rational(Integer(1), p);
    }
    case Kind::DivisibleHull:
      return rat_line_witness(divisible_hull_form(g.inner()), v);
    case Kind::Scaled:
      return rat_line_witness(g.inner(), scale(g.scale_factor().inverse(), v));
    case Kind::FullLine:
    case Kind::FullSpace:
      return std::nullopt;
    case Kind::Product:
      for (std::size_t i = 0; i < v.size(); ++i)
        if (auto q = rat_line_witness(g.factors()[i], single(v[i]))) return q;
      return std::nullopt;
    case Kind::Image:
      return rat_line_witness(g.inner(), pull_back(v, g.matrix()));
  }
  return std::nullopt;
}

bool rat_line_member(const Group& g, const Vector& v) { return !rat_line_witness(g, v).has_value(); }

bool real_line_member(const Group& g, const Vector& v) {
  require_dim(g, v);
  if (is_zero(v)) return true;
  switch (g.kind()) {
    case Kind::FullLine:
    case Kind::FullSpace:
      return true;
    case Kind::DivisibleHull:
      return real_line_member(divisible_hull_form(g.inner()), v);
    case Kind::Scaled:
      return real_line_member(g.inner(), scale(g.scale_factor().inverse(), v));
    case Kind::Product:
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!real_line_member(g.factors()[i], single(v[i]))) return false;
      return true;
    case Kind::Image:
      return real_line_member(g.inner(), pull_back(v, g.matrix()));
    default:
      return false;  // countable one-dimensional groups contain no line
  }
}

std::optional<ExactScalar> real_line_witness(const Group& g, const Vector& v) {
  if (real_line_member(g, v)) return std::nullopt;
  std::vector<ExactScalar> candidates;
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    candidates.push_back(ExactScalar::sqrt_of(Rational(p)));
  candidates.push_back(ExactScalar::t_power(1));
  for (const auto& r : candidates) {
    try {
      if (!member(g, scale(r, v)).member) return r;
    } catch (const ContextError&) {
      continue;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ structure

bool is_divisible(const Group& g) {
  switch (g.kind()) {
    case Kind::Cyclic:
    case Kind::FractionRing:
      return false;
    case Kind::MixedModule:
      // Int slots are never absorbed: generators are independent.
      return std::all_of(g.terms().begin(), g.terms().end(),
                         [](const Term& t) { return t.domain == CoeffDomain::Rat; });
    case Kind::LaurentRing:
      return g.coeffs() == CoeffDomain::Rat;
    case Kind::DivisibleHull:
    case Kind::FullLine:
    case Kind::FullSpace:
      return true;
    case Kind::Scaled:
    case Kind::Image:
      return is_divisible(g.inner());
    case Kind::Product:
      return std::all_of(g.factors().begin(), g.factors().end(), [](const Group& f) { return is_divisible(f); });
  }
  return false;
}

std::optional<std::pair<Vector, long>> divisibility_counterexample(const Group& g) {
  if (is_divisible(g)) return std::nullopt;
  switch (g.kind()) {
    case Kind::Cyclic:
      return std::make_pair(single(g.generator()), 2L);
    case Kind::MixedModule:
      for (const auto& t : g.terms())
        if (t.domain == CoeffDomain::Int) return std::make_pair(single(t.generator), 2L);
      return std::nullopt;
    case Kind::LaurentRing:
      return std::make_pair(single(ExactScalar(1)), 2L);
    case Kind::FractionRing: {
      long p = 2;
      while (mpz_divisible_ui_p(g.modulus().get_mpz_t(), static_cast<unsigned long>(p)) || !is_prime(Integer(p))) ++p;
      return std::make_pair(single(ExactScalar(1)), p);
    }
    case Kind::Scaled: {
      auto c = divisibility_counterexample(g.inner());
      if (c) c->first = scale(g.scale_factor(), c->first);
      return c;
    }
    case Kind::Image: {
      auto c = divisibility_counterexample(g.inner());
      if (c) c->first = vec_mat_mul(c->first, g.matrix());
      return c;
    }
    case Kind::Product:
      for (std::size_t i = 0; i < g.factors().size(); ++i) {
        if (auto c = divisibility_counterexample(g.factors()[i])) {
          Vector v(g.dimension());
          v[i] = c->first[0];
          return std::make_pair(std::move(v), c->second);
        }
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

bool is_cyclic(const Group& g) {
  switch (g.kind()) {
    case Kind::Cyclic:
      return true;
    case Kind::MixedModule:
      return g.terms().size() == 1 && g.terms()[0].domain == CoeffDomain::Int;
    case Kind::Scaled:
      return is_cyclic(g.inner());
    case Kind::Image:
      return is_cyclic(g.inner());
    default:
      return false;
  }
}

bool is_dense(const Group& g) {
  switch (g.kind()) {
    case Kind::Product:
      return std::all_of(g.factors().begin(), g.factors().end(), [](const Group& f) { return is_dense(f); });
    case Kind::Image:
    case Kind::Scaled:
      return is_dense(g.inner());
    case Kind::FullSpace:
    case Kind::FullLine:
    case Kind::DivisibleHull:
      return true;
    default:
      // every descriptor denotes a nonzero group, and non-cyclic subgroups of R are dense
      return g.dimension() == 1 && !is_cyclic(g);
  }
}

std::optional<Group> reduce_cyclic(std::span<const ExactScalar> int_generators) {
  if (int_generators.empty()) return std::nullopt;
  const ExactScalar& base = int_generators[0];
  if (base.is_zero()) return std::nullopt;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& g : int_generators) {
    auto c = solve_rational({base}, g);
    if (!c) return std::nullopt;
    const Rational& q = (*c)[0];
    if (q == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  Rational step(num_gcd, den_lcm);
  step.canonicalize();
  return normalize(Group::cyclic(base * ExactScalar(step)));
}

ExactScalar some_nonzero_member(const Group& g) {
  switch (g.kind()) {
    case Kind::Cyclic:
      return g.generator();
    case Kind::MixedModule:
      return g.terms()[0].generator;
    case Kind::LaurentRing:
    case Kind::FractionRing:
    case Kind::FullLine:
      return ExactScalar(1);
    case Kind::DivisibleHull:
      return some_nonzero_member(g.inner());
    case Kind::Scaled:
      return g.scale_factor() * some_nonzero_member(g.inner());
    default:
      throw DomainError("some_nonzero_member needs a one-dimensional group");
  }
}

std::vector<Vector> basis_from_group(const Group& g) {
  if (!is_dense(g)) throw DomainError("basis_from_group needs a dense group; " + g.to_string() + " is not dense");
  const std::size_t n = g.dimension();
  std::vector<Vector> basis;
  switch (g.kind()) {
    case Kind::Product:
      for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = some_nonzero_member(g.factors()[i]);
        basis.push_back(std::move(e));
      }
      break;
    case Kind::FullSpace:
      for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = ExactScalar(1);
        basis.push_back(std::move(e));
      }
      break;
    case Kind::Image:
      for (const auto& b : basis_from_group(g.inner())) basis.push_back(vec_mat_mul(b, g.matrix()));
      break;
    case Kind::Scaled:
      for (const auto& b : basis_from_group(g.inner())) basis.push_back(scale(g.scale_factor(), b));
      break;
    case Kind::DivisibleHull:
      return basis_from_group(divisible_hull_form(g.inner()));
    default:
      basis.push_back(single(some_nonzero_member(g)));
  }
  ExactMatrix m(basis);
  if (m.det().is_zero()) throw std::logic_error("basis_from_group produced a singular basis");
  return basis;
}

std::optional<bool> subgroup_of(const Group& inner, const Group& outer) {
  auto gens = generating_system(inner);
  if (!gens) return std::nullopt;
  for (const auto& gen : *gens) {
    bool ok = false;
    switch (gen.domain) {
      case SpanDomain::Int: ok = member(outer, gen.vector).member; break;
      case SpanDomain::Rat: ok = rat_line_member(outer, gen.vector); break;
      case SpanDomain::Real: ok = real_line_member(outer, gen.vector); break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace denseaut
