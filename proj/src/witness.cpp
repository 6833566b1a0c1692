#include "denseaut/witness.hpp"

#include <cmath>
#include <numeric>

namespace denseaut {

namespace {

// 1, -1, then p/q by height up to 8.
std::vector<ExactScalar> rational_steps() {
  std::vector<ExactScalar> out{ExactScalar(1), ExactScalar(-1)};
  for (long h = 2; h <= 8; ++h) {
    for (long den = 1; den <= h; ++den)
      for (long num = 1; num <= h; ++num) {
        if (std::max(num, den) != h || std::gcd(num, den) != 1) continue;
        Rational q(num, den);
        q.canonicalize();
        out.emplace_back(q);
        out.emplace_back(Rational(-q));
      }
  }
  return out;
}

void collect_radicands(const Group& g, std::set<Integer>& out) {
  auto gens = generating_system(g);
  if (!gens) return;
  for (const auto& gen : *gens)
    for (const auto& x : gen.vector) {
      FieldContext k = minimal_context(x);
      if (!k.is_algebraic()) continue;
      for (std::size_t i = 1; i < k.degree(); ++i) out.insert(k.radicands()[i]);
    }
}

std::vector<ExactScalar> surd_steps(const Group& g) {
  std::set<Integer> seen;
  std::vector<ExactScalar> out;
  for (long r : {2, 3, 5})
    if (seen.insert(Integer(r)).second) out.push_back(ExactScalar::sqrt_of(Rational(r)));
  std::set<Integer> ctx;
  collect_radicands(g, ctx);
  for (const auto& r : ctx)
    if (seen.insert(r).second) out.push_back(ExactScalar::sqrt_of(Rational(r)));
  out.push_back(ExactScalar::t_power(1));
  return out;
}

ExactMatrix rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& c, const Rational& s) {
  auto rows = ExactMatrix::identity(n).rows();
  rows[i][i] = ExactScalar(c);
  rows[j][j] = ExactScalar(c);
  rows[i][j] = ExactScalar(s);
  rows[j][i] = ExactScalar(Rational(-s));
  return ExactMatrix(std::move(rows));
}

}  // namespace

SLWitness sl_obstruction_witness(const Group& g, std::size_t budget) {
  const Group ng = normalize(g);
  const std::size_t n = ng.dimension();
  if (ng.kind() == Group::Kind::FullSpace || ng.kind() == Group::Kind::FullLine)
    throw DomainError("the full space is preserved by every invertible matrix");
  if (!is_dense(ng)) throw DomainError(g.to_string() + " is not dense");
  if (n < 2) throw DomainError("determinant-one matrices are trivial in dimension one");

  std::vector<ExactMatrix> candidates;
  std::vector<ExactScalar> lambdas = rational_steps();
  for (const auto& s : surd_steps(ng)) lambdas.push_back(s);
  for (const auto& lambda : lambdas)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) candidates.push_back(ExactMatrix::shear(n, i, j, lambda));
  const std::pair<long, long> triples[] = {{3, 4}, {5, 12}, {8, 15}, {7, 24}};
  for (const auto& [a, b] : triples) {
    long c = std::lround(std::sqrt(static_cast<double>(a * a + b * b)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(rotation(n, i, j, Rational(a, c), Rational(b, c)));
  }

  std::size_t tried = 0;
  for (const auto& w : candidates) {
    if (tried >= budget) break;
    ++tried;
    try {
      Certificate c = acts_invariantly(ng, w);
      if (!c.verdict) return {w, c, tried};
    } catch (const ContextError&) {
      continue;
    }
  }
  throw SearchExhausted("no determinant-one witness for " + g.to_string() + " after " + std::to_string(tried) +
                        " candidates");
}

std::pair<Vector, Vector> circle_sum_witness(const Rational& r2, const Vector& target) {
  if (r2 <= 0) throw DomainError("squared radius must be positive");
  if (target.size() != 2) throw DomainError("target must be a point of the plane");
  if (!target[0].is_rational() || !target[1].is_rational()) throw DomainError("target must be rational");
  const bool on_x = target[1].is_zero();
  if (!on_x && !target[0].is_zero()) throw DomainError("target must lie on a coordinate axis");
  const Rational s = on_x ? target[0].rational_value() : target[1].rational_value();
  if (s * s > 4 * r2) throw DomainError("target lies farther than twice the radius");
  if (s == 0) {
    ExactScalar r = ExactScalar::sqrt_of(r2);
    return {Vector{r, ExactScalar(0)}, Vector{-r, ExactScalar(0)}};
  }
  Rational h2 = r2 - s * s / 4;
  ExactScalar h = h2 == 0 ? ExactScalar(0) : ExactScalar::sqrt_of(h2);
  ExactScalar half(Rational(s / 2));
  if (on_x) return {Vector{half, h}, Vector{half, -h}};
  return {Vector{h, half}, Vector{-h, half}};
}

std::size_t dim_of_aut(const AutDescriptor& d) {
  using K = AutDescriptor::Kind;
  switch (d.kind) {
    case K::GLR: return d.n * d.n;
    case K::BlockTriangular: return d.q * d.n;
    case K::Conjugated: return dim_of_aut(*d.inner);
    case K::EZLowerBound: throw DomainError("EZ is a lower bound, not an automorphism group");
    default: return 0;  // countable
  }
}

std::size_t dim_of_aut(const AutResult& r) {
  if (!r.is_exact()) throw DomainError("dim_of_aut needs an exact result");
  return dim_of_aut(*r.exact);
}

std::set<std::size_t> dimension_family(std::size_t n) {
  std::set<std::size_t> out;
  for (std::size_t p = 0; p <= n; ++p) {
    std::vector<Group> fs(p, Group::rationals());
    for (std::size_t i = p; i < n; ++i) fs.push_back(Group::full_line());
    out.insert(dim_of_aut(aut_group(Group::product(std::move(fs)))));
  }
  return out;
}

}  // namespace denseaut
