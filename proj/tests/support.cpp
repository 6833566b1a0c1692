#include "support.hpp"

#include <algorithm>

namespace support {

using GKind = Group::Kind;

Rational Gen::rational(long h, bool nonzero) {
  for (;;) {
    Rational q(integer(-h, h), integer(1, h));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

ExactScalar Gen::scalar(const FieldContext& ctx, long h, bool nonzero) {
  for (;;) {
    ExactScalar s;
    if (ctx.is_algebraic()) {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < ctx.degree(); ++i) c.push_back(coin() ? rational(h) : Rational(0));
      s = ExactScalar::from_coords(ctx, std::move(c));
    } else {
      int terms = static_cast<int>(integer(1, 3));
      for (int i = 0; i < terms; ++i) s += ExactScalar::t_power(integer(-3, 3), rational(h));
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

ExactMatrix Gen::rational_matrix(std::size_t n, long h) {
  for (;;) {
    std::vector<std::vector<ExactScalar>> rows(n, std::vector<ExactScalar>(n));
    for (auto& r : rows)
      for (auto& e : r) e = rational(h);
    ExactMatrix m(std::move(rows));
    if (!m.det().is_zero()) return m;
  }
}

ExactMatrix Gen::ez_matrix(std::size_t n, int moves) {
  if (n == 1) return as_matrix(ExactScalar(coin() ? 1 : -1));
  ExactMatrix m = ExactMatrix::identity(n);
  for (int k = 0; k < moves; ++k) {
    auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    m = m * ExactMatrix::shear(n, i, j, ExactScalar(coin() ? 1 : -1));
  }
  if (coin()) {
    std::vector<std::vector<ExactScalar>> flip(n, std::vector<ExactScalar>(n));
    for (std::size_t i = 0; i < n; ++i) flip[i][i] = i == 0 ? -1 : 1;
    m = m * ExactMatrix(std::move(flip));
  }
  return m;
}

FieldContext context_of(const Group& g) {
  Group ng = normalize(g);
  if (ng.kind() == GKind::FullLine) return FieldContext::biquad(2, 3);
  FieldContext ctx = FieldContext::rat();
  for (const auto& x : small_members(ng, 1)) ctx = FieldContext::join_or_throw(ctx, x.context());
  return ctx;
}

Vector Gen::vector_for(const Group& g, long h) {
  const Group ng = normalize(g);
  const std::size_t n = ng.dimension();
  if (ng.kind() == GKind::Image) {
    Vector v = vector_for(ng.inner(), h);
    return coin(0.8) ? vec_mat_mul(v, ng.matrix()) : v;
  }
  if (ng.kind() == GKind::FullSpace) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(FieldContext::quad(2), h));
    return v;
  }
  if (ng.kind() == GKind::Product) {
    Vector v;
    for (const auto& f : ng.factors()) v.push_back(vector_for(f, h)[0]);
    return v;
  }
  const auto members = small_members(ng, 2);
  ExactScalar x = ExactScalar(integer(-h, h)) * pick(members);
  if (coin()) x += pick(members);
  if (coin()) return {x};
  // perturbations: a rational multiple, or a random field element added
  if (coin()) return {ExactScalar(rational(h, true)) * x};
  return {x + scalar(context_of(ng), h)};
}

const std::vector<std::string>& corpus_1d() {
  static const std::vector<std::string> c{
      "Z",
      "cyclic(3)",
      "cyclic(sqrt(2))",
      "Q",
      "R",
      "sqrt(2)*Q",
      "Z*1 + Q*sqrt(2)",
      "Z*1 + Q*sqrt(3)",
      "Z*1 + Q*sqrt(5)",
      "Q*1 + Z*sqrt(2)",
      "Z*sqrt(2) + Q*sqrt(3)",
      "Z*sqrt(2) + Q*sqrt(5)",
      "Z*1 + Z*sqrt(2)",
      "Q + Q*sqrt(2)",
      "Q*sqrt(2) + Q*sqrt(3)",
      "sqrt(2)*(Q + Q*sqrt(3))",
      "hull(Z*1 + Q*sqrt(2))",
      "Q + Q*t",
      "ring(Z[t,1/t])",
      "ring(Q[t,1/t])",
      "hull(ring(Z[t,1/t]))",
      "Zinv(2)",
      "Zinv(3)",
      "Zinv(6)",
  };
  return c;
}

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> c = [] {
    std::vector<std::string> all = corpus_1d();
    for (const char* s : {"Q^2", "Z^2", "R^2", "Q x R", "Q x Z", "Q x Q*sqrt(2)", "Q*sqrt(2) x Q*sqrt(3)",
                          "(Z*1 + Q*sqrt(2))^2", "image(Q^2, [1, sqrt(2); 0, 1])", "Q^3", "Q^2 x R", "Q x R^2"})
      all.emplace_back(s);
    return all;
  }();
  return c;
}

namespace {

bool algebraic(const Group& g) {
  Group ng = normalize(g);
  if (ng.dimension() != 1) return true;
  return context_of(ng).is_algebraic();
}

bool aut_has(const Group& g, const ExactMatrix& m) {
  return g.dimension() == 1 ? aut_member(g, m(0, 0)) : aut_member(g, m);
}

std::string describe(const Group& g, const ExactMatrix& m) {
  return g.to_string() + " / " + (m.size() == 1 ? m(0, 0).to_string() : m.to_string());
}

}  // namespace

std::vector<ExactScalar> sample_scalars(const Group& g) { return candidate_scalars(g, 2); }

std::vector<ExactMatrix> sample_matrices(const Group& g, Gen& gen, std::size_t count) {
  const std::size_t n = g.dimension();
  std::vector<ExactMatrix> out{ExactMatrix::identity(n), ExactMatrix::scalar(n, -1), ExactMatrix::scalar(n, 2),
                               ExactMatrix::shear(n, 0, 1, ExactScalar(Rational(1, 2)))};
  if (algebraic(g)) out.push_back(ExactMatrix::shear(n, 0, 1, ExactScalar::sqrt_of(2)));
  if (n == 2) {
    OracleOptions opts;
    opts.height = 1;
    auto cands = candidate_matrices(g, opts);
    std::shuffle(cands.begin(), cands.end(), gen.engine());
    for (std::size_t i = 0; i < cands.size() && out.size() < count; ++i) out.push_back(cands[i]);
  }
  while (out.size() < count) out.push_back(gen.coin() ? gen.rational_matrix(n, 3) : gen.ez_matrix(n));
  return out;
}

Failures check_symmetry(const Group& g, Gen& gen) {
  Failures f;
  if (g.dimension() == 1) {
    for (const auto& s : sample_scalars(g))
      if (aut_member(g, s) && !aut_member(g, -s)) f.push_back("symmetry: " + g.to_string() + " / " + s.to_string());
    return f;
  }
  for (const auto& m : sample_matrices(g, gen)) {
    ExactMatrix neg = ExactMatrix::scalar(m.size(), -1) * m;
    if (aut_member(g, m) && !aut_member(g, neg)) f.push_back("symmetry: " + describe(g, m));
  }
  return f;
}

Failures check_closure(const Group& g, Gen& gen) {
  Failures f;
  std::vector<ExactMatrix> in;
  if (g.dimension() == 1) {
    for (const auto& s : sample_scalars(g))
      if (aut_member(g, s)) in.push_back(as_matrix(s));
  } else {
    for (const auto& m : sample_matrices(g, gen))
      if (aut_member(g, m)) in.push_back(m);
  }
  std::shuffle(in.begin(), in.end(), gen.engine());
  if (in.size() > 10) in.resize(10);
  for (const auto& a : in)
    for (const auto& b : in) {
      ExactMatrix c = a * b.inverse();
      if (!aut_has(g, c)) f.push_back("closure: " + describe(g, c));
    }
  return f;
}

Failures check_scaling_invariance(const Group& g, Gen& gen) {
  Failures f;
  std::vector<ExactScalar> xs{ExactScalar(Rational(3, 2)), ExactScalar(Rational(-2, 5))};
  if (g.dimension() == 1) {
    ExactScalar m = some_nonzero_member(g);
    if (m.is_invertible()) xs.push_back(m);
    xs.push_back(algebraic(g) ? ExactScalar::sqrt_of(7) : ExactScalar::t_power(2, 3));
  } else {
    xs.push_back(ExactScalar::sqrt_of(7));
  }
  for (const auto& x : xs) {
    Group xg = Group::scaled(x, g);
    if (g.dimension() == 1) {
      for (const auto& s : sample_scalars(g))
        if (aut_member(g, s) != aut_member(xg, s)) f.push_back("scaling by " + x.to_string() + ": " + g.to_string() + " / " + s.to_string());
    } else {
      for (const auto& m : sample_matrices(g, gen, 20))
        if (aut_member(g, m) != aut_member(xg, m)) f.push_back("scaling by " + x.to_string() + ": " + describe(g, m));
    }
  }
  return f;
}

Failures check_conjugation_transfer(const Group& g, Gen& gen) {
  Failures f;
  const std::size_t n = g.dimension();
  std::vector<ExactMatrix> as{gen.rational_matrix(n, 3), gen.ez_matrix(n)};
  if (n >= 2 && algebraic(g)) as.push_back(ExactMatrix::shear(n, 0, 1, ExactScalar::sqrt_of(2)));
  if (n == 1) as.push_back(as_matrix(gen.coin() ? ExactScalar(Rational(5, 3)) : some_nonzero_member(g).is_invertible() ? some_nonzero_member(g) : ExactScalar(7)));
  std::vector<ExactMatrix> bs;
  if (n == 1) {
    for (const auto& s : sample_scalars(g)) bs.push_back(as_matrix(s));
    std::shuffle(bs.begin(), bs.end(), gen.engine());
    if (bs.size() > 30) bs.resize(30);
  } else {
    bs = sample_matrices(g, gen, 20);
  }
  for (const auto& a : as)
    for (const auto& b : bs) {
      try {
        bool lhs = conjugation_transfer(g, a, b);
        // same identity through the descriptors
        if (aut_has(Group::image(g, a), b) != aut_has(g, a * b * a.inverse()) ||
            lhs != aut_has(g, a * b * a.inverse()))
          f.push_back("transfer: " + describe(g, b) + " under " + describe(g, a));
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
        f.push_back(std::string("transfer: ") + e.what());
      }
    }
  return f;
}

Failures check_oracle_monotone(const Group& g) {
  Failures f;
  Group ng = normalize(g);
  if (ng.dimension() > 2) return f;
  OracleOptions lo, hi;
  lo.height = 1;
  hi.height = 2;
  if (ng.dimension() == 1) hi.height = 3;
  auto small = brute_force_aut(g, lo).confirmed;
  auto big = brute_force_aut(g, hi).confirmed;
  for (const auto& m : small)
    if (std::find(big.begin(), big.end(), m) == big.end()) f.push_back("monotone: " + describe(g, m));
  return f;
}

Failures check_normalize_semantics(const Group& g, Gen& gen, int samples) {
  Failures f;
  Group ng = normalize(g);
  if (normalize(ng) != ng) f.push_back("normalize not idempotent: " + g.to_string());
  for (int i = 0; i < samples; ++i) {
    Vector v = gen.vector_for(g);
    if (member(g, v).member != member(ng, v).member)
      f.push_back("normalize: " + g.to_string() + " at " + to_string(v));
  }
  return f;
}

}  // namespace support
