// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace denseaut;
using support::Gen;

namespace {

// Collects the reasons a criterion failed.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void absorb(const support::Failures& f) { problems.insert(problems.end(), f.begin(), f.end()); }
};

Group G(const char* text) { return parse_group(text); }
ExactScalar S(const char* text) { return parse_scalar(text); }
ExactMatrix M(const char* text) { return parse_matrix(text); }

bool is_sign(const ExactMatrix& m) { return m == as_matrix(1) || m == as_matrix(-1); }

bool refutes(const Group& g, const Certificate& c) {
  return !c.verdict && c.failing_generator && c.image && member(g, *c.failing_generator).member &&
         !member(g, *c.image).member;
}

void c1(Check& c) {
  Group q = G("Q");
  c.expect(aut_group(q).exact == AutDescriptor::rat_star(), "aut(Q) is not RatStar");
  OracleOptions o;
  o.height = 4;
  OracleReport r = brute_force_aut(q, o);
  std::set<Rational> farey;
  for (long p = 1; p <= 4; ++p)
    for (long d = 1; d <= 4; ++d) {
      Rational x(p, d);
      x.canonicalize();
      farey.insert(x);
      farey.insert(-x);
    }
  c.expect(r.candidates == farey.size(), "candidate count " + std::to_string(r.candidates) + " != " +
                                             std::to_string(farey.size()));
  c.expect(r.confirmed.size() == farey.size(), "not every candidate confirmed");
  c.expect(r.refuted.empty(), "some candidate refuted");
}

void c2(Check& c) {
  for (const char* text : {"Z*1 + Q*sqrt(2)", "Z*1 + Q*sqrt(3)", "Z*1 + Q*sqrt(5)", "Q*1 + Z*sqrt(2)",
                           "Q*1 + Z*sqrt(3)", "Q*1 + Z*sqrt(5)", "Z*sqrt(2) + Q*sqrt(3)", "Z*sqrt(2) + Q*sqrt(5)"}) {
    Group g = G(text);
    c.expect(aut_group(g).exact == AutDescriptor::plus_minus_one(), std::string(text) + ": not PM1");
    OracleReport r = brute_force_aut(g);
    c.expect(r.confirmed.size() == 2 && is_sign(r.confirmed[0]) && is_sign(r.confirmed[1]),
             std::string(text) + ": oracle confirmed " + std::to_string(r.confirmed.size()));
  }
}

void c3(Check& c) {
  Group g = G("Q + Q*sqrt(2)");
  c.expect(aut_group(g).exact == AutDescriptor::field_units(2), "aut is not FieldUnits(2)");
  c.expect(aut_member(g, S("1 + sqrt(2)")), "1 + sqrt(2) rejected");
  c.expect(cross_check(g).agreement == true, "cross-check disagrees at H=3");
}

void c4(Check& c) {
  Group g = G("Q + Q*t");
  c.expect(aut_group(g).exact == AutDescriptor::rat_star(), "aut is not RatStar");
  OracleReport r = brute_force_aut(g);
  c.expect(!r.confirmed.empty(), "nothing confirmed");
  for (const auto& m : r.confirmed) c.expect(m(0, 0).is_rational(), "irrational confirmed: " + m(0, 0).to_string());
  bool saw_t = false;
  for (const auto& f : r.refuted) saw_t = saw_t || !f.candidate(0, 0).is_rational();
  c.expect(saw_t, "no transcendental candidate was tried");
}

void c5(Check& c) {
  Group zl = G("ring(Z[t,1/t])"), ql = G("ring(Q[t,1/t])");
  for (long k = -5; k <= 5; ++k) {
    for (long a : {1L, -1L}) c.expect(is_unit(zl, ExactScalar::t_power(k, a)), "Z: +-t^k rejected");
    for (long a : {2L, -3L}) c.expect(!is_unit(zl, ExactScalar::t_power(k, a)), "Z: 2t^k accepted");
    for (const Rational& q : {Rational(1), Rational(-2), Rational(3, 7)})
      c.expect(is_unit(ql, ExactScalar::t_power(k, q)), "Q: q t^k rejected");
    if (k != 0) c.expect(!is_unit(ql, ExactScalar::t_power(k) + ExactScalar(1)), "Q: t^k + 1 accepted");
  }
  c.expect(!is_unit(zl, S("1 + t")), "1 + t accepted");
  c.expect(!is_unit(zl, ExactScalar(2)), "2 accepted");
  c.expect(aut_group(zl).exact == AutDescriptor::pm_powers(S("t")), "aut(Z[t,1/t]) is not PMPowers(t)");
  c.expect(aut_group(Group::hull(zl)).exact == AutDescriptor::rat_times_pm_powers(S("t")),
           "aut(hull) is not RatTimesPMPowers(t)");
}

void c6(Check& c) {
  for (long m : {2L, 3L, 5L, 7L, 11L}) {
    Realization r = realize_Ax(m);
    c.expect(r.group && aut_group(*r.group).exact == AutDescriptor::pm_powers(m), std::to_string(m) + " not realized");
  }
  for (long m : {4L, 6L, 8L, 9L, 10L, 12L}) {
    Realization r = realize_Ax(m);
    bool refuted = !r.group && r.refuter && m % r.refuter->get_si() == 0 && r.refuter_certificate &&
                   r.refuter_certificate->verdict &&
                   acts_invariantly(Group::fraction_ring(m), ExactScalar(*r.refuter)).verdict &&
                   !AutDescriptor::pm_powers(m).contains(ExactScalar(*r.refuter));
    c.expect(refuted, std::to_string(m) + " lacks a certified refuter");
  }
}

void c7(Check& c) {
  Group g = G("Q^2");
  OracleOptions o;
  o.height = 2;
  OracleReport r = brute_force_aut(g, o);
  for (const auto& m : r.confirmed) c.expect(classify(m).in_GLQ, "non-rational confirmed");
  c.expect(r.refuted.empty(), std::to_string(r.refuted.size()) + " GL_Q(2) candidates refuted");
  c.expect(r.candidates > 0 && r.confirmed.size() == r.candidates, "candidates not all confirmed");
  c.expect(refutes(g, acts_invariantly(g, M("[1, sqrt(2); 0, 1]"))), "irrational shear not refuted with witness");
}

void c8(Check& c, Gen& gen) {
  Group q2 = G("Q^2");
  c.expect(is_divisible(G("Q")), "Q not divisible");
  for (int i = 0; i < 20; ++i) c.expect(acts_invariantly(q2, gen.rational_matrix(2, 5)).verdict, "GL_Q(2) sample fails on Q^2");
  Group h = G("Z*1 + Q*sqrt(2)");
  c.expect(!is_divisible(h), "Z + Q sqrt(2) divisible");
  Group h2 = Group::power(h, 2);
  c.expect(refutes(h2, acts_invariantly(h2, ExactMatrix::scalar(2, 2))), "2I not refuted on (Z + Q sqrt(2))^2");
  Group qq = G("Q x Q*sqrt(2)");
  Certificate cert = acts_invariantly(qq, M("[1, 1; 0, 1]"));
  c.expect(refutes(qq, cert) && *cert.failing_generator == parse_vector("(1, 0)") &&
               *cert.image == parse_vector("(1, 1)"),
           "shear on Q x Q sqrt(2) not refuted at (1,0) -> (1,1)");
}

void c9(Check& c) {
  struct Case {
    const char* group;
    AutDescriptor expected;
  };
  for (const auto& [text, expected] : {Case{"Q^2", AutDescriptor::glq(2)},
                                       Case{"Q x Q*sqrt(2)", AutDescriptor::pattern_quad(S("sqrt(2)"))},
                                       Case{"Q*sqrt(2) x Q*sqrt(3)", AutDescriptor::pattern_quad(S("sqrt(6)"))}}) {
    Group g = G(text);
    c.expect(aut_group(g).exact == expected, std::string(text) + ": wrong descriptor");
    OracleOptions o;
    o.height = 2;
    c.expect(cross_check(g, o).agreement == true, std::string(text) + ": cross-check disagrees");
  }
}

void c10(Check& c) {
  Group g = G("(Z*1 + Q*sqrt(2))^2");
  std::size_t count = 0;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long d = -1; d <= 1; ++d)
        for (long e = -1; e <= 1; ++e) {
          long det = a * e - b * d;
          if (det != 1 && det != -1) continue;
          ++count;
          ExactMatrix m({{ExactScalar(a), ExactScalar(b)}, {ExactScalar(d), ExactScalar(e)}});
          c.expect(acts_invariantly(g, m).verdict, "EZ(2) element refuted: " + m.to_string());
        }
  c.expect(count == 40, "found " + std::to_string(count) + " EZ(2) matrices");
  c.expect(refutes(g, acts_invariantly(g, M("[2, 0; 0, 1]"))), "[2, 0; 0, 1] not refuted");
}

void c11(Check& c, Gen& gen) {
  for (const char* text : {"Q x R", "Q^2 x R"}) {
    Group g = G(text);
    AutResult r = aut_group(g);
    c.expect(r.is_exact() && r.exact->kind == AutDescriptor::Kind::BlockTriangular, std::string(text) + ": not block");
    if (!r.is_exact()) continue;
    const std::size_t n = g.dimension(), p = r.exact->p;
    std::size_t members = 0;
    for (int i = 0; i < 50; ++i) {
      // each entry rational or a surd; the lower-left block is zero half the time
      bool zero_block = gen.coin();
      ExactMatrix m;
      do {
        std::vector<std::vector<ExactScalar>> rows(n, std::vector<ExactScalar>(n));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (zero_block && a >= p && b < p) continue;
            bool upper_left = a < p && b < p;
            bool surd = upper_left ? gen.coin(0.15) : gen.coin(0.5);
            rows[a][b] = surd ? gen.scalar(FieldContext::quad(2), 4) : ExactScalar(gen.rational(4));
          }
        m = ExactMatrix(std::move(rows));
      } while (m.det().is_zero());
      bool pred = r.exact->contains(m);
      members += pred;
      c.expect(pred == acts_invariantly(g, m).verdict, std::string(text) + ": predicate and certificate differ at " + m.to_string());
    }
    c.expect(members > 0 && members < 50, std::string(text) + ": sample does not exercise both verdicts");
  }
}

void c12(Check& c) {
  for (const char* text : {"Q^2", "Q x R", "(Z*1 + Q*sqrt(2))^2", "Q x Q*sqrt(2)"}) {
    Group g = G(text);
    try {
      SLWitness w = sl_obstruction_witness(g);
      c.expect(w.matrix.det() == ExactScalar(1), std::string(text) + ": witness not in SL(2)");
      c.expect(refutes(g, w.certificate), std::string(text) + ": certificate does not refute");
      c.expect(refutes(g, acts_invariantly(g, w.matrix)), std::string(text) + ": recheck does not refute");
    } catch (const SearchExhausted& e) {
      c.expect(false, std::string(text) + ": " + e.what());
    }
  }
}

void c13(Check& c) {
  for (std::size_t n : {2u, 3u}) {
    std::set<std::size_t> expect;
    for (std::size_t q = 0; q <= n; ++q) expect.insert(q * n);
    c.expect(dimension_family(n) == expect, "dimension family wrong for n = " + std::to_string(n));
  }
  std::set<std::size_t> d2;
  for (const char* text : {"Q^2", "Q x R", "R^2", "Q x Q*sqrt(2)", "image(Q^2, [1, sqrt(2); 0, 1])"}) {
    AutResult r = aut_group(G(text));
    if (r.is_exact()) d2.insert(dim_of_aut(r));
  }
  for (std::size_t d : {0u, 2u, 4u}) c.expect(d2.count(d) == 1, "D_2 misses " + std::to_string(d));
}

void c14(Check& c, Gen& gen) {
  for (const Rational& r2 : {Rational(1), Rational(25)}) {
    for (int i = 0; i < 20; ++i) {
      Rational s;
      do s = gen.rational(12); while (s * s > 4 * r2);
      Vector target = gen.coin() ? Vector{ExactScalar(s), ExactScalar(0)} : Vector{ExactScalar(0), ExactScalar(s)};
      auto [a, b] = circle_sum_witness(r2, target);
      auto on_circle = [&](const Vector& v) {
        ExactScalar n = v[0] * v[0] + v[1] * v[1];
        return n.is_rational() && n.rational_value() == r2;
      };
      c.expect(add(a, b) == target && on_circle(a) && on_circle(b), "bad witness for " + to_string(target));
    }
  }
}

void c15(Check& c, Gen& gen) {
  InjectivityReport r = injectivity_demo(4);
  c.expect(r.permutations == 24 && r.distinct_images == 24 && r.injective, "S4 action not injective");
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> x, y;
    for (long k = gen.integer(0, 8); k > 0; --k) x.push_back(gen.rational(9));
    for (long k = gen.integer(0, 8); k > 0; --k) y.push_back(gen.rational(9));
    // a random cycle on {0..9}
    std::vector<std::size_t> pts(10);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), gen.engine());
    pts.resize(static_cast<std::size_t>(gen.integer(1, 6)));
    Cycles perm{pts}, inv{std::vector<std::size_t>(pts.rbegin(), pts.rend())};
    std::vector<Rational> sum(std::max(x.size(), y.size()), Rational(0));
    for (std::size_t k = 0; k < x.size(); ++k) sum[k] += x[k];
    for (std::size_t k = 0; k < y.size(); ++k) sum[k] += y[k];
    auto px = finite_permutation_action(perm, x), py = finite_permutation_action(perm, y);
    std::vector<Rational> psum(std::max(px.size(), py.size()), Rational(0));
    for (std::size_t k = 0; k < px.size(); ++k) psum[k] += px[k];
    for (std::size_t k = 0; k < py.size(); ++k) psum[k] += py[k];
    while (!psum.empty() && psum.back() == 0) psum.pop_back();
    c.expect(finite_permutation_action(perm, sum) == psum, "action is not additive");
    auto trimmed = x;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    c.expect(finite_permutation_action(inv, px) == trimmed, "inverse cycle does not undo the action");
  }
}

void c16(Check& c, Gen& gen) {
  for (const auto& text : support::corpus()) {
    Group g = parse_group(text);
    c.absorb(support::check_symmetry(g, gen));
    c.absorb(support::check_closure(g, gen));
    c.absorb(support::check_scaling_invariance(g, gen));
    c.absorb(support::check_conjugation_transfer(g, gen));
    c.absorb(support::check_oracle_monotone(g));
    c.absorb(support::check_normalize_semantics(g, gen));
  }
}

}  // namespace

int main() {
  Gen gen(2024);
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"rationals: RatStar, all height-4 candidates confirmed", c1},
      {"rigid groups confirm only the signs", c2},
      {"quadratic field units", c3},
      {"formal transcendental: rational scalars only", c4},
      {"Laurent units", c5},
      {"prime realizability", c6},
      {"GL_Q(2) on Q^2, irrational shear refuted", c7},
      {"divisibility bridge", [&](Check& c) { c8(c, gen); }},
      {"rectangular examples", c9},
      {"EZ(2) lower bound: all 40 sign-entry matrices", c10},
      {"block form on sampled matrices", [&](Check& c) { c11(c, gen); }},
      {"SL obstruction witnesses", c12},
      {"dimension table", c13},
      {"circle witnesses", [&](Check& c) { c14(c, gen); }},
      {"permutation demo", [&](Check& c) { c15(c, gen); }},
      {"property suites on the corpus", [&](Check& c) { c16(c, gen); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.problems.empty() ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first;
    line.precision(2);
    line << std::fixed << "  (" << secs << " s)";
    std::cout << line.str() << '\n';
    for (std::size_t k = 0; k < c.problems.size() && k < 5; ++k) std::cout << "        " << c.problems[k] << '\n';
    failed += !c.problems.empty();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? 1 : 0;
}
