#include <doctest.h>

#include "support.hpp"

using namespace denseaut;
using support::Gen;

namespace {

Group G(const char* text) { return parse_group(text); }

void require_clean(const support::Failures& f, const std::string& what) {
  CHECK_MESSAGE(f.empty(), what << ": " << f.size() << " failures, first: " << (f.empty() ? "" : f[0]));
}

Rational norm2(const Vector& v) {
  ExactScalar s = v[0] * v[0] + v[1] * v[1];
  REQUIRE(s.is_rational());
  return s.rational_value();
}

}  // namespace

TEST_CASE("automorphism sets are symmetric") {
  Gen gen(61);
  for (const auto& text : support::corpus()) require_clean(support::check_symmetry(parse_group(text), gen), text);
}

TEST_CASE("automorphism sets are closed") {
  Gen gen(62);
  for (const auto& text : support::corpus()) require_clean(support::check_closure(parse_group(text), gen), text);
}

TEST_CASE("scaling the group leaves its automorphisms alone") {
  Gen gen(63);
  for (const auto& text : support::corpus())
    require_clean(support::check_scaling_invariance(parse_group(text), gen), text);
}

TEST_CASE("conjugation transfer") {
  Gen gen(64);
  for (const auto& text : support::corpus())
    require_clean(support::check_conjugation_transfer(parse_group(text), gen), text);
}

TEST_CASE("obstruction witnesses") {
  struct Case {
    const char* group;
    const char* expected;
  };
  for (auto [group, expected] : {Case{"Q^2", "[1, sqrt(2); 0, 1]"},
                                 Case{"(Z*1 + Q*sqrt(2))^2", "[1, 1/2; 0, 1]"},
                                 Case{"Q x Q*sqrt(2)", "[1, 1; 0, 1]"}}) {
    Group g = G(group);
    SLWitness w = sl_obstruction_witness(g);
    CHECK(w.matrix == parse_matrix(expected));
  }
  for (const char* text : {"Q^2", "Q x R", "(Z*1 + Q*sqrt(2))^2", "Q x Q*sqrt(2)", "Q^2 x R", "Q*sqrt(2) x Q*sqrt(3)",
                           "image(Q^2, [1, sqrt(2); 0, 1])", "Q^3"}) {
    Group g = G(text);
    SLWitness w = sl_obstruction_witness(g);
    CHECK(w.matrix.det() == ExactScalar(1));
    Certificate c = acts_invariantly(g, w.matrix);
    CHECK_FALSE(c.verdict);
    CHECK_FALSE(w.certificate.verdict);
    REQUIRE(w.certificate.image);
    CHECK_FALSE(member(g, *w.certificate.image).member);
  }
  SLWitness qr = sl_obstruction_witness(G("Q x R"));
  CHECK(qr.matrix(1, 0) != ExactScalar(0));
  CHECK(qr.matrix(0, 1) == ExactScalar(0));
  CHECK_THROWS_AS(sl_obstruction_witness(G("R^2")), DomainError);
  CHECK_THROWS_AS(sl_obstruction_witness(G("Q x Z")), DomainError);
  CHECK_THROWS_AS(sl_obstruction_witness(G("Q")), DomainError);
  CHECK_THROWS_AS(sl_obstruction_witness(G("Q^2"), 0), SearchExhausted);
}

TEST_CASE("circle witnesses") {
  auto [a, b] = circle_sum_witness(25, parse_vector("(6, 0)"));
  CHECK(a == parse_vector("(3, 4)"));
  CHECK(b == parse_vector("(3, -4)"));
  auto [c, d] = circle_sum_witness(1, parse_vector("(0, 0)"));
  CHECK(c == parse_vector("(1, 0)"));
  CHECK(d == parse_vector("(-1, 0)"));
  auto [e, f] = circle_sum_witness(1, parse_vector("(1, 0)"));
  CHECK(e == parse_vector("(1/2, sqrt(3)/2)"));
  CHECK(f == parse_vector("(1/2, -sqrt(3)/2)"));
  CHECK_THROWS_AS(circle_sum_witness(1, parse_vector("(3, 0)")), DomainError);
  CHECK_THROWS_AS(circle_sum_witness(1, parse_vector("(1, 1)")), DomainError);
  CHECK_THROWS_AS(circle_sum_witness(0, parse_vector("(0, 0)")), DomainError);

  Gen gen(65);
  for (const Rational& r2 : {Rational(1), Rational(25), Rational(2), Rational(9, 4)}) {
    for (int i = 0; i < 30; ++i) {
      // |s| <= 2r holds whenever s^2 <= 4 r2
      Rational s;
      do s = gen.rational(10); while (s * s > 4 * r2);
      Vector target = gen.coin() ? Vector{ExactScalar(s), ExactScalar(0)} : Vector{ExactScalar(0), ExactScalar(s)};
      auto [c1, c2] = circle_sum_witness(r2, target);
      CHECK(add(c1, c2) == target);
      CHECK(norm2(c1) == r2);
      CHECK(norm2(c2) == r2);
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(dim_of_aut(AutDescriptor::glq(3)) == 0);
  CHECK(dim_of_aut(AutDescriptor::glr(2)) == 4);
  CHECK(dim_of_aut(AutDescriptor::block_triangular(1, 1)) == 2);
  CHECK(dim_of_aut(AutDescriptor::field_units(2)) == 0);
  CHECK(dim_of_aut(AutDescriptor::pattern_quad(ExactScalar::sqrt_of(2))) == 0);
  CHECK(dimension_family(2) == std::set<std::size_t>{0, 2, 4});
  CHECK(dimension_family(3) == std::set<std::size_t>{0, 3, 6, 9});
  CHECK(dimension_family(4) == std::set<std::size_t>{0, 4, 8, 12, 16});
  CHECK_THROWS_AS(dim_of_aut(aut_group(G("Z^2"))), DomainError);
}
