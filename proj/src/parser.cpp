#include "denseaut/parser.hpp"

#include <cctype>
#include <optional>

namespace denseaut {

ParseError::ParseError(const std::string& message, std::size_t position)
    : DomainError(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  // ---------------------------------------------------------------- scalars

  ExactScalar scalar_expr() {
    ExactScalar acc = scalar_term();
    for (;;) {
      if (accept('+'))
        acc = acc + scalar_term();
      else if (peek_minus_term())
        acc = acc - scalar_term();
      else
        return acc;
    }
  }

  // Products and quotients.  Stops (without consuming) before a '*' that is
  // not followed by a scalar, so "2*Q" leaves "*Q" for the group parser.
  ExactScalar scalar_term() {
    ExactScalar acc = scalar_unary();
    for (;;) {
      std::size_t save = pos_;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '*' && s_[pos_] != '/')) {
        pos_ = save;
        return acc;
      }
      char op = s_[pos_++];
      std::optional<ExactScalar> rhs;
      try {
        rhs = scalar_unary();
      } catch (const ParseError&) {
        if (op == '/') throw;
        pos_ = save;
        return acc;
      }
      if (op == '*') {
        acc = acc * *rhs;
      } else {
        if (rhs->is_zero()) fail("division by zero");
        if (!rhs->is_invertible()) fail("divisor " + rhs->to_string() + " is not invertible");
        acc = acc / *rhs;
      }
    }
  }

  ExactScalar scalar_unary() {
    if (accept('-')) return -scalar_unary();
    if (accept('+')) return scalar_unary();
    ExactScalar base = scalar_atom();
    std::size_t save = pos_;
    if (accept('^')) {
      bool negative = accept('-');
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = save;  // "Q^3" style group power, not ours
        return base;
      }
      Integer k = integer_literal();
      if (k > 64) fail("exponent too large");
      ExactScalar out(1);
      for (long i = 0; i < k.get_si(); ++i) out *= base;
      if (negative) {
        if (!out.is_invertible()) fail("negative power of a non-invertible scalar");
        out = out.inverse();
      }
      return out;
    }
    return base;
  }

  ExactScalar scalar_atom() {
    skip();
    if (pos_ >= s_.size()) fail("expected a scalar");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ExactScalar(integer_literal());
    if (keyword("sqrt")) {
      expect('(');
      std::size_t at = pos_;
      ExactScalar radicand = scalar_expr();
      expect(')');
      if (!radicand.is_rational() || radicand.rational_value() <= 0)
        throw ParseError("sqrt needs a positive rational radicand", at);
      return ExactScalar::sqrt_of(radicand.rational_value());
    }
    if (keyword("t")) return ExactScalar::t_power(1);
    if (c == '(') {
      ++pos_;
      ExactScalar inner = scalar_expr();
      expect(')');
      return inner;
    }
    fail("expected a scalar");
  }

  ExactMatrix matrix() {
    expect('[');
    std::vector<std::vector<ExactScalar>> rows(1);
    for (;;) {
      rows.back().push_back(scalar_expr());
      if (accept(',')) continue;
      if (accept(';')) {
        rows.emplace_back();
        continue;
      }
      expect(']');
      break;
    }
    std::size_t at = pos_;
    try {
      return ExactMatrix(std::move(rows));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at);
    }
  }

  std::optional<Vector> tuple() {
    std::size_t save = pos_;
    try {
      expect('(');
      Vector v{scalar_expr()};
      while (accept(',')) v.push_back(scalar_expr());
      expect(')');
      skip();
      if (pos_ != s_.size()) {
        pos_ = save;
        return std::nullopt;
      }
      return v;
    } catch (const ParseError&) {
      pos_ = save;
      return std::nullopt;
    }
  }

  // ---------------------------------------------------------------- groups

  Group group() {
    std::vector<Group> factors{sum()};
    while (keyword("x")) factors.push_back(sum());
    if (factors.size() == 1) return factors[0];
    std::vector<Group> flat;
    for (auto& f : factors) {
      if (f.dimension() == 1) {
        flat.push_back(f);
      } else if (f.kind() == Group::Kind::Product) {
        flat.insert(flat.end(), f.factors().begin(), f.factors().end());
      } else if (f.kind() == Group::Kind::FullSpace) {
        for (std::size_t i = 0; i < f.dimension(); ++i) flat.push_back(Group::full_line());
      } else {
        fail("product factors must be one-dimensional");
      }
    }
    return Group::product(std::move(flat));
  }

  Group sum() {
    std::size_t start = pos_;
    std::vector<Group> parts{summand()};
    while (accept('+')) parts.push_back(summand());
    if (parts.size() == 1) return parts[0];
    std::vector<Term> terms;
    for (const auto& p : parts) append_terms(p, terms, start);
    try {
      return Group::mixed(std::move(terms));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), start);
    }
  }

  Group summand() {
    skip();
    std::size_t save = pos_;
    std::optional<ExactScalar> factor;
    try {
      ExactScalar r = scalar_term();
      if (accept('*')) factor = r;
    } catch (const ParseError&) {
    }
    if (!factor) pos_ = save;
    Group g = power(primary());
    if (!factor) return g;
    if (factor->is_zero()) fail("scale factor must be nonzero");
    try {
      return Group::scaled(*factor, g);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), save);
    }
  }

  Group power(Group g) {
    std::size_t save = pos_;
    if (!accept('^')) return g;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      pos_ = save;
      fail("expected a dimension after '^'");
    }
    Integer n = integer_literal();
    if (n < 1 || n > 16) fail("dimension out of range");
    if (g.dimension() != 1) fail("only one-dimensional groups can be raised to a power");
    return Group::power(g, n.get_ui());
  }

  Group primary() {
    skip();
    std::size_t at = pos_;
    try {
      if (keyword("R")) return Group::full_line();
      if (keyword("Z")) return module_slot(CoeffDomain::Int);
      if (keyword("Q")) return module_slot(CoeffDomain::Rat);
      if (keyword("cyclic")) {
        expect('(');
        ExactScalar g = scalar_expr();
        expect(')');
        return Group::cyclic(g);
      }
      if (keyword("ring")) {
        expect('(');
        CoeffDomain d = keyword("Z") ? CoeffDomain::Int : keyword("Q") ? CoeffDomain::Rat : fail_domain();
        expect('[');
        if (!keyword("t")) fail("expected 't'");
        expect(',');
        expect('1');
        expect('/');
        if (!keyword("t")) fail("expected 't'");
        expect(']');
        expect(')');
        return Group::laurent_ring(d);
      }
      if (keyword("Zinv")) {
        expect('(');
        skip();
        Integer m = integer_literal();
        expect(')');
        return Group::fraction_ring(m);
      }
      if (keyword("hull")) {
        expect('(');
        Group inner = group();
        expect(')');
        return Group::hull(inner);
      }
      if (keyword("image")) {
        expect('(');
        Group inner = group();
        expect(',');
        ExactMatrix a = matrix();
        expect(')');
        return Group::image(inner, a);
      }
      if (accept('(')) {
        Group inner = group();
        expect(')');
        return inner;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at);
    }
    fail("expected a group");
  }

 private:
  CoeffDomain fail_domain() { fail("expected 'Z' or 'Q'"); }

  Group module_slot(CoeffDomain d) {
    std::size_t save = pos_;
    if (accept('*')) {
      try {
        ExactScalar g = scalar_term();
        if (g.is_zero()) fail("module generators must be nonzero");
        return Group::mixed({{d, g}});
      } catch (const ParseError&) {
        pos_ = save;
        throw;
      }
    }
    return d == CoeffDomain::Int ? Group::integers() : Group::rationals();
  }

  void append_terms(const Group& g, std::vector<Term>& out, std::size_t at) {
    switch (g.kind()) {
      case Group::Kind::Cyclic:
        out.push_back({CoeffDomain::Int, g.generator()});
        return;
      case Group::Kind::MixedModule:
        out.insert(out.end(), g.terms().begin(), g.terms().end());
        return;
      case Group::Kind::Scaled: {
        std::vector<Term> inner;
        append_terms(g.inner(), inner, at);
        for (auto& t : inner) out.push_back({t.domain, g.scale_factor() * t.generator});
        return;
      }
      default:
        throw ParseError("only module terms (Z*g, Q*g) can be added", at);
    }
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // A '-' that starts another summand of a scalar sum.
  bool peek_minus_term() {
    std::size_t save = pos_;
    if (accept('-')) return true;
    pos_ = save;
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool keyword(std::string_view word) {
    skip();
    if (s_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  Integer integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactScalar parse_scalar(std::string_view text) {
  Parser p(text);
  ExactScalar s = p.scalar_expr();
  p.finish();
  return s;
}

ExactMatrix parse_matrix(std::string_view text) {
  Parser p(text);
  ExactMatrix m = p.matrix();
  p.finish();
  return m;
}

Vector parse_vector(std::string_view text) {
  {
    Parser p(text);
    if (auto v = p.tuple()) return *v;
  }
  return Vector{parse_scalar(text)};
}

Group parse_group(std::string_view text) {
  Parser p(text);
  Group g = p.group();
  p.finish();
  return g;
}

}  // namespace denseaut
