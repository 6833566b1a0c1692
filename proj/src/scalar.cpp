#include "denseaut/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace denseaut {

// ---------------------------------------------------------------- FieldContext

FieldContext::FieldContext() : data_(rat().data_) {}

FieldContext FieldContext::rat() {
  static const FieldContext ctx = make_algebraic(Kind::Rat, {Integer(1)});
  return ctx;
}

FieldContext FieldContext::formal_t() {
  static const FieldContext ctx = [] {
    auto d = std::make_shared<Data>();
    d->kind = Kind::FormalT;
    d->radicands = {Integer(1)};
    return FieldContext(std::shared_ptr<const Data>(std::move(d)));
  }();
  return ctx;
}

namespace {

bool is_square_free_above_one(const Integer& d) {
  if (d <= 1) return false;
  return canonicalize_radical(Rational(d)).core == d;
}

// For square-free a, b: a*b = g^2 * (a/g)*(b/g) with g = gcd(a, b), and the
// cofactor is square-free.
Integer core_of_product(const Integer& a, const Integer& b) {
  Integer g = gcd(a, b);
  return (a / g) * (b / g);
}

}  // namespace

FieldContext FieldContext::make_algebraic(Kind kind, std::vector<Integer> radicands) {
  auto d = std::make_shared<Data>();
  d->kind = kind;
  d->radicands = std::move(radicands);
  const std::size_t n = d->radicands.size();
  d->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& a = d->radicands[i];
      const Integer& b = d->radicands[j];
      Integer g = gcd(a, b);
      auto it = std::find(d->radicands.begin(), d->radicands.end(), Integer((a / g) * (b / g)));
      // the basis is closed under products by construction
      d->table[i * n + j] = {static_cast<int>(it - d->radicands.begin()), g};
    }
  }
  return FieldContext(std::shared_ptr<const Data>(std::move(d)));
}

FieldContext FieldContext::quad(const Integer& d) {
  if (!is_square_free_above_one(d))
    throw DomainError("Quad radicand must be square-free and > 1, got " + denseaut::to_string(d));
  return make_algebraic(Kind::Quad, {Integer(1), d});
}

FieldContext FieldContext::biquad(const Integer& d, const Integer& e) {
  if (!is_square_free_above_one(d) || !is_square_free_above_one(e) || d == e)
    throw DomainError("BiQuad radicands must be distinct, square-free and > 1");
  std::vector<Integer> r{d, e, core_of_product(d, e)};
  std::sort(r.begin(), r.end());
  return make_algebraic(Kind::BiQuad, {Integer(1), r[0], r[1], r[2]});
}

std::optional<FieldContext> FieldContext::generated_by(const std::vector<Integer>& radicands) {
  // Closure of the radicands under "multiply and take the square-free core".
  std::set<Integer> closure{Integer(1)};
  for (const auto& r : radicands) {
    if (r == 1) continue;
    if (closure.count(r)) continue;
    std::vector<Integer> fresh;
    for (const auto& c : closure) fresh.push_back(core_of_product(c, r));
    closure.insert(fresh.begin(), fresh.end());
    if (closure.size() > 4) return std::nullopt;
  }
  std::vector<Integer> sorted(closure.begin(), closure.end());
  switch (sorted.size()) {
    case 1:
      return rat();
    case 2:
      return quad(sorted[1]);
    case 4:
      return biquad(sorted[1], sorted[2]);
    default:
      return std::nullopt;
  }
}

std::optional<FieldContext> FieldContext::join(const FieldContext& a, const FieldContext& b) {
  if (a == b) return a;
  if (a.kind() == Kind::Rat) return b;
  if (b.kind() == Kind::Rat) return a;
  if (a.kind() == Kind::FormalT || b.kind() == Kind::FormalT) return std::nullopt;
  std::vector<Integer> all(a.radicands());
  all.insert(all.end(), b.radicands().begin(), b.radicands().end());
  return generated_by(all);
}

FieldContext FieldContext::join_or_throw(const FieldContext& a, const FieldContext& b) {
  auto j = join(a, b);
  if (!j) throw ContextError("incompatible contexts " + a.to_string() + " and " + b.to_string());
  return *j;
}

int FieldContext::index_of(const Integer& radicand) const {
  const auto& r = radicands();
  auto it = std::find(r.begin(), r.end(), radicand);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

std::string FieldContext::to_string() const {
  switch (kind()) {
    case Kind::Rat:
      return "Q";
    case Kind::Quad:
      return "Q(sqrt(" + denseaut::to_string(radicands()[1]) + "))";
    case Kind::BiQuad:
      return "Q(sqrt(" + denseaut::to_string(radicands()[1]) + "),sqrt(" +
             denseaut::to_string(radicands()[2]) + "))";
    case Kind::FormalT:
      return "Q[t,1/t]";
  }
  return "?";
}

// ---------------------------------------------------------------- ExactScalar

ExactScalar ExactScalar::sqrt_of(const Rational& radicand, const Rational& coeff) {
  RadicalForm rf = canonicalize_radical(radicand);
  Rational c = coeff * rf.multiplier;
  if (rf.core == 1) return ExactScalar(c);
  return from_coords(FieldContext::quad(rf.core), {Rational(0), c});
}

ExactScalar ExactScalar::t_power(long exponent, const Rational& coeff) {
  std::map<long, Rational> m;
  m.emplace(exponent, coeff);
  return from_laurent(std::move(m));
}

ExactScalar ExactScalar::from_coords(const FieldContext& ctx, std::vector<Rational> coords) {
  if (!ctx.is_algebraic()) throw ContextError("from_coords needs an algebraic context");
  if (coords.size() != ctx.degree()) throw DomainError("coordinate count does not match context degree");
  ExactScalar s;
  s.ctx_ = ctx;
  s.coords_ = std::move(coords);
  return s;
}

ExactScalar ExactScalar::from_laurent(std::map<long, Rational> terms) {
  ExactScalar s;
  s.ctx_ = FieldContext::formal_t();
  s.coords_.clear();
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  s.laurent_ = std::move(terms);
  return s;
}

std::map<long, Rational> ExactScalar::coordinate_map() const {
  if (!ctx_.is_algebraic()) return laurent_;
  std::map<long, Rational> m;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) m.emplace(static_cast<long>(i), coords_[i]);
  }
  return m;
}

ExactScalar ExactScalar::embed(const FieldContext& target) const {
  if (ctx_ == target) return *this;
  if (!target.is_algebraic()) {
    if (!is_rational())
      throw ContextError("cannot embed " + ctx_.to_string() + " into " + target.to_string());
    return t_power(0, rational_value());
  }
  if (!ctx_.is_algebraic()) {
    if (laurent_.empty()) return from_coords(target, std::vector<Rational>(target.degree(), Rational(0)));
    if (laurent_.size() == 1 && laurent_.begin()->first == 0) {
      std::vector<Rational> c(target.degree(), Rational(0));
      c[0] = laurent_.begin()->second;
      return from_coords(target, std::move(c));
    }
    throw ContextError("cannot embed a non-constant Laurent polynomial into " + target.to_string());
  }
  std::vector<Rational> c(target.degree(), Rational(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    int k = target.index_of(ctx_.radicands()[i]);
    if (k < 0) throw ContextError("cannot embed " + ctx_.to_string() + " into " + target.to_string());
    c[static_cast<std::size_t>(k)] = coords_[i];
  }
  return from_coords(target, std::move(c));
}

bool ExactScalar::is_zero() const {
  if (!ctx_.is_algebraic()) return laurent_.empty();
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool ExactScalar::is_rational() const {
  if (!ctx_.is_algebraic())
    return laurent_.empty() || (laurent_.size() == 1 && laurent_.begin()->first == 0);
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

Rational ExactScalar::rational_value() const {
  if (!is_rational()) throw DomainError(to_string() + " is not rational");
  if (!ctx_.is_algebraic()) return laurent_.empty() ? Rational(0) : laurent_.begin()->second;
  return coords_[0];
}

bool ExactScalar::is_one() const { return is_rational() && rational_value() == 1; }

bool ExactScalar::is_monomial() const {
  if (!ctx_.is_algebraic()) return laurent_.size() == 1;
  return !is_zero();
}

bool ExactScalar::is_invertible() const { return is_monomial(); }

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& c : r.coords_) c = -c;
  for (auto& [k, c] : r.laurent_) c = -c;
  return r;
}

FieldContext minimal_context(const ExactScalar& s) {
  if (!s.context().is_algebraic()) return s.is_rational() ? FieldContext::rat() : s.context();
  std::vector<Integer> used;
  for (std::size_t i = 1; i < s.coords().size(); ++i)
    if (s.coords()[i] != 0) used.push_back(s.context().radicands()[i]);
  if (used.empty()) return FieldContext::rat();
  // two radicands of a biquadratic field already generate it
  if (used.size() >= 2 || s.context().degree() == 2) return s.context();
  return FieldContext::quad(used[0]);
}


namespace {

FieldContext common_context(const ExactScalar& a, const ExactScalar& b) {
  if (auto j = FieldContext::join(a.context(), b.context())) return *j;
  return FieldContext::join_or_throw(minimal_context(a), minimal_context(b));
}

template <class Op>
ExactScalar combine(const ExactScalar& a, const ExactScalar& b, Op op) {
  FieldContext j = common_context(a, b);
  ExactScalar x = a.embed(j), y = b.embed(j);
  if (!j.is_algebraic()) {
    std::map<long, Rational> m = x.laurent();
    for (const auto& [k, c] : y.laurent()) m[k] = op(m[k], c);
    return ExactScalar::from_laurent(std::move(m));
  }
  std::vector<Rational> c(j.degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = op(x.coords()[i], y.coords()[i]);
  return ExactScalar::from_coords(j, std::move(c));
}

}  // namespace

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  return combine(a, b, [](const Rational& p, const Rational& q) { return Rational(p + q); });
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
  return combine(a, b, [](const Rational& p, const Rational& q) { return Rational(p - q); });
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  FieldContext j = common_context(a, b);
  ExactScalar x = a.embed(j), y = b.embed(j);
  if (!j.is_algebraic()) {
    std::map<long, Rational> m;
    for (const auto& [ka, ca] : x.laurent())
      for (const auto& [kb, cb] : y.laurent()) m[ka + kb] += ca * cb;
    return ExactScalar::from_laurent(std::move(m));
  }
  const std::size_t n = j.degree();
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords()[i] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (y.coords()[k] == 0) continue;
      const auto& p = j.basis_product(i, k);
      c[static_cast<std::size_t>(p.index)] += x.coords()[i] * y.coords()[k] * p.factor;
    }
  }
  return ExactScalar::from_coords(j, std::move(c));
}

ExactScalar ExactScalar::conjugate(bool flip_first, bool flip_second) const {
  if (!ctx_.is_algebraic() || ctx_.kind() == FieldContext::Kind::Rat) return *this;
  ExactScalar r = *this;
  if (ctx_.kind() == FieldContext::Kind::Quad) {
    if (flip_first) r.coords_[1] = -r.coords_[1];
    return r;
  }
  // Basis {1, sqrt d, sqrt e, sqrt f}; sqrt f = sqrt(d e)/gcd so it flips with either.
  if (flip_first) r.coords_[1] = -r.coords_[1];
  if (flip_second) r.coords_[2] = -r.coords_[2];
  if (flip_first != flip_second) r.coords_[3] = -r.coords_[3];
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!ctx_.is_algebraic()) {
    if (laurent_.size() != 1)
      throw DomainError("only monomials are invertible in Q[t,1/t]; got " + to_string());
    const auto& [k, c] = *laurent_.begin();
    return t_power(-k, Rational(1 / c));
  }
  switch (ctx_.kind()) {
    case FieldContext::Kind::Rat:
      return ExactScalar(Rational(1 / coords_[0]));
    case FieldContext::Kind::Quad: {
      ExactScalar conj = conjugate(true, false);
      Rational norm = (*this * conj).rational_value();
      return conj * ExactScalar(Rational(1 / norm));
    }
    default: {
      ExactScalar others = conjugate(true, false) * conjugate(false, true) * conjugate(true, true);
      Rational norm = (*this * others).rational_value();
      return others * ExactScalar(Rational(1 / norm));
    }
  }
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

std::optional<ExactScalar> ratio(const ExactScalar& a, const ExactScalar& b) {
  if (!b.is_invertible()) return std::nullopt;
  try {
    return a * b.inverse();
  } catch (const ContextError&) {
    return std::nullopt;
  }
}

std::optional<Integer> pure_radicand(const ExactScalar& a) {
  if (!a.context().is_algebraic()) return std::nullopt;
  std::optional<Integer> found;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (a.coords()[i] == 0) continue;
    if (i == 0 || found) return std::nullopt;
    found = a.context().radicands()[i];
  }
  return found;
}

Integer ExactScalar::height() const {
  Integer h = 0;
  auto bump = [&h](const Rational& q) {
    Integer n = abs(q.get_num());
    if (n > h) h = n;
    if (q.get_den() > h) h = q.get_den();
  };
  if (!ctx_.is_algebraic()) {
    for (const auto& [k, c] : laurent_) {
      bump(c);
      Integer e = std::labs(k);
      if (e > h) h = e;
    }
  } else {
    for (const auto& c : coords_)
      if (c != 0) bump(c);
  }
  return h;
}

std::optional<double> ExactScalar::approx() const {
  if (!ctx_.is_algebraic()) {
    if (is_rational()) return rational_value().get_d();
    return std::nullopt;
  }
  double v = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    v += coords_[i].get_d() * std::sqrt(ctx_.radicands()[i].get_d());
  return v;
}

namespace {

// Appends "c*unit" with sign handling; unit may be empty for a bare constant.
void append_term(std::ostringstream& out, bool first, const Rational& c, const std::string& unit) {
  Rational mag = abs(c);
  bool neg = sgn(c) < 0;
  if (first)
    out << (neg ? "-" : "");
  else
    out << (neg ? " - " : " + ");
  if (unit.empty()) {
    out << to_string(mag);
  } else if (mag == 1) {
    out << unit;
  } else {
    out << to_string(mag) << "*" << unit;
  }
}

}  // namespace

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (!ctx_.is_algebraic()) {
    for (const auto& [k, c] : laurent_) {
      std::string unit;
      if (k == 1)
        unit = "t";
      else if (k != 0)
        unit = "t^" + std::to_string(k);
      append_term(out, first, c, unit);
      first = false;
    }
    return out.str();
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    std::string unit = i == 0 ? "" : "sqrt(" + denseaut::to_string(ctx_.radicands()[i]) + ")";
    append_term(out, first, coords_[i], unit);
    first = false;
  }
  return out.str();
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  auto j = FieldContext::join(a.context(), b.context());
  if (!j) j = FieldContext::join(minimal_context(a), minimal_context(b));
  if (!j) return false;
  ExactScalar x = a.embed(*j), y = b.embed(*j);
  if (!j->is_algebraic()) return x.laurent() == y.laurent();
  return x.coords() == y.coords();
}

bool coord_less(const ExactScalar& a, const ExactScalar& b) {
  // Keys are radicand / exponent based, so the order does not depend on the
  // declaring context and agrees with operator==.
  auto keyed = [](const ExactScalar& s) {
    std::vector<std::pair<Integer, Rational>> out;
    if (s.is_rational()) {
      out.emplace_back(Integer(0), s.rational_value());
      return std::make_pair(0, out);
    }
    if (!s.context().is_algebraic()) {
      for (const auto& [k, c] : s.laurent()) out.emplace_back(Integer(k), c);
      return std::make_pair(2, out);
    }
    for (std::size_t i = 0; i < s.coords().size(); ++i)
      if (s.coords()[i] != 0) out.emplace_back(s.context().radicands()[i], s.coords()[i]);
    return std::make_pair(1, out);
  };
  auto ka = keyed(a), kb = keyed(b);
  if (ka.first != kb.first) return ka.first < kb.first;
  return std::lexicographical_compare(
      ka.second.begin(), ka.second.end(), kb.second.begin(), kb.second.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

}  // namespace denseaut
