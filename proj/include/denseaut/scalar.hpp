#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "denseaut/rational.hpp"

namespace denseaut {

/// Raised when two values cannot be embedded in a common field context.
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computable real field (or ring) in which scalars live.
///
/// Rat is Q.  Quad(d) is Q(sqrt d) with basis {1, sqrt d}.  BiQuad(d, e) is
/// Q(sqrt d, sqrt e) with basis {1, sqrt d, sqrt e, sqrt f}, f = core(d*e);
/// the pair (d, e) is always the two smallest radicands of the field, so
/// each biquadratic field has exactly one representation.  FormalT is the
/// Laurent polynomial ring Q[t, 1/t] for a formal transcendental t.
class FieldContext {
 public:
  enum class Kind { Rat, Quad, BiQuad, FormalT };

  FieldContext();  // Rat

  static FieldContext rat();
  static FieldContext quad(const Integer& d);
  static FieldContext biquad(const Integer& d, const Integer& e);
  static FieldContext formal_t();

  /// Smallest algebraic context whose basis contains every radicand, if it
  /// has degree at most 4.
  static std::optional<FieldContext> generated_by(const std::vector<Integer>& radicands);

  /// Smallest context both embed into; nullopt when none is supported.
  static std::optional<FieldContext> join(const FieldContext& a, const FieldContext& b);

  /// Like join but throws ContextError.
  static FieldContext join_or_throw(const FieldContext& a, const FieldContext& b);

  Kind kind() const { return data_->kind; }
  bool is_algebraic() const { return data_->kind != Kind::FormalT; }

  /// Square-free radicands of the basis (algebraic kinds); first entry is 1.
  const std::vector<Integer>& radicands() const { return data_->radicands; }
  std::size_t degree() const { return data_->radicands.size(); }

  /// Basis index of sqrt(r), or -1.
  int index_of(const Integer& radicand) const;

  /// sqrt(r_i) * sqrt(r_j) = factor * sqrt(r_k).
  struct Product {
    int index;
    Integer factor;
  };
  const Product& basis_product(std::size_t i, std::size_t j) const {
    return data_->table[i * degree() + j];
  }

  std::string to_string() const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.data_->kind == b.data_->kind && a.data_->radicands == b.data_->radicands;
  }

 private:
  struct Data {
    Kind kind = Kind::Rat;
    std::vector<Integer> radicands{Integer(1)};
    std::vector<Product> table;
  };
  explicit FieldContext(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static FieldContext make_algebraic(Kind kind, std::vector<Integer> radicands);

  std::shared_ptr<const Data> data_;
};

/// An exact element of a FieldContext.
///
/// Algebraic scalars store one rational coordinate per basis vector.
/// FormalT scalars store a sparse Laurent polynomial exponent -> coefficient
/// with no zero coefficients.  Values are immutable.
class ExactScalar {
 public:
  ExactScalar() = default;  // 0 in Q
  ExactScalar(long v) : coords_{Rational(v)} {}  // NOLINT: integers promote implicitly
  ExactScalar(const Rational& q) : coords_{q} {}  // NOLINT
  ExactScalar(const Integer& z) : coords_{Rational(z)} {}  // NOLINT

  /// coeff * sqrt(radicand) for a positive rational radicand.
  static ExactScalar sqrt_of(const Rational& radicand, const Rational& coeff = 1);
  /// coeff * t^exponent.
  static ExactScalar t_power(long exponent, const Rational& coeff = 1);
  static ExactScalar from_coords(const FieldContext& ctx, std::vector<Rational> coords);
  static ExactScalar from_laurent(std::map<long, Rational> terms);

  const FieldContext& context() const { return ctx_; }
  /// Algebraic coordinates, aligned with context().radicands().
  const std::vector<Rational>& coords() const { return coords_; }
  /// Laurent terms (FormalT only).
  const std::map<long, Rational>& laurent() const { return laurent_; }

  /// Coordinates keyed by basis index (algebraic) or exponent (FormalT);
  /// zero coordinates omitted.
  std::map<long, Rational> coordinate_map() const;

  ExactScalar embed(const FieldContext& target) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only valid when is_rational().
  Rational rational_value() const;
  /// c * t^k with c != 0 (FormalT), or any nonzero algebraic scalar.
  bool is_invertible() const;
  bool is_monomial() const;

  ExactScalar operator-() const;
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }

  /// Multiplicative inverse; throws DomainError for zero or non-monomial Laurent input.
  ExactScalar inverse() const;

  /// Image under the Galois automorphism flipping the signs of sqrt(d)
  /// (flip_first) and/or sqrt(e) (flip_second).  Identity on FormalT.
  ExactScalar conjugate(bool flip_first, bool flip_second) const;

  /// Max of |numerator| and denominator over coordinates, and of |exponent|
  /// for Laurent terms.
  Integer height() const;

  /// Double-precision value for display; FormalT scalars have none.
  std::optional<double> approx() const;

  std::string to_string() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Total order on canonical coordinates (not the real order).
  friend bool coord_less(const ExactScalar& a, const ExactScalar& b);

 private:
  FieldContext ctx_;
  std::vector<Rational> coords_{Rational(0)};
  std::map<long, Rational> laurent_;
};

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);

/// a * b^-1 when b is invertible in the join context.
std::optional<ExactScalar> ratio(const ExactScalar& a, const ExactScalar& b);

inline bool is_rational(const ExactScalar& a) { return a.is_rational(); }

/// Smallest context holding the scalar's nonzero coordinates.
FieldContext minimal_context(const ExactScalar& s);

/// If a = c * sqrt(k) for a rational c != 0 and square-free k > 1, returns k.
std::optional<Integer> pure_radicand(const ExactScalar& a);

struct CoordLess {
  bool operator()(const ExactScalar& a, const ExactScalar& b) const { return coord_less(a, b); }
};

}  // namespace denseaut
