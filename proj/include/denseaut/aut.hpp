#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "denseaut/group.hpp"
#include "denseaut/matrix.hpp"

namespace denseaut {

/// Raised when a descriptor has no finite generating system to certify against.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A subgroup of GL(n) with a decidable membership predicate.
struct AutDescriptor {
  enum class Kind {
    PlusMinusOne,      // {I, -I}
    RatStar,           // Q^x
    FieldUnits,        // (Q + Q sqrt d)^x
    PMPowers,          // {+-b^k}
    RatTimesPMPowers,  // Q^x * {+-b^k}
    GLQ,
    GLR,
    BlockTriangular,   // [[A, B], [0, C]], A rational p x p
    PatternQuad,       // [[a, b x], [c x, d]], a..d rational
    EZLowerBound,      // integer matrices of determinant +-1
    Conjugated         // {B : A B A^-1 in inner}
  };

  Kind kind = Kind::PlusMinusOne;
  std::size_t n = 1;
  Integer d;            // FieldUnits
  ExactScalar base;     // PMPowers, RatTimesPMPowers
  std::size_t p = 0, q = 0;
  ExactScalar pattern;  // PatternQuad
  std::shared_ptr<const AutDescriptor> inner;
  std::optional<ExactMatrix> conjugator;

  static AutDescriptor plus_minus_one(std::size_t n = 1);
  static AutDescriptor rat_star();
  static AutDescriptor field_units(const Integer& d);
  static AutDescriptor pm_powers(const ExactScalar& base);
  static AutDescriptor rat_times_pm_powers(const ExactScalar& base);
  static AutDescriptor glq(std::size_t n);
  static AutDescriptor glr(std::size_t n);
  static AutDescriptor block_triangular(std::size_t p, std::size_t q);
  static AutDescriptor pattern_quad(const ExactScalar& x);
  static AutDescriptor ez_lower_bound(std::size_t n);
  static AutDescriptor conjugated(const AutDescriptor& inner, const ExactMatrix& a);

  /// Short label: "PM1", "RatStar", "FieldUnits(2)", "PMPowers(t)", "GLQ(2)", "EZ(2)", ...
  std::string label() const;
  /// Membership predicate; 1x1 matrices stand for scalars.
  bool contains(const ExactMatrix& m) const;
  bool contains(const ExactScalar& s) const;
  friend bool operator==(const AutDescriptor& a, const AutDescriptor& b);
};

const char* to_string(AutDescriptor::Kind kind);

/// Exact answer, or lower/upper bounds when the closed form is unknown.
struct AutResult {
  std::optional<AutDescriptor> exact;
  std::vector<AutDescriptor> lower;
  std::vector<AutDescriptor> upper;

  static AutResult of(AutDescriptor d) { return {std::move(d), {}, {}}; }
  static AutResult bounds(std::vector<AutDescriptor> lower, std::vector<AutDescriptor> upper = {}) {
    return {std::nullopt, std::move(lower), std::move(upper)};
  }
  bool is_exact() const { return exact.has_value(); }
};

/// Verdict of G * A = G.  On failure, failing_generator * A (or * A^-1)
/// leaves G; for Q- and R-slots, some multiple does.
struct Certificate {
  enum class Direction { Forward, Inverse };
  bool verdict = true;
  std::optional<Vector> failing_generator;
  std::optional<Vector> image;
  Direction direction = Direction::Forward;
  std::string reason;
};

Certificate acts_invariantly(const Group& g, const ExactMatrix& a);
Certificate acts_invariantly(const Group& g, const ExactScalar& s);

AutResult aut_group(const Group& g);

/// Decides s in Phi(G).  Exact results are cross-checked against the
/// certificate; a disagreement throws std::logic_error.
bool aut_member(const Group& g, const ExactMatrix& a);
bool aut_member(const Group& g, const ExactScalar& s);

/// Unit test for Z[t,1/t], Q[t,1/t], Z[1/m], Z, and fields Q + Q x.
/// Throws DomainError when r is zero or not in the ring.
bool is_unit(const Group& ring, const ExactScalar& r);

struct Realization {
  std::optional<Group> group;      // Z[1/m] for prime m
  std::optional<Integer> refuter;  // divisor in Phi(Z[1/m]) but not a power of m
  std::optional<Certificate> refuter_certificate;
};

/// Is {+-m^k} the automorphism group of some dense subgroup, via Z[1/m]?
Realization realize_Ax(const Integer& m);

/// acts_invariantly(G * A, B), asserted equal to acts_invariantly(G, A B A^-1).
bool conjugation_transfer(const Group& g, const ExactMatrix& a, const ExactMatrix& b);

enum class Cardinality { Two, Infinite };

struct CardinalityVerdict {
  Cardinality cls;
  std::optional<ExactMatrix> witness;  // element of infinite order
};

CardinalityVerdict cardinality_class(const AutResult& res);

/// s * I_n, or the 1x1 matrix [s].
ExactMatrix as_matrix(const ExactScalar& s, std::size_t n = 1);

}  // namespace denseaut
