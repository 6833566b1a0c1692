#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denseaut/matrix.hpp"
#include "denseaut/scalar.hpp"

namespace denseaut {

enum class CoeffDomain { Int, Rat };

struct Term {
  CoeffDomain domain;
  ExactScalar generator;
};

/// Closed-form description of a subgroup of R^n.
///
/// Descriptors are immutable trees shared by pointer.  One-dimensional
/// leaves are Cyclic, MixedModule (a direct sum of Z*g and Q*g slots with
/// Q-linearly independent generators), LaurentRing (Z[t,1/t] or Q[t,1/t]),
/// FractionRing (Z[1/m]) and FullLine.  DivisibleHull, Scaled, Product,
/// Image and FullSpace build on them.
class Group {
 public:
  enum class Kind {
    Cyclic,
    MixedModule,
    LaurentRing,
    FractionRing,
    DivisibleHull,
    Scaled,
    FullLine,
    Product,
    Image,
    FullSpace
  };

  static Group cyclic(const ExactScalar& generator);
  /// Throws DomainError on an empty list, zero generators, generators with no
  /// common context, or Q-linearly dependent generators.
  static Group mixed(std::vector<Term> terms);
  static Group laurent_ring(CoeffDomain coeffs);
  static Group fraction_ring(const Integer& m);
  /// Throws DomainError when the hull has no supported closed form.
  static Group hull(const Group& inner);
  static Group scaled(const ExactScalar& r, const Group& inner);
  static Group full_line();
  /// Factors must be one-dimensional.
  static Group product(std::vector<Group> factors);
  /// inner * A; A must be invertible and match the dimension.
  static Group image(const Group& inner, const ExactMatrix& a);
  static Group full_space(std::size_t n);

  static Group integers() { return cyclic(ExactScalar(1)); }
  static Group rationals() { return mixed({{CoeffDomain::Rat, ExactScalar(1)}}); }
  static Group power(const Group& factor, std::size_t n);

  Kind kind() const;
  std::size_t dimension() const;

  const ExactScalar& generator() const;        // Cyclic
  const std::vector<Term>& terms() const;      // MixedModule
  CoeffDomain coeffs() const;                  // LaurentRing
  const Integer& modulus() const;              // FractionRing
  const Group& inner() const;                  // DivisibleHull, Scaled, Image
  const ExactScalar& scale_factor() const;     // Scaled
  const std::vector<Group>& factors() const;   // Product
  const ExactMatrix& matrix() const;           // Image

  /// Text in the descriptor grammar; parse(to_string()) reproduces the tree.
  std::string to_string() const;

  /// Structural equality.
  friend bool operator==(const Group& a, const Group& b);
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

 private:
  struct Node;
  explicit Group(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const { return *node_; }
  std::shared_ptr<const Node> node_;
};

struct MembershipVerdict {
  bool member = false;
  /// Coefficients c_i with v = sum c_i * g_i over generating_system(G).
  std::optional<std::vector<ExactScalar>> witness;
};

/// How a generator spans its part of the group: Z*g, Q*g or R*g.
enum class SpanDomain { Int, Rat, Real };

struct Generator {
  SpanDomain domain;
  Vector vector;
};

/// Finite generating system, or nullopt for the rings Z[t,1/t], Q[t,1/t], Z[1/m]
/// (and anything built on them), which are not finitely generated.
std::optional<std::vector<Generator>> generating_system(const Group& g);

MembershipVerdict member(const Group& g, const Vector& v);
MembershipVerdict member(const Group& g, const ExactScalar& v);

/// True iff q * v lies in G for every rational q.
bool rat_line_member(const Group& g, const Vector& v);
/// A rational q with q * v outside G, when rat_line_member is false.
std::optional<Rational> rat_line_witness(const Group& g, const Vector& v);

/// True iff r * v lies in G for every real r.
bool real_line_member(const Group& g, const Vector& v);
/// A scalar r with r * v outside G, searched among small surds and t.
std::optional<ExactScalar> real_line_witness(const Group& g, const Vector& v);

bool is_divisible(const Group& g);
bool is_cyclic(const Group& g);
bool is_dense(const Group& g);

/// For non-divisible G, an element v of G and an integer m with v/m outside G.
std::optional<std::pair<Vector, long>> divisibility_counterexample(const Group& g);

/// Z-span of arbitrary (possibly dependent) generators, when it is cyclic:
/// all pairwise ratios rational.  Returns Cyclic(gcd generator).
std::optional<Group> reduce_cyclic(std::span<const ExactScalar> int_generators);

/// Closed form of the divisible hull; throws DomainError for Z[1/m].
Group divisible_hull_form(const Group& g);

Group normalize(const Group& g);

/// n members of a dense n-dimensional G with nonzero determinant.
std::vector<Vector> basis_from_group(const Group& g);

/// Semi-decision of inner subset-of outer through inner's generating system.
/// nullopt when inner has no finite generating system.
std::optional<bool> subgroup_of(const Group& inner, const Group& outer);

/// A nonzero element of a one-dimensional group.
ExactScalar some_nonzero_member(const Group& g);

const char* to_string(Group::Kind kind);

}  // namespace denseaut
