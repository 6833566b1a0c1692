#pragma once

#include <set>
#include <stdexcept>
#include <utility>

#include "denseaut/aut.hpp"

namespace denseaut {

/// The search ran out of candidates or budget without a certified answer.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SLWitness {
  ExactMatrix matrix;
  Certificate certificate;
  std::size_t tried = 0;
};

/// A determinant-one matrix that does not preserve the proper dense G.
/// Tries shears I + lambda*E_ij, then rational rotations, in a fixed order.
SLWitness sl_obstruction_witness(const Group& g, std::size_t budget = 10000);

/// Two points on the circle x^2 + y^2 = r2 summing to an axis point
/// (s, 0) or (0, s) with s^2 <= 4 r2.
std::pair<Vector, Vector> circle_sum_witness(const Rational& r2, const Vector& target);

/// Covering dimension of an exact automorphism group.
std::size_t dim_of_aut(const AutDescriptor& d);
std::size_t dim_of_aut(const AutResult& r);

/// Dimensions of Phi(Q^p x R^(n-p)) for p = 0..n, computed through aut_group.
std::set<std::size_t> dimension_family(std::size_t n);

}  // namespace denseaut
