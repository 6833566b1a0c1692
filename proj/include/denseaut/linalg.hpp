#pragma once

#include <optional>
#include <vector>

#include "denseaut/scalar.hpp"

namespace denseaut {

/// Rank over Q of the coordinate vectors of the given scalars.
std::size_t rational_rank(const std::vector<ExactScalar>& scalars);

/// Solves target = sum c_i * generators[i] for rational c_i.  The generators
/// must be Q-linearly independent, which makes the solution unique.
/// Returns nullopt when target is outside their Q-span.
std::optional<std::vector<Rational>> solve_rational(const std::vector<ExactScalar>& generators,
                                                    const ExactScalar& target);

}  // namespace denseaut
