#pragma once

// Shared fixtures for the unit and acceptance suites: seeded generators,
// the descriptor corpus, and property checks that report failures as text.

#include <random>
#include <string>
#include <vector>

#include "denseaut/oracle.hpp"
#include "denseaut/parser.hpp"
#include "denseaut/witness.hpp"

namespace support {

using namespace denseaut;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(integer(0, static_cast<long>(xs.size()) - 1))];
  }

  /// p/q with |p|, q <= h.
  Rational rational(long h, bool nonzero = false);
  /// Random element of ctx with coordinates of height <= h; Laurent
  /// exponents stay within [-3, 3].
  ExactScalar scalar(const FieldContext& ctx, long h, bool nonzero = false);
  /// Random element of GL_Q(n) with small entries.
  ExactMatrix rational_matrix(std::size_t n, long h);
  /// Random determinant +-1 integer matrix, a product of elementary moves.
  ExactMatrix ez_matrix(std::size_t n, int moves = 6);

  /// A vector of the ambient space of g: half the time a member (combination
  /// of small members), otherwise a perturbation that usually is not.
  Vector vector_for(const Group& g, long h = 8);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Field that holds every small member of the one-dimensional g.
FieldContext context_of(const Group& g);

/// Descriptor strings exercised by the property suites.
const std::vector<std::string>& corpus();
const std::vector<std::string>& corpus_1d();

/// Each check returns the failures it found, one line per failure.
using Failures = std::vector<std::string>;

Failures check_symmetry(const Group& g, Gen& gen);
Failures check_closure(const Group& g, Gen& gen);
Failures check_scaling_invariance(const Group& g, Gen& gen);
Failures check_conjugation_transfer(const Group& g, Gen& gen);
Failures check_oracle_monotone(const Group& g);
Failures check_normalize_semantics(const Group& g, Gen& gen, int samples = 100);

/// Scalar automorphism candidates of a one-dimensional g: all oracle
/// candidates at height 2.
std::vector<ExactScalar> sample_scalars(const Group& g);
/// Matrix candidates of an n-dimensional g: oracle candidates for n = 2
/// products, scalar matrices and shears otherwise.
std::vector<ExactMatrix> sample_matrices(const Group& g, Gen& gen, std::size_t count = 40);

}  // namespace support
