#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace denseaut {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed literals and for operations outside a value's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q" (optional leading '-'); throws DomainError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact square root of a non-negative integer, if it is a perfect square.
bool is_perfect_square(const Integer& z);

/// Square-free decomposition q = multiplier^2 * core of a positive rational.
struct RadicalForm {
  Integer core;
  Rational multiplier;
};
RadicalForm canonicalize_radical(const Rational& q);

bool is_prime(const Integer& z);

/// Distinct prime divisors of |z| in increasing order (z != 0).
std::vector<Integer> prime_divisors(const Integer& z);

/// True when |q| is a product of integer powers of the given primes.
bool is_supported_on(const Rational& q, const std::vector<Integer>& primes);

/// If |q| = base^k for some integer k, returns k.
bool integer_log(const Rational& q, const Integer& base, long& exponent);

}  // namespace denseaut
