#include "denseaut/rational.hpp"

#include <cctype>

namespace denseaut {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw DomainError("malformed rational literal '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw DomainError("malformed rational literal '" + std::string(whole) + "'");
  }
  std::string digits(text.substr(start));
  Integer z(digits, 10);
  return text[0] == '-' ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_perfect_square(const Integer& z) {
  if (z < 0) return false;
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

namespace {

// Splits n > 0 as square^2 * core with core square-free, by trial division.
void split_square(const Integer& n, Integer& root, Integer& core) {
  root = 1;
  core = 1;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; ++p) {
    unsigned count = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) root *= p;
    if (count % 2 == 1) core *= p;
  }
  core *= rest;
}

}  // namespace

RadicalForm canonicalize_radical(const Rational& q) {
  if (sgn(q) <= 0) throw DomainError("radicand must be positive, got " + to_string(q));
  // q = a/b = (a*b) / b^2
  Integer ab = q.get_num() * q.get_den();
  Integer root, core;
  split_square(ab, root, core);
  Rational multiplier(root, q.get_den());
  multiplier.canonicalize();
  return {core, multiplier};
}

bool is_prime(const Integer& z) {
  if (z < 2) return false;
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::vector<Integer> prime_divisors(const Integer& z) {
  if (z == 0) throw DomainError("prime_divisors of zero");
  std::vector<Integer> out;
  Integer rest = abs(z);
  for (Integer p = 2; p * p <= rest; ++p) {
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

namespace {

Integer strip(Integer n, const std::vector<Integer>& primes) {
  n = abs(n);
  for (const auto& p : primes) {
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
  }
  return n;
}

}  // namespace

bool is_supported_on(const Rational& q, const std::vector<Integer>& primes) {
  if (q == 0) return false;
  return strip(q.get_num(), primes) == 1 && strip(q.get_den(), primes) == 1;
}

bool integer_log(const Rational& q, const Integer& base, long& exponent) {
  if (q == 0 || base < 2) return false;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  if (num != 1 && den != 1) return false;
  Integer n = (den == 1) ? num : den;
  long k = 0;
  while (n != 1) {
    if (!mpz_divisible_p(n.get_mpz_t(), base.get_mpz_t())) return false;
    n /= base;
    ++k;
  }
  exponent = (den == 1) ? k : -k;
  return true;
}

}  // namespace denseaut
