#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denseaut/scalar.hpp"

namespace denseaut {

/// Row vector in R^n with exact coordinates.
using Vector = std::vector<ExactScalar>;

std::string to_string(const Vector& v);
Vector scale(const ExactScalar& s, const Vector& v);
Vector add(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// Exact n x n matrix acting on row vectors from the right (x -> x * A).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Row-major entries; throws DomainError unless rows are square.
  explicit ExactMatrix(std::vector<std::vector<ExactScalar>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix scalar(std::size_t n, const ExactScalar& s);
  /// I + lambda * E_{row,col}.
  static ExactMatrix shear(std::size_t n, std::size_t row, std::size_t col, const ExactScalar& lambda);

  std::size_t size() const { return rows_.size(); }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<ExactScalar>>& rows() const { return rows_; }

  /// Determinant by cofactor expansion (no division).
  const ExactScalar& det() const;
  bool is_invertible() const { return det().is_invertible(); }
  /// Adjugate / det; throws DomainError when det is zero or not invertible.
  ExactMatrix inverse() const;
  ExactMatrix transpose() const;

  bool is_rational() const;
  bool is_integral() const;

  std::string to_string() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  std::vector<std::vector<ExactScalar>> rows_;
  mutable std::optional<ExactScalar> det_;
};

/// v * A for a row vector v.
Vector vec_mat_mul(const Vector& v, const ExactMatrix& a);

/// Determinant by the Leibniz permutation expansion; independent of det().
ExactScalar leibniz_det(const ExactMatrix& a);

/// Membership flags in the classical matrix groups.
struct MatrixClass {
  bool in_GL = false;
  bool in_GLQ = false;    // rational entries
  bool in_GLZ = false;    // integer entries, invertible over R
  bool in_EZ = false;     // integer entries, det = +-1
  bool in_SL = false;     // det = 1
  bool in_SLpm = false;   // det = +-1
  bool in_SO2 = false;    // 2x2, A^t A = I, det = 1
};

MatrixClass classify(const ExactMatrix& a);

/// [[A, B], [0, C]] with A in GL_Q(p), C invertible, lower-left p-by-q block zero.
bool block_triangular_member(std::size_t p, std::size_t q, const ExactMatrix& m);

/// [[a, b x], [c x, d]] with a, b, c, d rational and nonzero determinant.
bool pattern_quad_member(const ExactScalar& x, const ExactMatrix& m);

}  // namespace denseaut
