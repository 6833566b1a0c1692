#include "denseaut/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace denseaut {

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Vector scale(const ExactScalar& s, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(s * x);
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DomainError("vector dimensions differ");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

ExactMatrix::ExactMatrix(std::vector<std::vector<ExactScalar>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("matrix must have at least one row");
  for (const auto& r : rows_)
    if (r.size() != rows_.size()) throw DomainError("matrix must be square");
}

ExactMatrix ExactMatrix::identity(std::size_t n) { return scalar(n, ExactScalar(1)); }

ExactMatrix ExactMatrix::scalar(std::size_t n, const ExactScalar& s) {
  std::vector<std::vector<ExactScalar>> rows(n, std::vector<ExactScalar>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = s;
  return ExactMatrix(std::move(rows));
}

ExactMatrix ExactMatrix::shear(std::size_t n, std::size_t row, std::size_t col, const ExactScalar& lambda) {
  if (row == col || row >= n || col >= n) throw DomainError("shear needs distinct in-range indices");
  auto rows = identity(n).rows_;
  rows[row][col] = lambda;
  return ExactMatrix(std::move(rows));
}

namespace {

using Rows = std::vector<std::vector<ExactScalar>>;

Rows minor_of(const Rows& m, std::size_t skip_row, std::size_t skip_col) {
  Rows out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    std::vector<ExactScalar> r;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != skip_col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

ExactScalar cofactor_det(const Rows& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  ExactScalar acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    ExactScalar term = m[0][j] * cofactor_det(minor_of(m, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

const ExactScalar& ExactMatrix::det() const {
  if (!det_) det_ = cofactor_det(rows_);
  return *det_;
}

ExactMatrix ExactMatrix::inverse() const {
  const ExactScalar& d = det();
  if (d.is_zero()) throw DomainError("singular matrix " + to_string());
  if (!d.is_invertible()) throw DomainError("determinant " + d.to_string() + " is not invertible in its context");
  ExactScalar inv_d = d.inverse();
  const std::size_t n = size();
  Rows out(n, std::vector<ExactScalar>(n));
  if (n == 1) {
    out[0][0] = inv_d;
    return ExactMatrix(std::move(out));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj(A)[i][j] = (-1)^{i+j} M_{j,i}
      ExactScalar c = cofactor_det(minor_of(rows_, j, i));
      if ((i + j) % 2 == 1) c = -c;
      out[i][j] = c * inv_d;
    }
  }
  return ExactMatrix(std::move(out));
}

ExactMatrix ExactMatrix::transpose() const {
  const std::size_t n = size();
  Rows out(n, std::vector<ExactScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j][i] = rows_[i][j];
  return ExactMatrix(std::move(out));
}

bool ExactMatrix::is_rational() const {
  for (const auto& r : rows_)
    for (const auto& x : r)
      if (!x.is_rational()) return false;
  return true;
}

bool ExactMatrix::is_integral() const {
  for (const auto& r : rows_)
    for (const auto& x : r)
      if (!x.is_rational() || !denseaut::is_integer(x.rational_value())) return false;
  return true;
}

std::string ExactMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < size(); ++j) {
      if (j) s += ", ";
      s += rows_[i][j].to_string();
    }
  }
  return s + "]";
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.size() != b.size()) throw DomainError("matrix dimensions differ");
  const std::size_t n = a.size();
  Rows out(n, std::vector<ExactScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ExactScalar acc;
      for (std::size_t k = 0; k < n; ++k)
        if (!a.rows_[i][k].is_zero() && !b.rows_[k][j].is_zero()) acc += a.rows_[i][k] * b.rows_[k][j];
      out[i][j] = acc;
    }
  return ExactMatrix(std::move(out));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) { return a.rows_ == b.rows_; }

Vector vec_mat_mul(const Vector& v, const ExactMatrix& a) {
  if (v.size() != a.size()) throw DomainError("vector/matrix dimensions differ");
  Vector out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    ExactScalar acc;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero() && !a(i, j).is_zero()) acc += v[i] * a(i, j);
    out[j] = acc;
  }
  return out;
}

ExactScalar leibniz_det(const ExactMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactScalar acc;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ExactScalar term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    acc = (inversions % 2 == 0) ? acc + term : acc - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

MatrixClass classify(const ExactMatrix& a) {
  MatrixClass c;
  const ExactScalar& d = a.det();
  c.in_GL = !d.is_zero();
  if (!c.in_GL) return c;
  c.in_GLQ = a.is_rational();
  c.in_GLZ = a.is_integral();
  bool det_one = d == ExactScalar(1);
  bool det_pm_one = det_one || d == ExactScalar(-1);
  c.in_SL = det_one;
  c.in_SLpm = det_pm_one;
  c.in_EZ = c.in_GLZ && det_pm_one;
  if (a.size() == 2) {
    ExactMatrix id = ExactMatrix::identity(2);
    ExactMatrix at = a.transpose();
    c.in_SO2 = det_one && at * a == id && a * at == id;
  }
  return c;
}

bool block_triangular_member(std::size_t p, std::size_t q, const ExactMatrix& m) {
  if (m.size() != p + q) throw DomainError("block_triangular_member: dimension mismatch");
  if (m.det().is_zero()) return false;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (!m(i, j).is_rational()) return false;
  for (std::size_t i = p; i < p + q; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (!m(i, j).is_zero()) return false;
  // det = det(A) det(C), so both blocks are invertible once det != 0.
  return true;
}

bool pattern_quad_member(const ExactScalar& x, const ExactMatrix& m) {
  if (m.size() != 2) throw DomainError("pattern_quad_member needs a 2x2 matrix");
  if (x.is_zero()) throw DomainError("pattern scalar must be nonzero");
  if (m.det().is_zero()) return false;
  if (!m(0, 0).is_rational() || !m(1, 1).is_rational()) return false;
  for (const auto& off : {m(0, 1), m(1, 0)}) {
    auto r = ratio(off, x);
    if (!r || !r->is_rational()) return false;
  }
  return true;
}

}  // namespace denseaut
