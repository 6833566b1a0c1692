#include "denseaut/linalg.hpp"

#include <map>

namespace denseaut {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

FieldContext common(const std::vector<ExactScalar>& xs) {
  FieldContext ctx = FieldContext::rat();
  for (const auto& x : xs) ctx = FieldContext::join_or_throw(ctx, minimal_context(x));
  return ctx;
}

// Rows indexed by coordinate key, one column per scalar.
RatMatrix coordinate_matrix(const std::vector<ExactScalar>& xs, const FieldContext& ctx) {
  std::map<long, std::size_t> row_of;
  std::vector<std::map<long, Rational>> cols;
  for (const auto& x : xs) {
    cols.push_back(x.embed(ctx).coordinate_map());
    for (const auto& [k, c] : cols.back()) row_of.emplace(k, 0);
  }
  std::size_t r = 0;
  for (auto& [k, idx] : row_of) idx = r++;
  RatMatrix m(row_of.size(), std::vector<Rational>(xs.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j]) m[row_of[k]][j] = c;
  return m;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const std::vector<ExactScalar>& scalars) {
  if (scalars.empty()) return 0;
  RatMatrix m = coordinate_matrix(scalars, common(scalars));
  return rref(m, scalars.size()).size();
}

std::optional<std::vector<Rational>> solve_rational(const std::vector<ExactScalar>& generators,
                                                    const ExactScalar& target) {
  std::vector<ExactScalar> all(generators);
  all.push_back(target);
  RatMatrix m = coordinate_matrix(all, common(all));
  const std::size_t n = generators.size();
  std::vector<std::size_t> pivots = rref(m, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
  if (pivots.size() != n) throw DomainError("solve_rational: generators are Q-linearly dependent");
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[pivots[i]] = m[i][n];
  return c;
}

}  // namespace denseaut
