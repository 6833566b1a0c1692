#pragma once

#include <optional>
#include <vector>

#include "denseaut/aut.hpp"

namespace denseaut {

struct OracleOptions {
  unsigned height = 3;
  /// Matrix candidates are limited to n = 2 and height <= 3 unless set.
  bool allow_large = false;
  std::size_t max_candidates = 2'000'000;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct Refutation {
  ExactMatrix candidate;
  Certificate certificate;
};

struct OracleReport {
  std::size_t candidates = 0;
  std::vector<ExactMatrix> confirmed;
  std::vector<Refutation> refuted;
  /// Set by cross_check.  For Bounds results it only covers the lower bound.
  std::optional<bool> agreement;
  bool one_sided = false;
  std::vector<ExactMatrix> disagreements;
};

/// Small members of a one-dimensional G: integer combinations of the
/// generators with coefficients (and Laurent exponents) bounded by H.
std::vector<ExactScalar> small_members(const Group& g, unsigned height);

/// Sorted, duplicate-free ratios x/y of small members; always contains +-1.
std::vector<ExactScalar> candidate_scalars(const Group& g, unsigned height);

/// Candidate matrices for a two-dimensional product, entry (i, j) drawn from
/// {0} and y/x_i for a fixed x_i in G_i and small y in G_j.
std::vector<ExactMatrix> candidate_matrices(const Group& g, const OracleOptions& opts);

/// Classifies every candidate by certificate alone.
OracleReport brute_force_aut(const Group& g, const OracleOptions& opts = {});

/// brute_force_aut plus comparison with the aut_group predicate.
OracleReport cross_check(const Group& g, const OracleOptions& opts = {});

/// Cycles of a permutation of the naturals with finite support.
using Cycles = std::vector<std::vector<std::size_t>>;

/// result[n] = seq[perm(n)], trailing zeros dropped.
std::vector<Rational> finite_permutation_action(const Cycles& perm, const std::vector<Rational>& seq);

struct InjectivityReport {
  std::size_t permutations = 0;
  std::size_t distinct_images = 0;
  bool injective = false;
};

/// Applies every permutation of {0..k-1} to the probe (1, 2, ..., k, 0, ...).
InjectivityReport injectivity_demo(std::size_t k);

}  // namespace denseaut
