#include "denseaut/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "denseaut/witness.hpp"

namespace denseaut {

using GKind = Group::Kind;

namespace {

// All integer vectors in [-h, h]^k except zero.
std::vector<std::vector<long>> coefficient_grid(std::size_t k, long h) {
  std::vector<std::vector<long>> out;
  std::vector<long> c(k, -h);
  for (;;) {
    if (std::any_of(c.begin(), c.end(), [](long x) { return x != 0; })) out.push_back(c);
    std::size_t i = 0;
    while (i < k && c[i] == h) c[i++] = -h;
    if (i == k) break;
    ++c[i];
  }
  return out;
}

std::vector<ExactScalar> laurent_members(long h) {
  std::vector<ExactScalar> out;
  for (long k = -h; k <= h; ++k)
    for (long c = -h; c <= h; ++c)
      if (c != 0) out.push_back(ExactScalar::t_power(k, Rational(c)));
  for (long k1 = -h; k1 <= h; ++k1)
    for (long k2 = k1 + 1; k2 <= h; ++k2)
      for (long c1 = -h; c1 <= h; ++c1)
        for (long c2 = -h; c2 <= h; ++c2)
          if (c1 != 0 && c2 != 0)
            out.push_back(ExactScalar::t_power(k1, Rational(c1)) + ExactScalar::t_power(k2, Rational(c2)));
  return out;
}

void dedupe(std::vector<ExactScalar>& xs) {
  std::sort(xs.begin(), xs.end(), CoordLess{});
  xs.erase(std::unique(xs.begin(), xs.end(), [](const ExactScalar& a, const ExactScalar& b) { return a == b; }),
           xs.end());
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F f) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, count / 64)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) out[i] = f(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

bool matrix_capable(const Group& g) {
  return g.kind() == GKind::Product || g.kind() == GKind::FullSpace || g.kind() == GKind::Image;
}

}  // namespace

std::vector<ExactScalar> small_members(const Group& g0, unsigned height) {
  if (height == 0) throw DomainError("height must be at least 1");
  const Group g = normalize(g0);
  if (g.dimension() != 1) throw DomainError("small_members needs a one-dimensional group");
  const long h = height;
  std::vector<ExactScalar> out;
  switch (g.kind()) {
    case GKind::Cyclic:
      for (long c = -h; c <= h; ++c)
        if (c != 0) out.push_back(ExactScalar(c) * g.generator());
      break;
    case GKind::MixedModule:
      for (const auto& c : coefficient_grid(g.terms().size(), h)) {
        ExactScalar x;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i] != 0) x += ExactScalar(c[i]) * g.terms()[i].generator;
        out.push_back(x);
      }
      break;
    case GKind::LaurentRing:
      out = laurent_members(h);
      break;
    case GKind::FractionRing:
      for (long k = -h; k <= h; ++k) {
        Rational mk(1);
        for (long i = 0; i < std::abs(k); ++i) mk *= g.modulus();
        if (k < 0) mk = 1 / mk;
        for (long c = -h; c <= h; ++c)
          if (c != 0) out.emplace_back(Rational(c * mk));
      }
      break;
    case GKind::FullLine:
      for (long c = -h; c <= h; ++c)
        if (c != 0) out.emplace_back(c);
      break;
    case GKind::Scaled:
      for (const auto& x : small_members(g.inner(), height)) out.push_back(g.scale_factor() * x);
      break;
    default:
      throw DomainError("no member enumeration for " + g.to_string());
  }
  dedupe(out);
  return out;
}

std::vector<ExactScalar> candidate_scalars(const Group& g, unsigned height) {
  std::vector<ExactScalar> members = small_members(g, height);
  std::vector<ExactScalar> denominators;
  for (const auto& y : members)
    if (y.is_invertible()) denominators.push_back(y.inverse());
  std::vector<ExactScalar> out{ExactScalar(1), ExactScalar(-1)};
  for (const auto& x : members)
    for (const auto& yi : denominators) out.push_back(x * yi);
  dedupe(out);
  return out;
}

std::vector<ExactMatrix> candidate_matrices(const Group& g0, const OracleOptions& opts) {
  const Group g = normalize(g0);
  const std::size_t n = g.dimension();
  if (n != 2 && !opts.allow_large) throw DomainError("matrix candidates are limited to n = 2");
  if (opts.height > 3 && !opts.allow_large) throw DomainError("matrix candidates are limited to height 3");
  if (g.kind() == GKind::Image) {
    ExactMatrix a = g.matrix();
    ExactMatrix ai = a.inverse();
    std::vector<ExactMatrix> out;
    for (const auto& c : candidate_matrices(g.inner(), opts)) out.push_back(ai * c * a);
    return out;
  }
  std::vector<Group> fs;
  if (g.kind() == GKind::Product)
    fs = g.factors();
  else if (g.kind() == GKind::FullSpace)
    fs.assign(n, Group::full_line());
  else
    throw DomainError("no matrix candidates for " + g.to_string());

  std::vector<std::vector<ExactScalar>> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    ExactScalar xi_inv = some_nonzero_member(fs[i]).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      auto& e = entries[i * n + j];
      e.push_back(ExactScalar(0));
      for (const auto& y : small_members(fs[j], opts.height)) e.push_back(y * xi_inv);
    }
  }
  std::size_t total = 1;
  for (const auto& e : entries) {
    total *= e.size();
    if (total > opts.max_candidates) throw SearchExhausted("candidate budget exceeded");
  }
  std::vector<ExactMatrix> out;
  std::vector<std::size_t> idx(n * n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<std::vector<ExactScalar>> rows(n, std::vector<ExactScalar>(n));
    for (std::size_t k = 0; k < n * n; ++k) rows[k / n][k % n] = entries[k][idx[k]];
    ExactMatrix m(std::move(rows));
    if (!m.det().is_zero() && m.is_invertible()) out.push_back(std::move(m));
    for (std::size_t k = n * n; k-- > 0;) {
      if (++idx[k] < entries[k].size()) break;
      idx[k] = 0;
    }
  }
  return out;
}

OracleReport brute_force_aut(const Group& g, const OracleOptions& opts) {
  std::vector<ExactMatrix> candidates;
  if (g.dimension() == 1) {
    for (const auto& s : candidate_scalars(g, opts.height)) candidates.push_back(as_matrix(s));
  } else if (matrix_capable(normalize(g))) {
    candidates = candidate_matrices(g, opts);
  } else {
    throw DomainError("no candidate enumeration for " + g.to_string());
  }
  if (candidates.size() > opts.max_candidates) throw SearchExhausted("candidate budget exceeded");

  auto certs = parallel_map<Certificate>(candidates.size(), opts.threads,
                                         [&](std::size_t i) { return acts_invariantly(g, candidates[i]); });
  OracleReport report;
  report.candidates = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (certs[i].verdict)
      report.confirmed.push_back(candidates[i]);
    else
      report.refuted.push_back({candidates[i], certs[i]});
  }
  return report;
}

OracleReport cross_check(const Group& g, const OracleOptions& opts) {
  OracleReport report = brute_force_aut(g, opts);
  AutResult res = aut_group(g);
  bool agree = true;
  auto check = [&](const ExactMatrix& m, bool certified) {
    if (res.is_exact()) {
      if (res.exact->contains(m) != certified) {
        agree = false;
        report.disagreements.push_back(m);
      }
      return;
    }
    bool in_lower = std::any_of(res.lower.begin(), res.lower.end(), [&](const AutDescriptor& d) { return d.contains(m); });
    if (in_lower && !certified) {
      agree = false;
      report.disagreements.push_back(m);
    }
  };
  for (const auto& m : report.confirmed) check(m, true);
  for (const auto& r : report.refuted) check(r.candidate, false);
  report.one_sided = !res.is_exact();
  report.agreement = agree;
  return report;
}

// ------------------------------------------------------------ permutations

namespace {

std::map<std::size_t, std::size_t> permutation_map(const Cycles& perm) {
  std::map<std::size_t, std::size_t> map;
  for (const auto& cycle : perm) {
    if (cycle.empty()) throw DomainError("malformed cycle: empty");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!map.emplace(cycle[i], cycle[(i + 1) % cycle.size()]).second)
        throw DomainError("malformed cycles: " + std::to_string(cycle[i]) + " appears twice");
    }
  }
  return map;
}

}  // namespace

std::vector<Rational> finite_permutation_action(const Cycles& perm, const std::vector<Rational>& seq) {
  auto map = permutation_map(perm);
  std::size_t len = seq.size();
  if (!map.empty()) len = std::max(len, map.rbegin()->first + 1);
  std::vector<Rational> out(len, Rational(0));
  for (std::size_t n = 0; n < len; ++n) {
    auto it = map.find(n);
    std::size_t src = it == map.end() ? n : it->second;
    if (src < seq.size()) out[n] = seq[src];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

InjectivityReport injectivity_demo(std::size_t k) {
  if (k == 0 || k > 8) throw DomainError("injectivity_demo supports 1 <= k <= 8");
  std::vector<Rational> probe;
  for (std::size_t i = 1; i <= k; ++i) probe.emplace_back(static_cast<long>(i));
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<Rational>> images;
  InjectivityReport r;
  do {
    Cycles cycles;
    std::vector<bool> seen(k, false);
    for (std::size_t s = 0; s < k; ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> cycle;
      for (std::size_t x = s; !seen[x]; x = perm[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      cycles.push_back(std::move(cycle));
    }
    images.insert(finite_permutation_action(cycles, probe));
    ++r.permutations;
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.distinct_images = images.size();
  r.injective = r.distinct_images == r.permutations;
  return r;
}

}  // namespace denseaut
