#pragma once

// Test-only reference implementations. Nothing here calls into the
// product backends or the finishers it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>

#include "sz/matrix.hpp"
#include "sz/shoshan_zwick.hpp"

namespace sz::testing {

/// Textbook min over k, written against the definition.
inline WeightMatrix brute_minplus(const WeightMatrix& a, const WeightMatrix& b) {
  const Index n = a.size();
  Dense<ExtInt> c(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      ExtInt best = kInf;
      for (Index k = 0; k < n; ++k) {
        if (a(i, k).is_inf() || b(k, j).is_inf()) continue;
        best = std::min(best, ExtInt(a(i, k).value() + b(k, j).value()));
      }
      c(i, j) = best;
    }
  }
  return WeightMatrix(std::move(c));
}

/// Square matrix with entries uniform in [lo, hi], each +inf with
/// probability inf_density.
inline WeightMatrix random_matrix(std::mt19937_64& rng, Index n, std::int64_t lo,
                                  std::int64_t hi, double inf_density) {
  std::uniform_int_distribution<std::int64_t> value(lo, hi);
  std::bernoulli_distribution is_inf(inf_density);
  Dense<ExtInt> d(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) d(i, j) = is_inf(rng) ? kInf : ExtInt(value(rng));
  }
  return WeightMatrix(std::move(d));
}

/// The published assembly transcribed cell by cell:
///   B_0 = (0 <= P_0 < M), B_k = (C_k >= 0), R = P_0 mod M (truncated),
///   delta = M * sum_{k=0..l} 2^k B_k + R.
inline WeightMatrix original_assembly_by_hand(const LevelMatrices& lv, const SzParams& params) {
  const std::int64_t m = params.cost_bound;
  const WeightMatrix& p0 = lv.residue[0];
  const Index n = p0.size();
  Dense<ExtInt> out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const ExtInt p = p0(i, j);
      if (p.is_inf()) {
        out(i, j) = kInf;
        continue;
      }
      std::int64_t sum = (p.value() >= 0 && p.value() < m) ? 1 : 0;
      for (int k = 1; k <= params.levels; ++k) {
        const ExtInt c = lv.comparison[k](i, j);
        if (c.is_inf() || c.value() >= 0) sum += std::int64_t{1} << k;
      }
      out(i, j) = m * sum + p.value() % m;
    }
  }
  return WeightMatrix(std::move(out));
}

inline const WeightMatrix& g_prime_matrix() {
  static const WeightMatrix d{{0, 2, 4}, {2, 0, kInf}, {4, kInf, 0}};
  return d;
}

}  // namespace sz::testing
