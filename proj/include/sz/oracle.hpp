#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sz/graph.hpp"
#include "sz/matrix.hpp"
#include "sz/shoshan_zwick.hpp"

// Ground truth for the algebraic pipeline: two independent APSP solvers and
// the closed-form predictions for the intermediate matrices.

namespace sz {

/// True shortest-path costs; +inf between components.
using DistanceMatrix = WeightMatrix;

DistanceMatrix floyd_warshall(const Graph& g);

/// One binary-heap Dijkstra per source.
DistanceMatrix dijkstra_all(const Graph& g);

/// Centred residue of every distance modulo 2M:
///   r = delta mod 2M;  r if r <= M, else r - 2M.
/// +inf entries stay +inf (not applicable).
WeightMatrix predicted_p0(const DistanceMatrix& delta, const SzParams& params);

/// 1 iff delta mod 2^(k+m+1) >= 2^(k+m); 0 for +inf entries.
BitMatrix predicted_level_bit(const DistanceMatrix& delta, const SzParams& params, int level);

struct Mismatch {
  Index i = 0;
  Index j = 0;
  ExtInt expected;
  ExtInt got;
};

struct PropertyCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;

  bool passed() const { return failed == 0; }
};

struct VerifyReport {
  std::vector<Mismatch> mismatches;
  std::vector<PropertyCheck> properties;

  bool ok() const;
  std::size_t off_diagonal_mismatches() const;
  /// Human-readable summary followed by `mismatch i j expected got` lines
  /// (1-based ids).
  std::string render() const;
};

/// Compares `delta_alg` with Floyd-Warshall (cross-checked against
/// Dijkstra). When traces are supplied, also checks per pair:
///   - residue-mod:  (2M * (-M < P0 < 0) + P0) == delta mod 2M
///   - p0-predicted: P0 == predicted_p0
///   - p0-range:     finite P0 entries lie in (-M, M]
///   - level-bits:   (C_k >= 0) == predicted_level_bit for k = 1..l
VerifyReport verify(const Graph& g, const WeightMatrix& delta_alg,
                    const std::vector<ComponentTrace>* traces = nullptr);

}  // namespace sz
