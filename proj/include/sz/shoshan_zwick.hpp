#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sz/distance_product.hpp"
#include "sz/graph.hpp"
#include "sz/matrix.hpp"

// All-pairs shortest paths for undirected graphs with small positive
// integer costs, computed from O(log(M n)) distance products.
//
// The pipeline squares the cost matrix with clipping, builds a ladder of
// clipped powers A_k of (D - M), then walks the ladder downward to produce
// per-level comparison matrices C_k together with residue (P_k) and
// candidate (Q_k) matrices. The sign of C_k yields bit k+m of every
// distance; P_0 holds the distance modulo 2M, centred on (-M, M]. Two
// finishers assemble the distance matrix from these pieces: the published
// one, which misreads negative residues, and the corrected one.

namespace sz {

struct SzParams {
  Index nodes = 1;
  /// Power-of-two bound on edge costs (M).
  std::int64_t cost_bound = 2;
  /// log2 of cost_bound (m >= 1).
  int cost_log2 = 1;
  /// ceil(log2 nodes); 0 for a single node.
  int levels = 0;

  /// Rounds max_edge_cost up to max(2, next power of two). Throws
  /// InvalidArgument when 2 * M * n would not fit the finite range.
  static SzParams make(Index nodes, std::int64_t max_edge_cost);
};

enum class FinisherKind { kOriginal, kCorrected };

std::string_view to_string(FinisherKind kind);
FinisherKind parse_finisher_kind(std::string_view name);

/// Output of the downward walk, indexed by level 0..levels.
struct LevelMatrices {
  std::vector<WeightMatrix> comparison;  // C_k
  std::vector<WeightMatrix> residue;     // P_k
  std::vector<WeightMatrix> candidate;   // Q_k
};

struct Finish {
  /// Index 0 is the finisher's own low-bit matrix, 1..levels are (C_k >= 0).
  std::vector<BitMatrix> bits;
  WeightMatrix remainder;
  WeightMatrix delta;
};

struct SzTrace {
  /// D after each of the m + 1 clipped squarings.
  std::vector<WeightMatrix> squarings;
  std::vector<WeightMatrix> ladder;  // A_0..A_l
  LevelMatrices levels;
  Finish finish;

  const WeightMatrix& squared() const { return squarings.back(); }
};

/// Repeats D <- clip(D * D, 0, 2M) m + 1 times. Input must be symmetric with
/// zero diagonal and off-diagonal entries in {1..M} or +inf.
WeightMatrix squaring_phase(const WeightMatrix& d, const SzParams& params,
                            const ProductBackend& backend = {},
                            std::vector<WeightMatrix>* steps = nullptr,
                            EncodedStats* stats = nullptr);

/// [A_0, ..., A_l] with A_k = clip(A_{k-1} * A_{k-1}, -M, M).
std::vector<WeightMatrix> ladder_phase(const WeightMatrix& a0, const SzParams& params,
                                       const ProductBackend& backend = {},
                                       EncodedStats* stats = nullptr);

/// Downward walk k = l-1..0 starting from C_l = -M, P_l = clip(D, 0, M),
/// Q_l = +inf.
LevelMatrices cpq_recursion(const WeightMatrix& squared, const std::vector<WeightMatrix>& ladder,
                            const SzParams& params, const ProductBackend& backend = {},
                            EncodedStats* stats = nullptr);

/// The published assembly: B_0 = (0 <= P_0 < M), R = P_0 rem M (sign of the
/// dividend kept), delta = M * sum_{k=0..l} 2^k B_k + R. Wrong whenever P_0
/// has negative entries; kept to reproduce that behaviour.
Finish finish_original(const LevelMatrices& levels, const SzParams& params);

/// The corrected assembly: B_0 = (-M < P_0 < 0), R = P_0,
/// delta = M * sum_{k=1..l} 2^k B_k + 2M * B_0 + R.
Finish finish_corrected(const LevelMatrices& levels, const SzParams& params);

Finish finish(FinisherKind kind, const LevelMatrices& levels, const SzParams& params);

/// Full pipeline on one connected cost matrix.
WeightMatrix solve_connected(const WeightMatrix& d, const SzParams& params, FinisherKind finisher,
                             const ProductBackend& backend = {}, SzTrace* trace = nullptr,
                             EncodedStats* stats = nullptr);

struct ComponentTrace {
  std::vector<Index> nodes;
  SzParams params;
  SzTrace trace;
};

struct SzResult {
  WeightMatrix delta;
  /// One entry per connected component when tracing was requested.
  std::vector<ComponentTrace> traces;
  EncodedStats encoded;
};

/// Splits the graph into connected components, solves each and assembles
/// the full matrix with +inf between components. The cost bound M is shared
/// by all components and derived from the graph's largest edge cost.
SzResult run(const Graph& graph, FinisherKind finisher, const ProductBackend& backend = {},
             bool capture_trace = false);

/// Every intermediate matrix in pipeline order, each under a `## <name>`
/// heading and in the to_text format.
std::string render_trace(const SzTrace& trace, const SzParams& params, FinisherKind finisher);

}  // namespace sz
