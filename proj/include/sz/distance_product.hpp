#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "sz/encoded.hpp"
#include "sz/matrix.hpp"

namespace sz {

enum class BackendKind { kNaive, kBlocked, kEncoded, kEncodedStrassen };

struct ProductBackend {
  BackendKind kind = BackendKind::kNaive;
  Index tile = 64;
  Index strassen_cutoff = 16;
  /// Encoded backends refuse operands whose finite entries span more than this.
  std::int64_t max_spread = 4096;

  static ProductBackend naive() { return {}; }
  static ProductBackend blocked(Index tile = 64) { return {BackendKind::kBlocked, tile}; }
  static ProductBackend encoded() { return {BackendKind::kEncoded}; }
  static ProductBackend encoded_strassen(Index cutoff = 16) {
    return {BackendKind::kEncodedStrassen, 64, cutoff};
  }
};

std::string_view to_string(BackendKind kind);
/// Accepts naive, blocked, encoded and encoded-strassen.
BackendKind parse_backend_kind(std::string_view name);

/// Bookkeeping from the encoded backends, accumulated across calls.
struct EncodedStats {
  std::size_t products = 0;
  std::size_t peak_bits = 0;
  std::int64_t peak_spread = 0;
};

/// (A * B)_ij = min_k a_ik + b_kj with +inf absorbing.
///
/// Every backend returns the same matrix. The encoded backends throw
/// BackendUnsupported when an operand's finite spread exceeds
/// backend.max_spread; distance_product_or_naive falls back instead.
WeightMatrix distance_product(const WeightMatrix& a, const WeightMatrix& b,
                              const ProductBackend& backend = {},
                              EncodedStats* stats = nullptr);

WeightMatrix distance_product_or_naive(const WeightMatrix& a, const WeightMatrix& b,
                                       const ProductBackend& backend,
                                       EncodedStats* stats = nullptr);

/// Worker threads used by the cubic backends: SZ_THREADS if set, else 1.
unsigned product_threads();

}  // namespace sz
