#include "sz/distance_product.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "sz/errors.hpp"

namespace sz {
namespace {

// Rows [0, n) split into contiguous chunks; each output row is written by
// exactly one worker, so the result does not depend on the thread count.
template <typename RowFn>
void for_each_row(Index n, RowFn fn) {
  const auto threads = static_cast<Index>(std::min<unsigned>(product_threads(), n));
  if (threads <= 1) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const Index chunk = (n + threads - 1) / threads;
  for (Index t = 0; t < threads; ++t) {
    const Index lo = t * chunk, hi = std::min(n, lo + chunk);
    pool.emplace_back([=, &fn] {
      for (Index i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

WeightMatrix naive_product(const WeightMatrix& a, const WeightMatrix& b) {
  const Index n = a.size();
  Dense<ExtInt> c = Dense<ExtInt>::Constant(n, n, kInf);
  for_each_row(n, [&](Index i) {
    ExtInt* out = c.row(i).data();
    for (Index k = 0; k < n; ++k) {
      const ExtInt aik = a(i, k);
      if (aik.is_inf()) continue;
      const ExtInt* brow = b.dense().row(k).data();
      for (Index j = 0; j < n; ++j) {
        if (brow[j].is_inf()) continue;
        const ExtInt s(aik.value() + brow[j].value());
        if (s < out[j]) out[j] = s;
      }
    }
  });
  return WeightMatrix(std::move(c));
}

WeightMatrix blocked_product(const WeightMatrix& a, const WeightMatrix& b, Index tile) {
  if (tile < 1) throw InvalidArgument("tile size must be >= 1");
  const Index n = a.size();
  Dense<ExtInt> c = Dense<ExtInt>::Constant(n, n, kInf);
  for_each_row(n, [&](Index i) {
    ExtInt* out = c.row(i).data();
    for (Index kk = 0; kk < n; kk += tile) {
      const Index kend = std::min(n, kk + tile);
      for (Index jj = 0; jj < n; jj += tile) {
        const Index jend = std::min(n, jj + tile);
        for (Index k = kk; k < kend; ++k) {
          const ExtInt aik = a(i, k);
          if (aik.is_inf()) continue;
          const ExtInt* brow = b.dense().row(k).data();
          for (Index j = jj; j < jend; ++j) {
            if (brow[j].is_inf()) continue;
            const ExtInt s(aik.value() + brow[j].value());
            if (s < out[j]) out[j] = s;
          }
        }
      }
    }
  });
  return WeightMatrix(std::move(c));
}

WeightMatrix negate(const WeightMatrix& a) {
  return WeightMatrix(
      a.dense().unaryExpr([](ExtInt v) { return v.is_inf() ? v : ExtInt(-v.value()); }));
}

bool all_inf(const WeightMatrix& a) {
  return a.dense().unaryExpr([](ExtInt v) { return v.is_inf(); }).all();
}

// The power encoding turns the ring product into a max-plus product, so
// min-plus is obtained as -maxplus(-A, -B).
WeightMatrix encoded_product(const WeightMatrix& a, const WeightMatrix& b,
                             const ProductBackend& backend, EncodedStats* stats) {
  const Index n = a.size();
  if (all_inf(a) || all_inf(b)) return WeightMatrix::constant(n, kInf);

  const EncodedMatrix ea = encode(negate(a));
  const EncodedMatrix eb = encode(negate(b));
  if (ea.spread > backend.max_spread || eb.spread > backend.max_spread) {
    throw BackendUnsupported("operand spread " + std::to_string(std::max(ea.spread, eb.spread)) +
                             " exceeds encoding bound " + std::to_string(backend.max_spread));
  }

  const bool strassen = backend.kind == BackendKind::kEncodedStrassen;
  const BigMatrix cprime = ring_matmul(ea, eb, strassen, backend.strassen_cutoff);

  const std::int64_t offset = ea.shift + eb.shift;
  Dense<ExtInt> c(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const ExtInt v = decode_entry(cprime(i, j), ea.base, offset);
      c(i, j) = v.is_inf() ? v : ExtInt(-v.value());
    }
  }

  if (stats != nullptr) {
    ++stats->products;
    stats->peak_bits = std::max(stats->peak_bits, max_bit_length(cprime));
    stats->peak_spread = std::max({stats->peak_spread, ea.spread, eb.spread});
  }
  return WeightMatrix(std::move(c));
}

}  // namespace

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::kNaive:
      return "naive";
    case BackendKind::kBlocked:
      return "blocked";
    case BackendKind::kEncoded:
      return "encoded";
    case BackendKind::kEncodedStrassen:
      return "encoded-strassen";
  }
  return "unknown";
}

BackendKind parse_backend_kind(std::string_view name) {
  if (name == "naive") return BackendKind::kNaive;
  if (name == "blocked") return BackendKind::kBlocked;
  if (name == "encoded") return BackendKind::kEncoded;
  if (name == "encoded-strassen") return BackendKind::kEncodedStrassen;
  throw InvalidArgument("unknown backend '" + std::string(name) + "'");
}

unsigned product_threads() {
  if (const char* env = std::getenv("SZ_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

WeightMatrix distance_product(const WeightMatrix& a, const WeightMatrix& b,
                              const ProductBackend& backend, EncodedStats* stats) {
  require_same_size(a, b);
  switch (backend.kind) {
    case BackendKind::kNaive:
      return naive_product(a, b);
    case BackendKind::kBlocked:
      return blocked_product(a, b, backend.tile);
    case BackendKind::kEncoded:
    case BackendKind::kEncodedStrassen:
      return encoded_product(a, b, backend, stats);
  }
  throw InvalidArgument("unknown backend");
}

WeightMatrix distance_product_or_naive(const WeightMatrix& a, const WeightMatrix& b,
                                       const ProductBackend& backend, EncodedStats* stats) {
  try {
    return distance_product(a, b, backend, stats);
  } catch (const BackendUnsupported&) {
    return naive_product(a, b);
  }
}

}  // namespace sz
