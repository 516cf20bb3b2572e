#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "sz/matrix.hpp"

namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
};
}  // namespace Eigen

namespace sz {

using BigInt = mpz_class;
using BigMatrix = Dense<BigInt>;

/// Power encoding of a weight matrix: finite a_ij becomes base^(a_ij - shift),
/// +inf becomes 0, with base = n + 1 and shift the smallest finite entry.
/// An ordinary (+, *) product of two encodings sums powers of the base,
/// so the largest power not exceeding a product cell recovers the largest
/// a_ik + b_kj over k.
struct EncodedMatrix {
  std::int64_t base = 0;
  std::int64_t shift = 0;
  /// Largest exponent present; (max - min) of the finite source entries.
  std::int64_t spread = 0;
  BigMatrix entries;

  Index size() const { return entries.rows(); }
};

/// Throws DegenerateInput when `a` has no finite entry.
EncodedMatrix encode(const WeightMatrix& a);

/// Largest s with base^s <= cprime, offset by `offset`; +inf for cprime = 0.
ExtInt decode_entry(const BigInt& cprime, std::int64_t base, std::int64_t offset);

/// Same, additionally reports the exponent s (undefined for cprime = 0).
ExtInt decode_entry(const BigInt& cprime, std::int64_t base, std::int64_t offset,
                    std::int64_t& exponent);

/// Exact product over (+, *). With `use_strassen` the operands are
/// zero-padded to a power of two and split recursively until the block
/// dimension is <= cutoff.
BigMatrix ring_matmul(const BigMatrix& a, const BigMatrix& b, bool use_strassen,
                      Index cutoff = 16);
BigMatrix ring_matmul(const EncodedMatrix& a, const EncodedMatrix& b, bool use_strassen,
                      Index cutoff = 16);

/// Direct triple loop, used below the Strassen cutoff.
BigMatrix ring_matmul_direct(const BigMatrix& a, const BigMatrix& b);

std::size_t max_bit_length(const BigMatrix& m);

}  // namespace sz
