#include "sz/encoded.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace sz {
namespace {

BigInt power(std::int64_t base, std::int64_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return r;
}

Index next_pow2(Index n) {
  return static_cast<Index>(std::bit_ceil(static_cast<std::uint64_t>(n)));
}

BigMatrix strassen(const BigMatrix& a, const BigMatrix& b, Index cutoff) {
  const Index n = a.rows();
  if (n <= cutoff || n % 2 != 0) return ring_matmul_direct(a, b);
  const Index h = n / 2;

  const BigMatrix a11 = a.topLeftCorner(h, h), a12 = a.topRightCorner(h, h);
  const BigMatrix a21 = a.bottomLeftCorner(h, h), a22 = a.bottomRightCorner(h, h);
  const BigMatrix b11 = b.topLeftCorner(h, h), b12 = b.topRightCorner(h, h);
  const BigMatrix b21 = b.bottomLeftCorner(h, h), b22 = b.bottomRightCorner(h, h);

  const BigMatrix m1 = strassen(a11 + a22, b11 + b22, cutoff);
  const BigMatrix m2 = strassen(a21 + a22, b11, cutoff);
  const BigMatrix m3 = strassen(a11, b12 - b22, cutoff);
  const BigMatrix m4 = strassen(a22, b21 - b11, cutoff);
  const BigMatrix m5 = strassen(a11 + a12, b22, cutoff);
  const BigMatrix m6 = strassen(a21 - a11, b11 + b12, cutoff);
  const BigMatrix m7 = strassen(a12 - a22, b21 + b22, cutoff);

  BigMatrix c(n, n);
  c.topLeftCorner(h, h) = m1 + m4 - m5 + m7;
  c.topRightCorner(h, h) = m3 + m5;
  c.bottomLeftCorner(h, h) = m2 + m4;
  c.bottomRightCorner(h, h) = m1 - m2 + m3 + m6;
  return c;
}

}  // namespace

EncodedMatrix encode(const WeightMatrix& a) {
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (const ExtInt v : a.dense().reshaped()) {
    if (v.is_inf()) continue;
    lo = any ? std::min(lo, v.value()) : v.value();
    hi = any ? std::max(hi, v.value()) : v.value();
    any = true;
  }
  if (!any) throw DegenerateInput("cannot encode a matrix without finite entries");

  EncodedMatrix e;
  e.base = a.size() + 1;
  e.shift = lo;
  e.spread = hi - lo;

  std::vector<BigInt> powers(static_cast<std::size_t>(e.spread + 1));
  powers[0] = 1;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * e.base;

  e.entries.resize(a.size(), a.size());
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < a.size(); ++j) {
      const ExtInt v = a(i, j);
      e.entries(i, j) = v.is_inf() ? BigInt(0) : powers[static_cast<std::size_t>(v.value() - lo)];
    }
  }
  return e;
}

ExtInt decode_entry(const BigInt& cprime, std::int64_t base, std::int64_t offset,
                    std::int64_t& exponent) {
  if (base < 2) throw InvalidArgument("encoding base must be >= 2");
  if (sgn(cprime) < 0) throw InvalidArgument("encoded value must be nonnegative");
  if (sgn(cprime) == 0) return kInf;

  // 2^(bits-1) <= c' < 2^bits brackets the exponent between the floor and
  // ceiling base-2 logarithms of the base.
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(cprime.get_mpz_t(), 2));
  const auto ubase = static_cast<std::uint64_t>(base);
  const auto floor_log2 = static_cast<std::int64_t>(std::bit_width(ubase) - 1);
  const auto ceil_log2 = static_cast<std::int64_t>(std::bit_width(ubase - 1));
  std::int64_t lo = (bits - 1) / ceil_log2;
  std::int64_t hi = (bits - 1) / floor_log2;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (power(base, mid) <= cprime) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

#ifdef SZ_CHECK_DECODE
  if (!(power(base, lo) <= cprime && cprime < power(base, lo + 1))) {
    throw std::logic_error("decoded exponent does not bracket the encoded value");
  }
#endif

  exponent = lo;
  return ExtInt(lo + offset);
}

ExtInt decode_entry(const BigInt& cprime, std::int64_t base, std::int64_t offset) {
  std::int64_t exponent = 0;
  return decode_entry(cprime, base, offset, exponent);
}

BigMatrix ring_matmul_direct(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("dimension mismatch in ring product");
  BigMatrix c = BigMatrix::Constant(a.rows(), b.cols(), BigInt(0));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

BigMatrix ring_matmul(const BigMatrix& a, const BigMatrix& b, bool use_strassen,
                      Index cutoff) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw InvalidArgument("ring product needs square operands of equal size");
  }
  if (cutoff < 1) throw InvalidArgument("strassen cutoff must be >= 1");
  if (!use_strassen) return ring_matmul_direct(a, b);

  const Index n = a.rows();
  const Index padded = next_pow2(n);
  if (padded == n) return strassen(a, b, cutoff);

  BigMatrix ap = BigMatrix::Constant(padded, padded, BigInt(0));
  BigMatrix bp = BigMatrix::Constant(padded, padded, BigInt(0));
  ap.topLeftCorner(n, n) = a;
  bp.topLeftCorner(n, n) = b;
  return strassen(ap, bp, cutoff).topLeftCorner(n, n);
}

BigMatrix ring_matmul(const EncodedMatrix& a, const EncodedMatrix& b, bool use_strassen,
                      Index cutoff) {
  return ring_matmul(a.entries, b.entries, use_strassen, cutoff);
}

std::size_t max_bit_length(const BigMatrix& m) {
  std::size_t best = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) best = std::max(best, mpz_sizeinbase(m(i, j).get_mpz_t(), 2));
    }
  }
  return best;
}

}  // namespace sz
