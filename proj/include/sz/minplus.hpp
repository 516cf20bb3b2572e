#pragma once

#include <cstdint>

#include "sz/matrix.hpp"

// Element-wise operators over WeightMatrix. All functions are pure and
// return a fresh matrix. +inf compares above every finite value, so
// +inf >= 0 holds, +inf < 0 does not, and +inf lies outside every finite
// interval.

namespace sz {

/// Values below `lo` become `lo`, values above `hi` become +inf.
WeightMatrix clip(const WeightMatrix& a, std::int64_t lo, std::int64_t hi);

/// Values outside [lo, hi] become +inf.
WeightMatrix chop(const WeightMatrix& a, std::int64_t lo, std::int64_t hi);

/// Keeps a_ij where b_ij < 0, +inf elsewhere.
WeightMatrix wedge(const WeightMatrix& a, const WeightMatrix& b);

/// Keeps a_ij where b_ij >= 0 (including b_ij = +inf), +inf elsewhere.
WeightMatrix bar_wedge(const WeightMatrix& a, const WeightMatrix& b);

/// Finite entries of `a`, falling back to `b`.
WeightMatrix vee(const WeightMatrix& a, const WeightMatrix& b);

WeightMatrix scalar_add(const WeightMatrix& a, std::int64_t c);

/// 1 where c_ij >= 0; +inf counts as nonnegative.
BitMatrix ge_zero(const WeightMatrix& c);

enum class Bound { kInclusive, kStrict };

/// 1 where p_ij lies in the interval (lo, hi) with per-side strictness.
BitMatrix band(const WeightMatrix& p, std::int64_t lo, std::int64_t hi, Bound lo_bound,
               Bound hi_bound);

WeightMatrix constant_matrix(Index n, ExtInt v);

/// Min-plus identity: 0 on the diagonal, +inf elsewhere.
WeightMatrix minplus_identity(Index n);

bool is_symmetric(const WeightMatrix& a);

}  // namespace sz
