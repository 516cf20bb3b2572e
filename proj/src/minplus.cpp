#include "sz/minplus.hpp"

#include <string>

namespace sz {
namespace {

void require_ordered(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw InvalidArgument("lower bound " + std::to_string(lo) + " exceeds upper bound " +
                          std::to_string(hi));
  }
}

template <typename F>
WeightMatrix map(const WeightMatrix& a, F f) {
  return WeightMatrix(a.dense().unaryExpr(f));
}

template <typename F>
WeightMatrix zip(const WeightMatrix& a, const WeightMatrix& b, F f) {
  require_same_size(a, b);
  return WeightMatrix(a.dense().binaryExpr(b.dense(), f));
}

template <typename F>
BitMatrix test(const WeightMatrix& a, F pred) {
  return BitMatrix(a.dense().unaryExpr([&](ExtInt v) { return std::uint8_t{pred(v)}; }));
}

}  // namespace

WeightMatrix clip(const WeightMatrix& a, std::int64_t lo, std::int64_t hi) {
  require_ordered(lo, hi);
  return map(a, [=](ExtInt v) {
    if (v < lo) return ExtInt(lo);
    if (v > hi) return kInf;
    return v;
  });
}

WeightMatrix chop(const WeightMatrix& a, std::int64_t lo, std::int64_t hi) {
  require_ordered(lo, hi);
  return map(a, [=](ExtInt v) { return (v >= lo && v <= hi) ? v : kInf; });
}

WeightMatrix wedge(const WeightMatrix& a, const WeightMatrix& b) {
  return zip(a, b, [](ExtInt x, ExtInt y) { return y < 0 ? x : kInf; });
}

WeightMatrix bar_wedge(const WeightMatrix& a, const WeightMatrix& b) {
  return zip(a, b, [](ExtInt x, ExtInt y) { return y >= 0 ? x : kInf; });
}

WeightMatrix vee(const WeightMatrix& a, const WeightMatrix& b) {
  return zip(a, b, [](ExtInt x, ExtInt y) { return x.is_finite() ? x : y; });
}

WeightMatrix scalar_add(const WeightMatrix& a, std::int64_t c) {
  return map(a, [=](ExtInt v) { return v + c; });
}

BitMatrix ge_zero(const WeightMatrix& c) {
  return test(c, [](ExtInt v) { return v >= 0; });
}

BitMatrix band(const WeightMatrix& p, std::int64_t lo, std::int64_t hi, Bound lo_bound,
               Bound hi_bound) {
  require_ordered(lo, hi);
  return test(p, [=](ExtInt v) {
    if (v.is_inf()) return false;
    const bool above = lo_bound == Bound::kStrict ? v > lo : v >= lo;
    const bool below = hi_bound == Bound::kStrict ? v < hi : v <= hi;
    return above && below;
  });
}

WeightMatrix constant_matrix(Index n, ExtInt v) { return WeightMatrix::constant(n, v); }

WeightMatrix minplus_identity(Index n) {
  if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
  Dense<ExtInt> d = Dense<ExtInt>::Constant(n, n, kInf);
  d.diagonal().setConstant(ExtInt(0));
  return WeightMatrix(std::move(d));
}

bool is_symmetric(const WeightMatrix& a) {
  return (a.dense().array() == a.dense().transpose().array()).all();
}

}  // namespace sz
