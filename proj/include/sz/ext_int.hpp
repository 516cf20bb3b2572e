#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

#include <Eigen/Core>

namespace sz {

/// Integer extended with a single +infinity element.
///
/// Finite values are bounded by kFiniteLimit so that the sum of any two
/// finite values is representable; +inf uses a reserved bit pattern that
/// no finite value can take. Addition absorbs +inf and ordering places it
/// above every finite value.
class ExtInt {
 public:
  static constexpr std::int64_t kFiniteLimit = std::int64_t{1} << 61;

  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : raw_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt inf() { return ExtInt(kInfRaw, RawTag{}); }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  constexpr bool is_finite() const { return raw_ != kInfRaw; }

  /// Finite value; meaningless for +inf.
  constexpr std::int64_t value() const { return raw_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return ExtInt(a.raw_ + b.raw_);
  }

  friend constexpr bool operator==(ExtInt, ExtInt) = default;
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    return a.raw_ <=> b.raw_;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtInt v) {
    if (v.is_inf()) return os << "inf";
    return os << v.raw_;
  }

 private:
  struct RawTag {};
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();
  constexpr ExtInt(std::int64_t raw, RawTag) : raw_(raw) {}

  std::int64_t raw_ = 0;
};

inline constexpr ExtInt kInf = ExtInt::inf();

constexpr ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }

}  // namespace sz

namespace Eigen {
template <>
struct NumTraits<sz::ExtInt> : GenericNumTraits<std::int64_t> {
  using Real = sz::ExtInt;
  using NonInteger = sz::ExtInt;
  using Nested = sz::ExtInt;
  using Literal = sz::ExtInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
};
}  // namespace Eigen
