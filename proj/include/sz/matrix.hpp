#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "sz/errors.hpp"
#include "sz/ext_int.hpp"

namespace sz {

using Index = Eigen::Index;

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Immutable square matrix over an arbitrary scalar.
///
/// A default-constructed matrix is empty (0x0) and only serves as a
/// placeholder; every matrix produced by the library has size() >= 1.
template <typename Scalar>
class SquareMatrix {
 public:
  using scalar_type = Scalar;

  SquareMatrix() = default;

  explicit SquareMatrix(Dense<Scalar> data) : data_(std::move(data)) {
    if (data_.rows() != data_.cols()) throw InvalidArgument("matrix is not square");
    if (data_.rows() == 0) throw InvalidArgument("matrix dimension must be >= 1");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
      : SquareMatrix(from_rows(rows)) {}

  static SquareMatrix constant(Index n, Scalar v) {
    if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
    return SquareMatrix(Dense<Scalar>::Constant(n, n, v));
  }

  Index size() const { return data_.rows(); }
  bool empty() const { return data_.size() == 0; }

  const Scalar& operator()(Index i, Index j) const { return data_(i, j); }
  const Dense<Scalar>& dense() const { return data_; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.size() == b.size() && (a.data_.array() == b.data_.array()).all();
  }

 private:
  static Dense<Scalar> from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    const auto n = static_cast<Index>(rows.size());
    Dense<Scalar> d(n, n);
    Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Index>(row.size()) != n) throw InvalidArgument("matrix is not square");
      Index j = 0;
      for (const auto& v : row) d(i, j++) = v;
      ++i;
    }
    return d;
  }

  Dense<Scalar> data_;
};

using WeightMatrix = SquareMatrix<ExtInt>;
using BitMatrix = SquareMatrix<std::uint8_t>;

/// Rows on lines, entries tab-separated, +inf as `inf`, LF after every row.
std::string to_text(const WeightMatrix& m);
std::string to_text(const BitMatrix& m);

/// Inverse of to_text for weight matrices. Blank lines are ignored.
WeightMatrix weight_matrix_from_text(std::string_view text);

/// Throws InvalidArgument unless both operands have the same dimension.
template <typename A, typename B>
void require_same_size(const SquareMatrix<A>& a, const SquareMatrix<B>& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
}

}  // namespace sz
