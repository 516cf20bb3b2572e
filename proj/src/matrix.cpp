#include "sz/matrix.hpp"

#include <charconv>
#include <vector>

namespace sz {
namespace {

template <typename Scalar, typename Fmt>
std::string render(const SquareMatrix<Scalar>& m, Fmt fmt) {
  std::string out;
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m.size(); ++j) {
      if (j > 0) out += '\t';
      fmt(out, m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string to_text(const WeightMatrix& m) {
  return render(m, [](std::string& out, ExtInt v) {
    out += v.is_inf() ? std::string("inf") : std::to_string(v.value());
  });
}

std::string to_text(const BitMatrix& m) {
  return render(m, [](std::string& out, std::uint8_t v) { out += v ? '1' : '0'; });
}

WeightMatrix weight_matrix_from_text(std::string_view text) {
  std::vector<std::vector<ExtInt>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<ExtInt> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      auto end = line.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = line.size();
      const auto tok = line.substr(start, end - start);
      if (tok == "inf") {
        row.push_back(kInf);
      } else {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() ||
            v >= ExtInt::kFiniteLimit || v <= -ExtInt::kFiniteLimit) {
          throw ParseError(line_no, "bad matrix entry '" + std::string(tok) + "'");
        }
        row.emplace_back(v);
      }
      pos = end;
    }
    rows.push_back(std::move(row));
  }

  const auto n = static_cast<Index>(rows.size());
  if (n == 0) throw ParseError(line_no, "empty matrix");
  Dense<ExtInt> d(n, n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[i].size()) != n) {
      throw ParseError(static_cast<std::size_t>(i + 1), "row length differs from row count");
    }
    for (Index j = 0; j < n; ++j) d(i, j) = rows[i][j];
  }
  return WeightMatrix(std::move(d));
}

}  // namespace sz
