#include "sz/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <utility>

#include "sz/errors.hpp"
#include "sz/minplus.hpp"

namespace sz {
namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

DistanceMatrix floyd_warshall(const Graph& g) {
  Dense<ExtInt> d = build_matrix(g).dense();
  const Index n = g.nodes();
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (d(i, k).is_inf()) continue;
      for (Index j = 0; j < n; ++j) {
        const ExtInt via = d(i, k) + d(k, j);
        if (via < d(i, j)) d(i, j) = via;
      }
    }
  }
  return DistanceMatrix(std::move(d));
}

DistanceMatrix dijkstra_all(const Graph& g) {
  const Index n = g.nodes();
  std::vector<std::vector<std::pair<Index, std::int64_t>>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[e.u].emplace_back(e.v, e.cost);
    adj[e.v].emplace_back(e.u, e.cost);
  }

  Dense<ExtInt> d = Dense<ExtInt>::Constant(n, n, kInf);
  using Item = std::pair<std::int64_t, Index>;
  for (Index s = 0; s < n; ++s) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d(s, s) = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [dist, u] = heap.top();
      heap.pop();
      if (d(s, u) < dist) continue;
      for (const auto& [v, w] : adj[u]) {
        if (ExtInt(dist + w) < d(s, v)) {
          d(s, v) = dist + w;
          heap.emplace(dist + w, v);
        }
      }
    }
  }
  return DistanceMatrix(std::move(d));
}

WeightMatrix predicted_p0(const DistanceMatrix& delta, const SzParams& params) {
  const std::int64_t m = params.cost_bound;
  return WeightMatrix(delta.dense().unaryExpr([m](ExtInt v) {
    if (v.is_inf()) return v;
    const std::int64_t r = floor_mod(v.value(), 2 * m);
    return ExtInt(r <= m ? r : r - 2 * m);
  }));
}

BitMatrix predicted_level_bit(const DistanceMatrix& delta, const SzParams& params, int level) {
  const int shift = level + params.cost_log2;
  return BitMatrix(delta.dense().unaryExpr([shift](ExtInt v) -> std::uint8_t {
    if (v.is_inf()) return 0;
    return floor_mod(v.value(), std::int64_t{2} << shift) >= (std::int64_t{1} << shift);
  }));
}

bool VerifyReport::ok() const {
  if (!mismatches.empty()) return false;
  for (const auto& p : properties) {
    if (!p.passed()) return false;
  }
  return true;
}

std::size_t VerifyReport::off_diagonal_mismatches() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(mismatches, [](const Mismatch& mm) { return mm.i != mm.j; }));
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  out << "mismatches: " << mismatches.size() << '\n';
  out << "off-diagonal mismatches: " << off_diagonal_mismatches() << '\n';
  for (const auto& p : properties) {
    out << "property " << p.name << ": " << (p.passed() ? "pass" : "FAIL") << " ("
        << p.checked - p.failed << "/" << p.checked << ")\n";
  }
  for (const auto& mm : mismatches) {
    out << "mismatch " << mm.i + 1 << ' ' << mm.j + 1 << ' ' << mm.expected << ' ' << mm.got
        << '\n';
  }
  out << (ok() ? "result: ok" : "result: FAIL") << '\n';
  return out.str();
}

VerifyReport verify(const Graph& g, const WeightMatrix& delta_alg,
                    const std::vector<ComponentTrace>* traces) {
  if (delta_alg.size() != g.nodes()) throw InvalidArgument("delta dimension differs from graph");

  const DistanceMatrix truth = floyd_warshall(g);
  VerifyReport report;

  PropertyCheck oracles{"oracle-agreement"};
  const DistanceMatrix second = dijkstra_all(g);
  for (Index i = 0; i < g.nodes(); ++i) {
    for (Index j = 0; j < g.nodes(); ++j) {
      ++oracles.checked;
      if (truth(i, j) != second(i, j)) ++oracles.failed;
      if (truth(i, j) != delta_alg(i, j)) {
        report.mismatches.push_back({i, j, truth(i, j), delta_alg(i, j)});
      }
    }
  }
  report.properties.push_back(oracles);
  if (traces == nullptr) return report;

  PropertyCheck residue_mod{"residue-mod"};
  PropertyCheck p0_predicted{"p0-predicted"};
  PropertyCheck p0_range{"p0-range"};
  PropertyCheck level_bits{"level-bits"};
  for (const ComponentTrace& ct : *traces) {
    const SzParams& params = ct.params;
    const std::int64_t m = params.cost_bound;
    const auto k = static_cast<Index>(ct.nodes.size());
    Dense<ExtInt> local(k, k);
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) local(a, b) = truth(ct.nodes[a], ct.nodes[b]);
    }
    const DistanceMatrix delta(std::move(local));
    const WeightMatrix& p0 = ct.trace.levels.residue.at(0);
    const BitMatrix low = band(p0, -m, 0, Bound::kStrict, Bound::kStrict);
    const WeightMatrix expected_p0 = predicted_p0(delta, params);

    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        const ExtInt p = p0(a, b);
        ++residue_mod.checked;
        if (p.is_inf() || delta(a, b).is_inf() ||
            2 * m * low(a, b) + p.value() != floor_mod(delta(a, b).value(), 2 * m)) {
          ++residue_mod.failed;
        }
        ++p0_predicted.checked;
        if (p != expected_p0(a, b)) ++p0_predicted.failed;
        if (p.is_finite()) {
          ++p0_range.checked;
          if (!(p > -m && p <= m)) ++p0_range.failed;
        }
      }
    }
    for (int level = 1; level <= params.levels; ++level) {
      const BitMatrix got = ge_zero(ct.trace.levels.comparison.at(level));
      const BitMatrix want = predicted_level_bit(delta, params, level);
      const auto cells = static_cast<std::size_t>(k * k);
      level_bits.checked += cells;
      level_bits.failed += static_cast<std::size_t>(
          (got.dense().array() != want.dense().array()).count());
    }
  }
  report.properties.push_back(residue_mod);
  report.properties.push_back(p0_predicted);
  report.properties.push_back(p0_range);
  report.properties.push_back(level_bits);
  return report;
}

}  // namespace sz
