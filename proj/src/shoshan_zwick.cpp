#include "sz/shoshan_zwick.hpp"

#include <bit>
#include <string>

#include "sz/errors.hpp"
#include "sz/minplus.hpp"

namespace sz {
namespace {

WeightMatrix product(const WeightMatrix& a, const WeightMatrix& b, const ProductBackend& backend,
                     EncodedStats* stats) {
  return distance_product_or_naive(a, b, backend, stats);
}

void validate_cost_matrix(const WeightMatrix& d, const SzParams& params) {
  if (d.size() != params.nodes) {
    throw InvalidInput("cost matrix has dimension " + std::to_string(d.size()) + ", expected " +
                       std::to_string(params.nodes));
  }
  for (Index i = 0; i < d.size(); ++i) {
    if (d(i, i) != 0) throw InvalidInput("cost matrix diagonal must be zero");
    for (Index j = 0; j < d.size(); ++j) {
      if (d(i, j) != d(j, i)) throw InvalidInput("cost matrix must be symmetric");
      if (i != j && d(i, j).is_finite() &&
          (d(i, j) < 1 || d(i, j) > params.cost_bound)) {
        throw InvalidInput("edge cost outside 1.." + std::to_string(params.cost_bound));
      }
    }
  }
}

// delta = M * sum_{k=first..l} 2^k bits[k] + low_weight * low + remainder,
// +inf wherever the remainder is +inf.
WeightMatrix assemble(const std::vector<BitMatrix>& bits, int first_level, std::int64_t low_weight,
                      const WeightMatrix& remainder, const SzParams& params) {
  const Index n = remainder.size();
  Dense<ExtInt> delta(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const ExtInt r = remainder(i, j);
      if (r.is_inf()) {
        delta(i, j) = kInf;
        continue;
      }
      std::int64_t high = 0;
      for (int k = first_level; k <= params.levels; ++k) {
        high += (std::int64_t{bits[k](i, j)} << k);
      }
      delta(i, j) = params.cost_bound * high + low_weight * bits[0](i, j) + r.value();
    }
  }
  return WeightMatrix(std::move(delta));
}

std::vector<BitMatrix> level_bits(const LevelMatrices& levels, BitMatrix low) {
  std::vector<BitMatrix> bits;
  bits.reserve(levels.comparison.size());
  bits.push_back(std::move(low));
  for (std::size_t k = 1; k < levels.comparison.size(); ++k) {
    bits.push_back(ge_zero(levels.comparison[k]));
  }
  return bits;
}

}  // namespace

SzParams SzParams::make(Index nodes, std::int64_t max_edge_cost) {
  if (nodes < 1) throw InvalidArgument("node count must be >= 1");
  if (max_edge_cost > (std::int64_t{1} << 40)) throw InvalidArgument("edge cost bound too large");
  SzParams p;
  p.nodes = nodes;
  p.cost_bound = static_cast<std::int64_t>(
      std::bit_ceil(static_cast<std::uint64_t>(std::max<std::int64_t>(2, max_edge_cost))));
  p.cost_log2 = std::countr_zero(static_cast<std::uint64_t>(p.cost_bound));
  p.levels = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(nodes - 1)));
  // Products of two clipped operands reach 2 * 2M; distances reach M * n.
  if (p.cost_bound > ExtInt::kFiniteLimit / 8 / nodes) {
    throw InvalidArgument("2 * M * n overflows the finite value range");
  }
  return p;
}

std::string_view to_string(FinisherKind kind) {
  return kind == FinisherKind::kOriginal ? "original" : "corrected";
}

FinisherKind parse_finisher_kind(std::string_view name) {
  if (name == "original") return FinisherKind::kOriginal;
  if (name == "corrected") return FinisherKind::kCorrected;
  throw InvalidArgument("unknown finisher '" + std::string(name) + "'");
}

WeightMatrix squaring_phase(const WeightMatrix& d, const SzParams& params,
                            const ProductBackend& backend, std::vector<WeightMatrix>* steps,
                            EncodedStats* stats) {
  validate_cost_matrix(d, params);
  WeightMatrix cur = d;
  for (int k = 1; k <= params.cost_log2 + 1; ++k) {
    cur = clip(product(cur, cur, backend, stats), 0, 2 * params.cost_bound);
    if (steps != nullptr) steps->push_back(cur);
  }
  return cur;
}

std::vector<WeightMatrix> ladder_phase(const WeightMatrix& a0, const SzParams& params,
                                       const ProductBackend& backend, EncodedStats* stats) {
  const std::int64_t m = params.cost_bound;
  std::vector<WeightMatrix> ladder;
  ladder.reserve(static_cast<std::size_t>(params.levels) + 1);
  ladder.push_back(a0);
  for (int k = 1; k <= params.levels; ++k) {
    const WeightMatrix& prev = ladder.back();
    ladder.push_back(clip(product(prev, prev, backend, stats), -m, m));
  }
  return ladder;
}

LevelMatrices cpq_recursion(const WeightMatrix& squared, const std::vector<WeightMatrix>& ladder,
                            const SzParams& params, const ProductBackend& backend,
                            EncodedStats* stats) {
  const auto l = static_cast<std::size_t>(params.levels);
  if (ladder.size() != l + 1) throw InvalidArgument("ladder must hold levels + 1 matrices");
  const std::int64_t m = params.cost_bound;
  const Index n = squared.size();

  LevelMatrices out;
  out.comparison.resize(l + 1);
  out.residue.resize(l + 1);
  out.candidate.resize(l + 1);
  out.comparison[l] = constant_matrix(n, -m);
  out.residue[l] = clip(squared, 0, m);
  out.candidate[l] = constant_matrix(n, kInf);

  for (std::size_t k = l; k-- > 0;) {
    const WeightMatrix& c_next = out.comparison[k + 1];
    const WeightMatrix& p_next = out.residue[k + 1];
    const WeightMatrix& q_next = out.candidate[k + 1];
    const WeightMatrix via_residue = clip(product(p_next, ladder[k], backend, stats), -m, m);
    const WeightMatrix via_candidate = clip(product(q_next, ladder[k], backend, stats), -m, m);
    out.comparison[k] = vee(wedge(via_residue, c_next), bar_wedge(via_candidate, c_next));
    out.residue[k] = vee(p_next, q_next);
    out.candidate[k] = chop(out.comparison[k], 1 - m, m);
  }
  return out;
}

Finish finish_original(const LevelMatrices& levels, const SzParams& params) {
  const std::int64_t m = params.cost_bound;
  const WeightMatrix& p0 = levels.residue.at(0);

  Finish f;
  f.bits = level_bits(levels, band(p0, 0, m, Bound::kInclusive, Bound::kStrict));
  // C++ % truncates toward zero, so (-2) % 4 == -2.
  f.remainder = WeightMatrix(
      p0.dense().unaryExpr([m](ExtInt v) { return v.is_inf() ? v : ExtInt(v.value() % m); }));
  f.delta = assemble(f.bits, 1, m, f.remainder, params);
  return f;
}

Finish finish_corrected(const LevelMatrices& levels, const SzParams& params) {
  const std::int64_t m = params.cost_bound;
  const WeightMatrix& p0 = levels.residue.at(0);

  Finish f;
  f.bits = level_bits(levels, band(p0, -m, 0, Bound::kStrict, Bound::kStrict));
  f.remainder = p0;
  f.delta = assemble(f.bits, 1, 2 * m, f.remainder, params);
  return f;
}

Finish finish(FinisherKind kind, const LevelMatrices& levels, const SzParams& params) {
  return kind == FinisherKind::kOriginal ? finish_original(levels, params)
                                         : finish_corrected(levels, params);
}

WeightMatrix solve_connected(const WeightMatrix& d, const SzParams& params, FinisherKind finisher,
                             const ProductBackend& backend, SzTrace* trace,
                             EncodedStats* stats) {
  std::vector<WeightMatrix> steps;
  const WeightMatrix squared = squaring_phase(d, params, backend, &steps, stats);
  std::vector<WeightMatrix> ladder =
      ladder_phase(scalar_add(squared, -params.cost_bound), params, backend, stats);
  LevelMatrices levels = cpq_recursion(squared, ladder, params, backend, stats);
  Finish done = finish(finisher, levels, params);
  WeightMatrix delta = done.delta;
  if (trace != nullptr) {
    trace->squarings = std::move(steps);
    trace->ladder = std::move(ladder);
    trace->levels = std::move(levels);
    trace->finish = std::move(done);
  }
  return delta;
}

SzResult run(const Graph& graph, FinisherKind finisher, const ProductBackend& backend,
             bool capture_trace) {
  const Index n = graph.nodes();
  const std::int64_t max_cost = graph.max_cost();
  SzParams::make(n, max_cost);

  SzResult result;
  Dense<ExtInt> delta = Dense<ExtInt>::Constant(n, n, kInf);
  for (const auto& nodes : components(graph).members) {
    const Graph sub = induced_subgraph(graph, nodes);
    const SzParams params = SzParams::make(sub.nodes(), max_cost);
    SzTrace trace;
    const WeightMatrix local = solve_connected(build_matrix(sub), params, finisher, backend,
                                               capture_trace ? &trace : nullptr, &result.encoded);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        delta(nodes[i], nodes[j]) = local(static_cast<Index>(i), static_cast<Index>(j));
      }
    }
    if (capture_trace) result.traces.push_back({nodes, params, std::move(trace)});
  }
  result.delta = WeightMatrix(std::move(delta));
  return result;
}

}  // namespace sz

namespace sz {

std::string render_trace(const SzTrace& trace, const SzParams& params, FinisherKind finisher) {
  std::string out;
  const auto section = [&out](const std::string& name, const std::string& body) {
    out += "## " + name + "\n" + body;
  };
  const auto level = [](const char* name, std::size_t k) {
    return std::string(name) + "_" + std::to_string(k);
  };

  for (std::size_t k = 0; k < trace.squarings.size(); ++k) {
    section("D after squaring " + std::to_string(k + 1), to_text(trace.squarings[k]));
  }
  for (std::size_t k = 0; k < trace.ladder.size(); ++k) {
    section(level("A", k), to_text(trace.ladder[k]));
  }
  const LevelMatrices& lv = trace.levels;
  for (std::size_t k = lv.comparison.size(); k-- > 0;) {
    section(level("C", k), to_text(lv.comparison[k]));
    section(level("P", k), to_text(lv.residue[k]));
    section(level("Q", k), to_text(lv.candidate[k]));
  }

  const std::string m = std::to_string(params.cost_bound);
  const bool original = finisher == FinisherKind::kOriginal;
  for (std::size_t k = 0; k < trace.finish.bits.size(); ++k) {
    std::string name = level("B", k);
    if (k == 0) {
      name += original ? " = (0 <= P_0 < " + m + ")" : " = (-" + m + " < P_0 < 0)";
    } else {
      name += " = (C_" + std::to_string(k) + " >= 0)";
    }
    section(name, to_text(trace.finish.bits[k]));
  }
  section(original ? "R = P_0 rem " + m : "R = P_0", to_text(trace.finish.remainder));
  section("Delta", to_text(trace.finish.delta));
  return out;
}

}  // namespace sz
