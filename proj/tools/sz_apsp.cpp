// Command-line front end: apsp, verify, demo, bench.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sz/distance_product.hpp"
#include "sz/graph.hpp"
#include "sz/oracle.hpp"
#include "sz/shoshan_zwick.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// The three-node counter-example: a-b cost 2, a-c cost 4.
constexpr const char* kCounterExample =
    "c counter-example graph: a-b cost 2, a-c cost 4\n"
    "p sp 3 2\n"
    "a 1 2 2\n"
    "a 1 3 4\n";

struct Options {
  std::string input;
  std::string finisher = "corrected";
  std::string backend = "naive";
  std::string format = "text";
  bool trace = false;
  bool generate = false;
  std::uint64_t seed = 1;
  long nodes = 64;
  long max_cost = 8;
  double edge_prob = 0.2;
};

sz::Graph load_graph(const Options& o) {
  if (o.generate) {
    return sz::random_connected_graph(o.nodes, o.edge_prob, o.max_cost, o.seed);
  }
  if (o.input.empty()) throw sz::InvalidArgument("an input file is required");
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw sz::InvalidArgument("cannot open " + o.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return sz::parse_graph(buf.str());
}

std::string render_csv(const sz::WeightMatrix& m) {
  std::string out = "i,j,delta\n";
  for (sz::Index i = 0; i < m.size(); ++i) {
    for (sz::Index j = 0; j < m.size(); ++j) {
      const sz::ExtInt v = m(i, j);
      out += std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
             (v.is_inf() ? std::string("inf") : std::to_string(v.value())) + "\n";
    }
  }
  return out;
}

std::string describe(const sz::SzParams& p, sz::FinisherKind f) {
  return "n=" + std::to_string(p.nodes) + " M=" + std::to_string(p.cost_bound) +
         " m=" + std::to_string(p.cost_log2) + " l=" + std::to_string(p.levels) +
         " finisher=" + std::string(sz::to_string(f));
}

sz::ProductBackend backend_of(const Options& o) {
  sz::ProductBackend b;
  b.kind = sz::parse_backend_kind(o.backend);
  return b;
}

int cmd_apsp(const Options& o) {
  const sz::Graph g = load_graph(o);
  const auto finisher = sz::parse_finisher_kind(o.finisher);
  const sz::SzResult r = sz::run(g, finisher, backend_of(o), o.trace);
  std::cout << (o.format == "csv" ? render_csv(r.delta) : sz::to_text(r.delta));
  for (std::size_t c = 0; c < r.traces.size(); ++c) {
    const auto& ct = r.traces[c];
    std::cout << "# component " << c + 1 << " nodes";
    for (const sz::Index v : ct.nodes) std::cout << ' ' << v + 1;
    std::cout << " " << describe(ct.params, finisher) << '\n';
    std::cout << sz::render_trace(ct.trace, ct.params, finisher);
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const sz::Graph g = load_graph(o);
  const auto finisher = sz::parse_finisher_kind(o.finisher);
  const sz::SzResult r = sz::run(g, finisher, backend_of(o), true);
  const sz::VerifyReport report = sz::verify(g, r.delta, &r.traces);
  std::cout << "finisher=" << sz::to_string(finisher) << " backend=" << o.backend
            << " n=" << g.nodes() << '\n';
  std::cout << report.render();
  return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_demo(const Options& o) {
  const sz::Graph g = sz::parse_graph(kCounterExample);
  const auto finisher = sz::parse_finisher_kind(o.finisher);
  const sz::SzParams params = sz::SzParams::make(g.nodes(), g.max_cost());
  const sz::WeightMatrix d = sz::build_matrix(g);
  sz::SzTrace trace;
  sz::solve_connected(d, params, finisher, backend_of(o), &trace);

  std::cout << "# " << describe(params, finisher) << '\n';
  std::cout << "## D\n" << sz::to_text(d);
  std::cout << sz::render_trace(trace, params, finisher);
  return kExitOk;
}

std::int64_t finite_spread(const sz::WeightMatrix& m) {
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (const sz::ExtInt v : m.dense().reshaped()) {
    if (v.is_inf()) continue;
    lo = any ? std::min(lo, v.value()) : v.value();
    hi = any ? std::max(hi, v.value()) : v.value();
    any = true;
  }
  return hi - lo;
}

int cmd_bench(const Options& o) {
  const sz::Graph g = load_graph(o);
  const sz::ProductBackend backend = backend_of(o);
  const auto finisher = sz::parse_finisher_kind(o.finisher);

  const auto start = std::chrono::steady_clock::now();
  const sz::SzResult r = sz::run(g, finisher, backend);
  const auto stop = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  const sz::SzParams params = sz::SzParams::make(g.nodes(), g.max_cost());

  std::cout << "backend=" << sz::to_string(backend.kind) << '\n';
  std::cout << "finisher=" << sz::to_string(finisher) << '\n';
  std::cout << "n=" << g.nodes() << '\n';
  std::cout << "edges=" << g.edges().size() << '\n';
  std::cout << "M=" << params.cost_bound << '\n';
  std::cout << "threads=" << sz::product_threads() << '\n';
  std::cout << "wall_ms=" << ms << '\n';
  if (backend.kind == sz::BackendKind::kEncoded ||
      backend.kind == sz::BackendKind::kEncodedStrassen) {
    std::cout << "encoded_products=" << r.encoded.products << '\n';
    std::cout << "peak_bits=" << r.encoded.peak_bits << '\n';
    std::cout << "peak_spread=" << r.encoded.peak_spread << '\n';
    std::cout << "input_spread=" << finite_spread(sz::build_matrix(g)) << '\n';
  }
  if (backend.kind != sz::BackendKind::kNaive) {
    const sz::SzResult ref = sz::run(g, finisher, sz::ProductBackend::naive());
    std::cout << "agrees_with_naive=" << (ref.delta == r.delta ? 1 : 0) << '\n';
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--finisher", o.finisher, "original or corrected")
      ->check(CLI::IsMember({"original", "corrected"}));
  cmd->add_option("--backend", o.backend, "distance product backend")
      ->check(CLI::IsMember({"naive", "blocked", "encoded", "encoded-strassen"}));
}

void add_generator(CLI::App* cmd, Options& o) {
  cmd->add_flag("--generate", o.generate, "use a seeded random connected graph");
  cmd->add_option("--seed", o.seed, "generator seed");
  cmd->add_option("--nodes", o.nodes, "generated node count")->check(CLI::Range(1L, 1L << 16));
  cmd->add_option("--max-cost", o.max_cost, "generated cost bound W")
      ->check(CLI::Range(1L, 1L << 20));
  cmd->add_option("--edge-prob", o.edge_prob, "generated edge probability")
      ->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-pairs shortest paths via clipped distance products"};
  app.require_subcommand(1);
  Options o;

  auto* apsp = app.add_subcommand("apsp", "print the distance matrix of a graph");
  apsp->add_option("input", o.input, "graph file")->required();
  add_common(apsp, o);
  apsp->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  apsp->add_flag("--trace", o.trace, "also print every intermediate matrix");

  auto* verify = app.add_subcommand("verify", "check the result against shortest-path oracles");
  verify->add_option("input", o.input, "graph file");
  add_common(verify, o);
  add_generator(verify, o);

  auto* demo = app.add_subcommand("demo", "walk through the three-node counter-example");
  add_common(demo, o);

  auto* bench = app.add_subcommand("bench", "time the pipeline on one graph");
  bench->add_option("input", o.input, "graph file");
  add_common(bench, o);
  add_generator(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*apsp) return cmd_apsp(o);
    if (*verify) return cmd_verify(o);
    if (*demo) return cmd_demo(o);
    if (*bench) return cmd_bench(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
