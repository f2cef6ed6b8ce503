// Command-line front door: construct half-order certificates, compute exact
// local metric dimension, verify candidate sets, and scan graph6 streams.
//
// Exit codes: 0 success / verdict ok, 1 verification failed, 2 bad input or
// contract violation, 3 bound violated or repair performed, 4 exact-search
// cap exceeded, 5 packing budget exceeded, 6 construction invariant failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "locdim/batch.hpp"
#include "locdim/constructor.hpp"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/graph6.hpp"
#include "locdim/oracle.hpp"
#include "locdim/packing.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_resolving = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_counterexample_candidate = 3;
constexpr int exit_cap_exceeded = 4;
constexpr int exit_budget_exceeded = 5;
constexpr int exit_construction_failed = 6;

struct GraphInput {
  std::string name;
  std::string g6;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* n = cmd->add_option("--name", name, "named or generated graph");
    auto* g = cmd->add_option("--g6", g6, "graph6 line");
    auto* f = cmd->add_option("--file", file, "file with one graph6 line");
    n->excludes(g)->excludes(f);
    g->excludes(f);
  }

  locdim::Graph load() const {
    if (!name.empty()) return locdim::named_graph(name);
    if (!g6.empty()) return locdim::parse_graph6(g6);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw locdim::InputContractError("cannot open file: " + file);
      std::string line;
      if (!std::getline(in, line))
        throw locdim::InputContractError("empty file: " + file);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return locdim::parse_graph6(line);
    }
    throw locdim::InputContractError("one of --name, --g6, --file is required");
  }
};

void write_dot(const std::string& path, const locdim::Graph& g,
               const std::vector<int>& w) {
  std::ofstream out(path);
  if (!out) throw locdim::InputContractError("cannot open dot file: " + path);
  const locdim::VertexSet w_mask = locdim::to_vertex_set(w);
  out << "graph locdim {\n  node [style=filled];\n";
  for (int v = 0; v < g.order(); ++v)
    out << "  " << v << " [fillcolor=" << (locdim::contains(w_mask, v) ? "gold" : "white")
        << "];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t pos = 0;
    const int v = std::stoi(token, &pos);
    if (pos != token.size())
      throw locdim::InputContractError("bad vertex token: '" + token + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local metric dimension toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool strict = false;
  long long node_cap = 10'000'000;
  app.add_flag("--strict", strict,
               "follow the construction procedure to the letter")
      ->envname("LOCDIM_STRICT");
  app.add_option("--node-cap", node_cap, "packing search node budget")
      ->envname("LOCDIM_NODE_CAP");

  // construct
  auto* c_construct =
      app.add_subcommand("construct", "build and verify a certificate");
  GraphInput construct_in;
  construct_in.attach(c_construct);
  bool with_trace = false;
  bool compact = false;
  std::string dot_file;
  c_construct->add_flag("--trace", with_trace,
                        "also dump the division layers as JSON lines to stderr");
  c_construct->add_flag("--compact", compact, "single-line JSON output");
  c_construct->add_option("--dot", dot_file,
                          "write a DOT rendering with W-membership coloring");

  // exact
  auto* c_exact = app.add_subcommand("exact", "exact local metric dimension");
  GraphInput exact_in;
  exact_in.attach(c_exact);
  int exact_cap = 16;
  c_exact->add_option("--exact-cap", exact_cap, "exhaustive search order cap")
      ->envname("LOCDIM_EXACT_CAP");
  bool with_bounds = false;
  c_exact->add_flag("--bounds", with_bounds, "also report the known bounds");

  // verify
  auto* c_verify = app.add_subcommand("verify", "check a local resolving set");
  GraphInput verify_in;
  verify_in.attach(c_verify);
  std::string w_arg;
  c_verify->add_option("--w", w_arg, "comma-separated vertex list")->required();

  // batch
  auto* c_batch = app.add_subcommand("batch", "scan a graph6 stream");
  std::string batch_file;
  std::string report_file;
  int jobs = 1;
  int batch_cap = 16;
  c_batch->add_option("--file", batch_file, "graph6 stream, one graph per line")
      ->required();
  c_batch->add_option("--report", report_file, "write JSON lines here instead of stdout");
  c_batch->add_option("--jobs", jobs, "worker count")->envname("LOCDIM_JOBS");
  c_batch->add_option("--exact-cap", batch_cap, "exhaustive search order cap")
      ->envname("LOCDIM_EXACT_CAP");

  // gen
  auto* c_gen = app.add_subcommand("gen", "emit graph6 lines");
  std::string gen_name;
  bool gen_random = false;
  int gen_n = 8;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  int gen_count = 1;
  c_gen->add_option("--name", gen_name, "named or generated graph");
  c_gen->add_flag("--random", gen_random, "random K4-free graph");
  c_gen->add_option("--n", gen_n, "order for --random");
  c_gen->add_option("--p", gen_p, "edge probability for --random");
  c_gen->add_option("--seed", gen_seed, "seed for --random")->envname("LOCDIM_SEED");
  c_gen->add_option("--count", gen_count, "number of samples (seed increments)");

  CLI11_PARSE(app, argc, argv);

  locdim::ConstructOptions copt;
  copt.strict = strict;
  copt.budget.node_cap = node_cap;

  try {
    if (*c_construct) {
      const auto g = construct_in.load();
      const auto cert = locdim::construct_certificate(g, copt);
      if (with_trace) {
        const auto d = locdim::local_vertex_division(g, copt.budget);
        std::cerr << locdim::division_trace_json(d);
      }
      if (!dot_file.empty()) write_dot(dot_file, g, cert.w);
      std::cout << locdim::certificate_json(cert, true, compact ? -1 : 2) << "\n";
      if (!cert.bound_ok || cert.repair_performed)
        return exit_counterexample_candidate;
      return exit_ok;
    }

    if (*c_exact) {
      const auto g = exact_in.load();
      locdim::OracleOptions oopt;
      oopt.cap = exact_cap;
      const auto result = locdim::local_metric_dimension(g, oopt);
      if (with_bounds) {
        std::cout << locdim::bounds_report_json(locdim::check_known_bounds(g, oopt))
                  << "\n";
      } else {
        std::cout << "{\"dim_l\":" << result.k << ",\"witness\":"
                  << nlohmann::json(result.witness).dump() << "}\n";
      }
      return exit_ok;
    }

    if (*c_verify) {
      const auto g = verify_in.load();
      const auto w_list = parse_vertex_list(w_arg);
      for (int v : w_list)
        if (v < 0 || v >= g.order())
          throw locdim::InputContractError("vertex " + std::to_string(v) +
                                           " out of range");
      const auto verdict = locdim::is_local_resolving(
          g, locdim::to_vertex_set(w_list));
      if (verdict.ok) {
        std::cout << "{\"ok\":true}\n";
        return exit_ok;
      }
      std::cout << "{\"ok\":false,\"failing_edge\":[" << verdict.u << ","
                << verdict.v << "]}\n";
      return exit_not_resolving;
    }

    if (*c_batch) {
      std::ifstream in(batch_file);
      if (!in)
        throw locdim::InputContractError("cannot open file: " + batch_file);
      locdim::BatchOptions bopt;
      bopt.jobs = jobs;
      bopt.exact_cap = batch_cap;
      bopt.strict = strict;
      bopt.budget.node_cap = node_cap;
      locdim::BatchSummary summary;
      if (report_file.empty()) {
        summary = locdim::run_batch(in, std::cout, bopt);
      } else {
        std::ofstream report(report_file);
        if (!report)
          throw locdim::InputContractError("cannot open report file: " +
                                           report_file);
        summary = locdim::run_batch(in, report, bopt);
      }
      std::cout << summary.to_json() << "\n";
      return summary.clean() ? exit_ok : exit_counterexample_candidate;
    }

    if (*c_gen) {
      if (gen_name.empty() == !gen_random)
        throw locdim::InputContractError("gen needs exactly one of --name, --random");
      for (int i = 0; i < gen_count; ++i) {
        const auto g = gen_random
                           ? locdim::random_k4_free(gen_n, gen_p, gen_seed + static_cast<std::uint64_t>(i))
                           : locdim::named_graph(gen_name);
        std::cout << locdim::write_graph6(g) << "\n";
      }
      return exit_ok;
    }
  } catch (const locdim::OracleCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap_exceeded;
  } catch (const locdim::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget_exceeded;
  } catch (const locdim::ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\ntrace: " << e.trace_json() << "\n";
    return exit_construction_failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
  return exit_ok;
}
