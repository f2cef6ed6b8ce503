#include "locdim/batch.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "locdim/errors.hpp"
#include "locdim/graph6.hpp"
#include "json.hpp"

namespace locdim {

namespace {

struct LineOutcome {
  std::string json;
  bool processed = false;
  bool parse_error = false;
  bool bound_violation = false;
  bool repair = false;
  bool construction_error = false;
  bool tight = false;
};

LineOutcome process_line(const std::string& line, const BatchOptions& opt) {
  LineOutcome out;
  nlohmann::ordered_json j;
  j["graph6"] = line;

  Graph g;
  try {
    g = parse_graph6(line);
  } catch (const ParseError& e) {
    j["skipped"] = std::string("parse error: ") + e.what();
    out.parse_error = true;
    out.json = j.dump();
    return out;
  }

  j["n"] = g.order();
  j["omega"] = clique_number(g);
  if (!is_connected(g)) {
    j["skipped"] = "disconnected";
    out.json = j.dump();
    return out;
  }

  const char* reason = nullptr;
  if (g.order() < 4)
    reason = "order below 4";
  else if (j["omega"].get<int>() >= 4)
    reason = "contains K4";

  int dim_l = -1;
  if (g.order() <= opt.exact_cap) {
    // Exact value and bound report also for out-of-contract graphs, so a
    // stream scan can probe territory the constructor itself rejects.
    OracleOptions oopt;
    oopt.cap = opt.exact_cap;
    dim_l = local_metric_dimension(g, oopt).k;
    j["dim_l"] = dim_l;
    const auto bounds = check_known_bounds(g, oopt);
    j["bounds"] = nlohmann::ordered_json::parse(bounds_report_json(bounds));
  }

  if (reason != nullptr) {
    j["skipped"] = reason;
    out.json = j.dump();
    return out;
  }

  ConstructOptions copt;
  copt.strict = opt.strict;
  copt.budget = opt.budget;
  try {
    const Certificate cert = construct_certificate(g, copt);
    nlohmann::ordered_json cj;
    cj["w"] = cert.w;
    cj["w_size"] = cert.w_size();
    cj["bound"] = cert.bound;
    cj["bound_ok"] = cert.bound_ok;
    cj["repair_performed"] = cert.repair_performed;
    j["certificate"] = cj;
    out.bound_violation = !cert.bound_ok;
    out.repair = cert.repair_performed;
    out.processed = true;
    out.tight = dim_l >= 0 && dim_l == cert.bound;
  } catch (const BudgetError& e) {
    j["skipped"] = std::string("packing budget exceeded: ") + e.what();
  } catch (const ConstructionError& e) {
    j["construction_error"] = e.what();
    out.construction_error = true;
  }
  out.json = j.dump();
  return out;
}

}  // namespace

std::string BatchSummary::to_json() const {
  nlohmann::ordered_json j;
  j["lines"] = lines;
  j["processed"] = processed;
  j["skipped"] = skipped;
  j["parse_errors"] = parse_errors;
  j["bound_violations"] = bound_violations;
  j["repairs"] = repairs;
  j["construction_errors"] = construction_errors;
  j["tight"] = tight;
  return j.dump();
}

BatchSummary run_batch(std::istream& in, std::ostream& lines_out,
                       const BatchOptions& opt) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }

  std::vector<LineOutcome> results(lines.size());
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || lines.size() <= 1) {
    for (std::size_t i = 0; i < lines.size(); ++i)
      results[i] = process_line(lines[i], opt);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= lines.size()) return;
        results[i] = process_line(lines[i], opt);
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(jobs, static_cast<int>(lines.size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BatchSummary summary;
  summary.lines = static_cast<long long>(lines.size());
  for (const auto& r : results) {
    lines_out << r.json << '\n';
    summary.processed += r.processed;
    summary.skipped += !r.processed && !r.construction_error;
    summary.parse_errors += r.parse_error;
    summary.bound_violations += r.bound_violation;
    summary.repairs += r.repair;
    summary.construction_errors += r.construction_error;
    summary.tight += r.tight;
  }
  return summary;
}

}  // namespace locdim
