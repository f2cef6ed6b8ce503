#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "locdim/batch.hpp"
#include "locdim/generators.hpp"
#include "locdim/graph6.hpp"

using namespace locdim;

namespace {

std::string demo_stream() {
  std::string lines;
  lines += write_graph6(friendship_graph(2)) + "\n";
  lines += write_graph6(named_graph("C6")) + "\n";
  lines += write_graph6(named_graph("K4")) + "\n";   // skipped: contains K4
  lines += "!!!\n";                                   // parse error
  lines += write_graph6(named_graph("2K2")) + "\n";  // skipped: disconnected
  lines += write_graph6(named_graph("C5")) + "\n";
  return lines;
}

std::pair<std::string, BatchSummary> run(const std::string& input,
                                         const BatchOptions& opt) {
  std::istringstream in(input);
  std::ostringstream out;
  const auto summary = run_batch(in, out, opt);
  return {out.str(), summary};
}

}  // namespace

TEST_CASE("batch handles good, skipped and broken lines") {
  const auto [lines, summary] = run(demo_stream(), {});
  CHECK(summary.lines == 6);
  CHECK(summary.processed == 3);
  CHECK(summary.skipped == 3);
  CHECK(summary.parse_errors == 1);
  CHECK(summary.bound_violations == 0);
  CHECK(summary.repairs == 0);
  CHECK(summary.tight == 2);  // friendship:2 and C5 meet the bound exactly
  CHECK(summary.clean());

  std::size_t count = 0;
  for (char c : lines) count += c == '\n';
  CHECK(count == 6);
  CHECK(lines.find("parse error") != std::string::npos);
  CHECK(lines.find("disconnected") != std::string::npos);
  CHECK(lines.find("\"dim_l\":") != std::string::npos);
  // the K4 line skips the certificate but still reports the exact value
  CHECK(lines.find("\"dim_l\":3,\"bounds\"") != std::string::npos);
  CHECK(lines.find("\"skipped\":\"contains K4\"") != std::string::npos);

  const auto json = summary.to_json();
  CHECK(json.find("\"bound_violations\":0") != std::string::npos);
}

TEST_CASE("empty input gives an empty summary") {
  const auto [lines, summary] = run("", {});
  CHECK(lines.empty());
  CHECK(summary.lines == 0);
  CHECK(summary.clean());
}

TEST_CASE("worker count never changes the bytes") {
  std::string input = demo_stream();
  for (std::uint64_t seed = 1; seed <= 30; ++seed)
    input += write_graph6(random_k4_free(9, 0.45, seed)) + "\n";

  BatchOptions one;
  BatchOptions eight;
  eight.jobs = 8;
  const auto [lines1, sum1] = run(input, one);
  const auto [lines8, sum8] = run(input, eight);
  CHECK(lines1 == lines8);
  CHECK(sum1.to_json() == sum8.to_json());

  const auto [lines1b, sum1b] = run(input, one);
  CHECK(lines1 == lines1b);
  CHECK(sum1.to_json() == sum1b.to_json());
}

TEST_CASE("exact cap controls the per-line oracle fields") {
  BatchOptions capped;
  capped.exact_cap = 5;
  const std::string input = write_graph6(named_graph("C6")) + "\n" +
                            write_graph6(named_graph("C5")) + "\n";
  const auto [lines, summary] = run(input, capped);
  std::istringstream in(lines);
  std::string c6_line, c5_line;
  std::getline(in, c6_line);
  std::getline(in, c5_line);
  CHECK(c6_line.find("\"dim_l\":") == std::string::npos);
  CHECK(c5_line.find("\"dim_l\":") != std::string::npos);
  CHECK(summary.processed == 2);
}
