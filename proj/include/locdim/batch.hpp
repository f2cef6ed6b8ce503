#pragma once

#include <iosfwd>
#include <string>

#include "locdim/constructor.hpp"
#include "locdim/oracle.hpp"

namespace locdim {

struct BatchOptions {
  int jobs = 1;
  int exact_cap = 16;
  bool strict = false;
  PackingBudget budget{};
};

struct BatchSummary {
  long long lines = 0;
  long long processed = 0;
  long long skipped = 0;       // out-of-contract graphs, reported with reason
  long long parse_errors = 0;  // unreadable lines, also counted in skipped
  long long bound_violations = 0;
  long long repairs = 0;
  long long construction_errors = 0;
  long long tight = 0;  // dim_l known and equal to floor(n/2)

  bool clean() const {
    return bound_violations == 0 && repairs == 0 && construction_errors == 0;
  }
  std::string to_json() const;
};

// Reads graph6 lines from `in`, emits one JSON line per input line to
// `lines_out` in input order (regardless of the worker count), and returns
// the aggregate summary. Output is byte-deterministic.
BatchSummary run_batch(std::istream& in, std::ostream& lines_out,
                       const BatchOptions& opt = {});

}  // namespace locdim
