#pragma once

#include "pg/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pg {

// Budgets for the path-family bound checks. The quadrilateral and segment
// configurations grow with ball volume squared, so they are sampled; the
// pair/triangle scans are exhaustive up to the factor-length caps.
struct LemmaBudget {
  int d2_len = 3;                  // factor-length cap, equivalent-pair scan
  int d3_len = 2;                  // factor-length cap, product-triangle scan
  std::size_t d4_samples = 500;    // quadrilateral configurations
  std::size_t d5_samples = 500;    // geodesic-segment configurations
  std::size_t ham_samples = 1000;  // per condition (b) / (c)
  std::size_t class_cap = 64;      // representations kept per element
  std::size_t geodesic_cap = 16;   // realizations kept per product path
  std::size_t enum_budget = 200000;
  std::uint64_t seed = 1;
};

struct LemmaCheck {
  std::string name;
  int measured = 0;     // max value observed over scanned instances
  int bound = -1;       // inequality checked against; -1 = informational only
  std::string bound_expr;
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;  // fell outside the exact region
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // stored witnesses (capped)
  std::string witness;                  // attains the measured max
  std::string note;
};

struct LemmaReport {
  HConstants constants;  // as used; possibly supplied by the caller
  bool constants_overridden = false;
  LemmaCheck d1, d2, d3, d4, d5;
  LemmaCheck ham_a, ham_b, ham_c;
  int final_d = 0;          // max of the three measured condition constants
  std::string attained_by;  // conditions attaining final_d
  std::string note;
  bool ok() const;
};

// Measures the product-path bounds on every in-budget instance inside the
// exact region of the ball. `claimed` substitutes externally supplied
// constants for the measured ones (negative controls).
LemmaReport check_lemma_bounds(const Ball& b, const LemmaBudget& budget = {},
                               const HConstants* claimed = nullptr);

}  // namespace pg
