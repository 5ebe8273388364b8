#pragma once

// Batch verification: every identity the library relies on, swept over all
// admissible parameters up to a rank bound, as named pass/fail checks.

#include <string>
#include <vector>

namespace schubert {

struct CheckResult
{
  std::string id;     // suite the check belongs to
  std::string params; // e.g. "A3,d=2" or "n=6,r=2"
  bool pass = false;
  std::string detail; // what was checked, or the first failure
  double elapsed_ms = 0;
};

struct VerificationReport
{
  std::string suite;
  int max_rank = 5;
  bool include_e7 = false;
  // Grouped by suite in suite_names() order, parameters in sweep order.
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool pass() const { return failed() == 0; }
};

// wsontheta, form-inv, iota-conj, result-q, vinwsd, sb-equiv,
// involution-bij, main-result, nilp, detvar-relations, intersectw,
// fibre-det, and "all".
const std::vector<std::string>& suite_names();

// Cominuscule suites cover every pair of rank <= max_rank (E7 only with
// include_e7); the type D suites cover 4 <= n <= max_rank. Throws
// std::invalid_argument for an unknown suite or max_rank < 1.
VerificationReport verify_suite(const std::string& suite, int max_rank, bool include_e7);

} // namespace schubert
