#pragma once

#include <string>
#include <vector>

#include "ellmean/approx.hpp"

namespace ellmean::checks {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;   // empty when passing and nothing to report
  bool fatal = true;    // non-fatal checks report but do not affect exit status
};

struct CheckParams {
  int scan_grid = 2000;   // monotonicity / extrema grids
  int chain_grid = 999;   // inequality-chain grid
  int table_grid = 5000;  // closed [0,1] grid for the table maxima
  int ledger_n = 60;      // exact-ledger depth
  int oracle_grid = 100;  // series/AGM/quadrature agreement grid

  static CheckParams fast() { return {200, 199, 500, 20, 25}; }
  static CheckParams full() { return {2000, 999, 5000, 60, 100}; }
};

/// Every named check, in a stable order.  The names form a superset of the
/// acceptance-criteria identifiers (see tests/acceptance.cpp).
std::vector<CheckResult> run_all(const CheckParams& params,
                                 const LeadingOrderCatalog& catalog = default_catalog());

/// The checks backing one acceptance criterion (1..10).
std::vector<CheckResult> run_criterion(int criterion, const CheckParams& params,
                                       const LeadingOrderCatalog& catalog = default_catalog());

}  // namespace ellmean::checks
