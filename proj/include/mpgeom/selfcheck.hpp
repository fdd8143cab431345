#pragma once

// Built-in consistency suites behind `mpgeom verify`: the general-rank
// routines checked against the written-out low-rank catalog.

#include <cstddef>
#include <string>
#include <vector>

namespace mpg {

struct CheckOutcome {
  std::string suite;
  std::size_t cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

CheckOutcome check_wigner_d_catalog();     // both D routes against the catalog
CheckOutcome check_vsh_magnitude_table();  // magnitude x unit direction
CheckOutcome check_vsh_listed();           // written-out linear and circular forms
CheckOutcome check_polarization_rows();    // helicity and Jones components
CheckOutcome check_polarization_identity();
CheckOutcome check_prefactors();           // exact rationals, error is 0 or 1

std::vector<CheckOutcome> run_self_checks();

} // namespace mpg
