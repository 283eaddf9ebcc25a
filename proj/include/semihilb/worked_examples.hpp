#pragma once

#include <string>
#include <vector>

#include "semihilb/inequalities.hpp"

namespace semihilb {

/// One printed quantity of a worked example next to its recomputation.
struct AuditRow {
  std::string example;
  std::string quantity;
  std::string printed_value;
  std::string computed_value;
  bool agrees = false;
};

/// Recomputes the three worked examples (diagonal weight, rank-one weight
/// A = J, and the two-component control example) from first principles.
std::vector<AuditRow> worked_example_audit();

std::string format_matrix(const CMatrix& m);
std::string format_number(double v);

}  // namespace semihilb
