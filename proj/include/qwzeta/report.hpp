#pragma once

#include <string>
#include <vector>

namespace qwz {

struct Mismatch {
  int row = 0;
  int col = 0;
  std::string lhs;
  std::string rhs;
};

// Outcome of one theorem check. Checks never refuse to run: precondition
// status and identity outcome are recorded independently.
struct VerificationReport {
  std::string theorem_id;
  bool preconditions_met = false;
  std::string precondition_detail;
  bool identity_holds = false;
  std::vector<Mismatch> mismatches;
  std::string notes;
};

}  // namespace qwz
