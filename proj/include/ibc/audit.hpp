#pragma once

#include <string>
#include <vector>

namespace ibc::audit {

// One recomputed number from the worked example, with the value claimed
// there and two independent computations of the true value.
struct AuditEntry {
  std::string id;
  std::string expression;
  std::string claimed;
  std::string oracle_a;  // library routine
  std::string oracle_b;  // naive or exhaustive reference
  std::string method;    // "<oracle_a> vs <oracle_b>"

  bool oracles_agree() const { return oracle_a == oracle_b; }
  bool claim_holds() const { return oracles_agree() && oracle_a == claimed; }
};

// Worked example at M = 257, p = 3, K = 4, t = 143/4, q1 = 12, q2 = 35.
std::vector<AuditEntry> worked_example_audit();

// Tab-separated, one entry per line, with a header line.
std::string format_audit(const std::vector<AuditEntry>& entries);

}  // namespace ibc::audit
