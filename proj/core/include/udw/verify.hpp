#ifndef UDW_VERIFY_HPP
#define UDW_VERIFY_HPP

#include <string>
#include <vector>

namespace udw {

/// One named invariant check. "flagged" is reserved for documented
/// source-material discrepancies: the audit reproduces them with their
/// residuals instead of failing, unless strict mode promotes them.
struct VerifyCheck {
  enum class Status { Pass, Fail, Flagged };
  std::string name;
  Status status = Status::Pass;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerifyReport {
  bool strict_paper = false;
  std::vector<VerifyCheck> checks;

  int count(VerifyCheck::Status s) const;
  /// 0 when no check failed, 1 otherwise.
  int exit_code() const;
};

/// Runs the full invariant suite (deterministic order and content).
/// strict_paper promotes flagged discrepancies to failures.
VerifyReport run_verify(bool strict_paper = false);

std::string to_string(VerifyCheck::Status status);
std::string to_json(const VerifyReport& report);

}  // namespace udw

#endif
