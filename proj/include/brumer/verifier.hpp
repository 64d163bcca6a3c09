#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brumer/case_file.hpp"
#include "brumer/errors.hpp"
#include "brumer/stickelberger.hpp"

namespace brumer {

enum class Verdict { kPass, kFail, kSkipped };
std::string_view to_string(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::kSkipped;
  std::string reason;
  std::optional<ErrorCode> error;
  std::map<std::string, std::string> witnesses;  // sorted, so reports are deterministic
};

struct VerifyOptions {
  std::optional<Integer> prime;  // overrides the case file's p for the Fitting check
  std::optional<long> precision;
  long guard = kDefaultGuard;
};

struct PrecisionAudit {
  Integer prime = 0;
  long precision = 0;
  long guard = 0;
  bool exhausted = false;
};

struct Report {
  std::string case_label;
  std::vector<CheckResult> checks;
  PrecisionAudit precision;
  std::vector<std::string> unprovenanced;

  const CheckResult* find(const std::string& name) const;
  // 0 when nothing failed, 4 if precision ran out, otherwise 2.
  int exit_code() const;
  std::string to_json() const;
  std::string to_text() const;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitPrecision = 4;

// Theta_{S,T} for the case: computed from the conductor for F = Q, else from the supplied table.
// Throws MissingLValues when neither is available.
LValueTable case_l_values(const CaseFile& c);
ThetaElement case_theta(const CaseFile& c);

CheckResult check_l_values(const CaseFile& c);
CheckResult check_brumer_stark(const CaseFile& c);
CheckResult check_annihilation(const CaseFile& c);
CheckResult check_fitting_equality(const CaseFile& c, const VerifyOptions& opts = {});
CheckResult check_class_number_ratio(const CaseFile& c);

Report verify_case(const CaseFile& c, const VerifyOptions& opts = {});

}  // namespace brumer
