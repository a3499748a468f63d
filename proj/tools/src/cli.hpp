#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrp::cli {

// Exit codes.
enum Exit : int {
  kOk = 0,
  kSomeInside = 1,
  kInput = 2,
  kSearchExhausted = 3,
  kBudget = 4,
  kAuditFailed = 5,
  kNotCovered = 6,
  kPrecision = 7,
  kGuard = 8,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrp::cli
