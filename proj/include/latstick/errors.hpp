#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latstick {

enum class ErrorCode {
  UnknownBindingPoint,
  UnlabeledEndpoint,
  NoValidRoot,
  InvalidSpec,
  InvalidCounts,
  AssemblyCollision,
  NoFreeDirection,
  MergeCollision,
  ReconstructionMismatch,
  BoundViolated,
  NotACycle,
  TooLarge,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A single finding of a report-style check. `code` is a stable short key,
// `message` is for humans.
struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view code) const {
    for (const auto& v : violations) {
      if (v.code == code) return true;
    }
    return false;
  }
  void add(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace latstick
