#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace greenaug {

enum class ErrorCategory {
  kUsage,
  kParse,
  kSchema,
  kIntegrity,
  kDomain,
  kConfig,
  kIo,
  kNumeric,
  kTransport,
  kCacheMiss,
  kGeneration,
};

std::string_view category_name(ErrorCategory category);

// Process exit code for a failure of the given category (2 usage, 3 validation, 4 backend).
int exit_code_for(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Transport failures carry whether another attempt may succeed.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, bool retryable)
      : Error(ErrorCategory::kTransport, message), retryable_(retryable) {}

  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

[[noreturn]] void fail(ErrorCategory category, const std::string& message);

}  // namespace greenaug
