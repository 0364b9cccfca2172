#include "greenaug/error.hpp"

namespace greenaug {

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kUsage: return "usage";
    case ErrorCategory::kParse: return "parse";
    case ErrorCategory::kSchema: return "schema";
    case ErrorCategory::kIntegrity: return "integrity";
    case ErrorCategory::kDomain: return "domain";
    case ErrorCategory::kConfig: return "config";
    case ErrorCategory::kIo: return "io";
    case ErrorCategory::kNumeric: return "numeric";
    case ErrorCategory::kTransport: return "transport";
    case ErrorCategory::kCacheMiss: return "cache-miss";
    case ErrorCategory::kGeneration: return "generation";
  }
  return "unknown";
}

int exit_code_for(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kUsage:
      return 2;
    case ErrorCategory::kTransport:
    case ErrorCategory::kCacheMiss:
    case ErrorCategory::kGeneration:
      return 4;
    default:
      return 3;
  }
}

void fail(ErrorCategory category, const std::string& message) {
  throw Error(category, message);
}

}  // namespace greenaug
