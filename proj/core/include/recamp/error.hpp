#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recamp {

enum class ErrorKind {
  kUnsupportedRule,   // rule variant cannot serve the requested operation
  kMissingVector,     // explicit scoring family lacks s_m
  kBallotType,        // approval ballot where a ranking is required
  kUnknownCandidate,
  kShape,             // malformed value (instance, assignment, source problem)
  kPrecondition,
  kWrongVariant,      // solver invoked outside its declared domain
  kResource,          // enumeration budget exceeded
  kTriviality,        // scoring family is constant up to the scan cap
  kOverflow,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. The kind drives CLI exit codes:
// kResource maps to 3, everything else to 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace recamp
