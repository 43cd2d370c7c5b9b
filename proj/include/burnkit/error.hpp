#pragma once

#include <stdexcept>
#include <string>

namespace burnkit {

enum class ErrorKind {
  MalformedEdge,
  NotAnEdge,
  NotDegreeTwo,
  NotATree,
  InvalidSource,
  TooLarge,
  TooMany,
  TooSmall,
  Disconnected,
  NotAHIT,
  BadParams,
  BaseScheduleIncomplete,
  LiftVerificationFailed,
  ProjectionVerificationFailed,
  PlanVerificationFailed,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Verification failures signal a broken construction, not bad input.
  bool is_internal() const {
    return kind_ == ErrorKind::LiftVerificationFailed ||
           kind_ == ErrorKind::ProjectionVerificationFailed ||
           kind_ == ErrorKind::PlanVerificationFailed;
  }

 private:
  ErrorKind kind_;
};

}  // namespace burnkit
