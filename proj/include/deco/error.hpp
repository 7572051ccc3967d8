#ifndef DECO_ERROR_HPP
#define DECO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace deco {

enum class ErrorKind {
  InvalidCartanType,
  IndexOutOfRange,
  ParseError,
  WrongLength,
  NotReducedOrNotLongest,
  LimitExceeded,
  LengthMismatch,
  NoNextOccurrence,
  ClosedFormMismatch,
  BUpdateMismatch,
  UnsupportedIndex,
  NotMinuscule,
  MixedSigns,
  NotTypeA,
  VertexLimit,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCartanType: return "InvalidCartanType";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::NotReducedOrNotLongest: return "NotReducedOrNotLongest";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NoNextOccurrence: return "NoNextOccurrence";
    case ErrorKind::ClosedFormMismatch: return "ClosedFormMismatch";
    case ErrorKind::BUpdateMismatch: return "BUpdateMismatch";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::NotMinuscule: return "NotMinuscule";
    case ErrorKind::MixedSigns: return "MixedSigns";
    case ErrorKind::NotTypeA: return "NotTypeA";
    case ErrorKind::VertexLimit: return "VertexLimit";
  }
  return "Unknown";
}

}  // namespace deco

#endif
