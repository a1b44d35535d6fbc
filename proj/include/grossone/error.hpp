#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grossone {

enum class ErrorKind {
  // arithmetic
  DivisionByZero,
  NotExactlyDivisible,
  NegativePowerOfSum,
  ZeroToZero,
  ExponentNotLinearInGrossone,
  NotAGrossInteger,
  InvalidArgument,
  NotAMonomial,
  CoefficientNotPerfectPower,
  BaseRootUnsupported,
  FractionalGrossPower,
  // sets
  ResidueOutOfRange,
  IndexOutOfRange,
  GrossFirstUnsupported,
  ElementAlreadyPresent,
  ElementNotPresent,
  // series
  UnitRatio,
  OddLength,
  // paradox scenarios
  TooManyNewcomers,
  NotInfinitesimalWidth,
  CountNotGrossInteger,
  UnknownParadox,
  // expression language
  LexError,
  ParseError,
  TypeError,
  UnknownBuiltin,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotExactlyDivisible: return "NotExactlyDivisible";
    case ErrorKind::NegativePowerOfSum: return "NegativePowerOfSum";
    case ErrorKind::ZeroToZero: return "ZeroToZero";
    case ErrorKind::ExponentNotLinearInGrossone: return "ExponentNotLinearInGrossone";
    case ErrorKind::NotAGrossInteger: return "NotAGrossInteger";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAMonomial: return "NotAMonomial";
    case ErrorKind::CoefficientNotPerfectPower: return "CoefficientNotPerfectPower";
    case ErrorKind::BaseRootUnsupported: return "BaseRootUnsupported";
    case ErrorKind::FractionalGrossPower: return "FractionalGrossPower";
    case ErrorKind::ResidueOutOfRange: return "ResidueOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GrossFirstUnsupported: return "GrossFirstUnsupported";
    case ErrorKind::ElementAlreadyPresent: return "ElementAlreadyPresent";
    case ErrorKind::ElementNotPresent: return "ElementNotPresent";
    case ErrorKind::UnitRatio: return "UnitRatio";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::TooManyNewcomers: return "TooManyNewcomers";
    case ErrorKind::NotInfinitesimalWidth: return "NotInfinitesimalWidth";
    case ErrorKind::CountNotGrossInteger: return "CountNotGrossInteger";
    case ErrorKind::UnknownParadox: return "UnknownParadox";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `kind()` is stable and
/// machine-checkable; the message is for humans. Lexer and parser errors
/// also carry a 0-based byte offset into the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(compose(kind, detail, offset)), kind_(kind), offset_(offset), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& detail, std::optional<std::size_t> offset) {
    std::string s(to_string(kind));
    if (offset) s += " at offset " + std::to_string(*offset);
    if (!detail.empty()) s += ": " + detail;
    return s;
  }

  ErrorKind kind_;
  std::optional<std::size_t> offset_;
  std::string detail_;
};

}  // namespace grossone
