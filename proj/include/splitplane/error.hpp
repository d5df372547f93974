#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitplane {

enum class ErrorKind {
  ZeroDivisor,
  NotRepresentable,
  Domain,
  Branch,
  Pole,
  Overflow,
  Cone,
  Degenerate,
  OpenContour,
  MixedSector,
  BrokenConformality,
  Syntax,
  UnknownFunction,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Branch: return "BranchError";
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Cone: return "ConeError";
    case ErrorKind::Degenerate: return "DegenerateError";
    case ErrorKind::OpenContour: return "OpenContour";
    case ErrorKind::MixedSector: return "MixedSectorError";
    case ErrorKind::BrokenConformality: return "BrokenConformality";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
  }
  return "Error";
}

// All library failures are reported through this type; `kind()` is the
// machine-readable tag, `what()` carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorKind::Syntax, message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace splitplane
