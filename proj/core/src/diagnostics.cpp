#include "sctt/diagnostics.hpp"

#include <cstdio>

namespace sctt {

std::string code_string(ErrorCode code) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "E%03d", static_cast<int>(code));
  return buf;
}

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnboundName: return "UnboundName";
    case ErrorCode::NotInferable: return "NotInferable";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::ReflMismatch: return "ReflMismatch";
    case ErrorCode::TopeUnsatisfied: return "TopeUnsatisfied";
    case ErrorCode::ExtensionBoundaryMismatch: return "ExtensionBoundaryMismatch";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::ContextTooLarge: return "ContextTooLarge";
    case ErrorCode::LayerMismatch: return "LayerMismatch";
  }
  return "Unknown";
}

std::string_view severity_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

}  // namespace sctt
