#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sctt {

// Half-open byte range [start, end) into a source buffer.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool contains(const Span& other) const { return start <= other.start && other.end <= end; }
  static Span join(const Span& a, const Span& b) {
    return {a.start < b.start ? a.start : b.start, a.end > b.end ? a.end : b.end};
  }
  friend bool operator==(const Span&, const Span&) = default;
};

// Stable error taxonomy. The numeric values are part of the CLI contract.
enum class ErrorCode {
  LexError = 1,
  ParseError = 2,
  UnboundName = 3,
  NotInferable = 4,
  TypeMismatch = 5,
  ReflMismatch = 6,
  TopeUnsatisfied = 7,
  ExtensionBoundaryMismatch = 8,
  DuplicateDeclaration = 9,
  ContextTooLarge = 10,
  LayerMismatch = 11,
};

// "E001" .. "E011"
std::string code_string(ErrorCode code);
std::string_view code_name(ErrorCode code);

enum class Severity { Error, Warning, Info };
std::string_view severity_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  ErrorCode code = ErrorCode::TypeMismatch;
  std::string message;
  std::string file;
  Span span;
  // Refuting weak order, rendered, for TopeUnsatisfied.
  std::optional<std::string> counter_model;
};

// Every failure inside the checker pipeline is reported by throwing this.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message, Span span, std::optional<std::string> counter_model = std::nullopt)
      : std::runtime_error(message), code_(code), span_(span), counter_model_(std::move(counter_model)) {}

  ErrorCode code() const { return code_; }
  const Span& span() const { return span_; }
  const std::optional<std::string>& counter_model() const { return counter_model_; }

  Diagnostic to_diagnostic(const std::string& file) const {
    return Diagnostic{Severity::Error, code_, what(), file, span_, counter_model_};
  }

private:
  ErrorCode code_;
  Span span_;
  std::optional<std::string> counter_model_;
};

}  // namespace sctt
