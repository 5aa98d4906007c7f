#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobridge {

enum class ErrorCode {
  syntax_error,
  zero_entry,
  even_length,
  degenerate_fraction,
  arithmetic_overflow,
  search_exhausted,
  not_reduced_alternating,
  torus_case,
  smoothing_disconnect,
  odd_twist,
  variant_mismatch,
  unsliceable_shape,
  invalid_strip_variant,
  even_b_required,
  trace_mismatch,
  invariant_violation,
  non_positive_volume,
  parse_error,
  duplicate_label,
  schema_error,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::zero_entry: return "ZeroEntry";
    case ErrorCode::even_length: return "EvenLength";
    case ErrorCode::degenerate_fraction: return "DegenerateFraction";
    case ErrorCode::arithmetic_overflow: return "ArithmeticOverflow";
    case ErrorCode::search_exhausted: return "SearchExhausted";
    case ErrorCode::not_reduced_alternating: return "NotReducedAlternating";
    case ErrorCode::torus_case: return "TorusCase";
    case ErrorCode::smoothing_disconnect: return "SmoothingDisconnect";
    case ErrorCode::odd_twist: return "OddTwist";
    case ErrorCode::variant_mismatch: return "VariantMismatch";
    case ErrorCode::unsliceable_shape: return "UnsliceableShape";
    case ErrorCode::invalid_strip_variant: return "InvalidStripVariant";
    case ErrorCode::even_b_required: return "EvenBRequired";
    case ErrorCode::trace_mismatch: return "TraceMismatch";
    case ErrorCode::invariant_violation: return "InvariantViolation";
    case ErrorCode::non_positive_volume: return "NonPositiveVolume";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::schema_error: return "SchemaError";
  }
  return "UnknownError";
}

// Failures of a construction hypothesis on otherwise well-formed input. The CLI
// maps these to exit status 2.
constexpr bool is_hypothesis_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::even_b_required:
    case ErrorCode::odd_twist:
    case ErrorCode::not_reduced_alternating:
    case ErrorCode::torus_case:
    case ErrorCode::search_exhausted:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace twobridge
