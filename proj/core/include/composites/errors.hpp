#pragma once

#include <stdexcept>
#include <string>

namespace composites {

// Every failure mode the library reports. CLI maps any of these to exit 2.
enum class errc {
  incompatible_fields,
  unsupported_predicate,
  division_by_zero_poly,
  unsupported_factorization,
  field_mismatch,
  not_algebraic,
  not_a_member,
  is_zero_or_unit,
  small_ring_not_a_field,
  small_ring_is_a_field,
  not_in_xb,
  not_a_nonunit,
  not_purely_inseparable_pair,
  search_space_too_large,
  ring_mismatch,
  window_too_small,
  not_supported_for_proper_pair,
  quotient_not_finite,
  unit_or_zero_modulus,
  not_embedded,
  hypothesis_mismatch,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, std::string op, std::string what_arg)
      : std::runtime_error(std::string(errc_name(code)) + " in " + op + ": " + what_arg),
        code_(code),
        op_(std::move(op)) {}
  errc code() const noexcept { return code_; }
  const std::string& op() const noexcept { return op_; }

 private:
  errc code_;
  std::string op_;
};

// Parse failures carry a position so the CLI can point at the offending token.
class parse_error : public error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what_arg)
      : error(errc::parse_error, "parse_config",
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what_arg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(errc code, const std::string& op, const std::string& msg) {
  throw error(code, op, msg);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::incompatible_fields: return "IncompatibleFields";
    case errc::unsupported_predicate: return "UnsupportedPredicate";
    case errc::division_by_zero_poly: return "DivisionByZeroPoly";
    case errc::unsupported_factorization: return "UnsupportedFactorization";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_algebraic: return "NotAlgebraic";
    case errc::not_a_member: return "NotAMember";
    case errc::is_zero_or_unit: return "IsZeroOrUnit";
    case errc::small_ring_not_a_field: return "SmallRingNotAField";
    case errc::small_ring_is_a_field: return "SmallRingIsAField";
    case errc::not_in_xb: return "NotInXB";
    case errc::not_a_nonunit: return "NotANonunit";
    case errc::not_purely_inseparable_pair: return "NotPurelyInseparablePair";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::not_supported_for_proper_pair: return "NotSupportedForProperPair";
    case errc::quotient_not_finite: return "QuotientNotFinite";
    case errc::unit_or_zero_modulus: return "UnitOrZeroModulus";
    case errc::not_embedded: return "NotEmbedded";
    case errc::hypothesis_mismatch: return "HypothesisMismatch";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace composites
