#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyop {

enum class Errc {
  both_zero,
  zero_polynomial,
  endpoint_is_root,
  degree_too_low,
  sequence_exhausted,
  not_hyperbolic,
  not_squarefree,
  not_coprime,
  degree_gap_too_large,
  bad_parameter,
  bad_index,
  prefix_too_short,
  zero_q0,
  order_mismatch,
  corpus_not_hyperbolic,
  parse_error,
};

// Stable names; the CLI prints these verbatim.
constexpr std::string_view name(Errc e) noexcept {
  switch (e) {
    case Errc::both_zero: return "BothZero";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::endpoint_is_root: return "EndpointIsRoot";
    case Errc::degree_too_low: return "DegreeTooLow";
    case Errc::sequence_exhausted: return "SequenceExhausted";
    case Errc::not_hyperbolic: return "NotHyperbolic";
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::degree_gap_too_large: return "DegreeGapTooLarge";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::bad_index: return "BadIndex";
    case Errc::prefix_too_short: return "PrefixTooShort";
    case Errc::zero_q0: return "ZeroQ0";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::corpus_not_hyperbolic: return "CorpusNotHyperbolic";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `index()` is set when the error
/// refers to a position (corpus item, sequence entry).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace polyop
