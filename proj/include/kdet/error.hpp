#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdet {

enum class ErrorCode {
  MalformedLine,
  BadEdgeMultiplicity,
  Disconnected,
  EmptyDiagram,
  InconsistentOrientation,
  NonPlanarEmbedding,
  NotBipartiteFaces,
  OuterNotWhite,
  MultiComponent,
  NotAlternating,
  SignMixture,
  NotEulerian,
  TooLarge,
  DegenerateSimplex,
  NonUnimodularChart,
  ClockTheoremViolation,
  ArithmeticOverflow,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI and the certificate can name the violated condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kdet
