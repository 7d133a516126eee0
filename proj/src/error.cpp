#include "kdet/error.hpp"

namespace kdet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::BadEdgeMultiplicity: return "BadEdgeMultiplicity";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::NotBipartiteFaces: return "NotBipartiteFaces";
    case ErrorCode::OuterNotWhite: return "OuterNotWhite";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::SignMixture: return "SignMixture";
    case ErrorCode::NotEulerian: return "NotEulerian";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::NonUnimodularChart: return "NonUnimodularChart";
    case ErrorCode::ClockTheoremViolation: return "ClockTheoremViolation";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

}  // namespace kdet
