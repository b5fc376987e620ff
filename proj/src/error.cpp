#include "error.hpp"

namespace indturan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DegenerateRoot: return "DegenerateRoot";
    case ErrorCode::Multigraph: return "Multigraph";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::EmptyBlowup: return "EmptyBlowup";
    case ErrorCode::NotQualified: return "NotQualified";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoPartition: return "NoPartition";
    case ErrorCode::NotKssFree: return "NotKssFree";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::BadBlowup: return "BadBlowup";
    case ErrorCode::NotSemiInduced: return "NotSemiInduced";
  }
  return "Unknown";
}

}  // namespace indturan
