#include "hyperreg/error.hpp"

namespace hyperreg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::AntichainViolation: return "AntichainViolation";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotSemiInduced: return "NotSemiInduced";
    case ErrorCode::InvalidBouquet: return "InvalidBouquet";
    case ErrorCode::NotOptimalWitness: return "NotOptimalWitness";
    case ErrorCode::NotSemiStronglyDisjoint: return "NotSemiStronglyDisjoint";
    case ErrorCode::FlowersNotCover: return "FlowersNotCover";
    case ErrorCode::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::UnknownFilter: return "UnknownFilter";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace hyperreg
