#include "brumer/errors.hpp"

namespace brumer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonInvolution: return "NonInvolution";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kRamifiedEmbedding: return "RamifiedEmbedding";
    case ErrorCode::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::kNotIntegral: return "NotIntegral";
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kTrivialConjugation: return "TrivialConjugation";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kEvenCharacter: return "EvenCharacter";
    case ErrorCode::kSetsOverlap: return "SetsOverlap";
    case ErrorCode::kMissingRamified: return "MissingRamified";
    case ErrorCode::kIncompleteTable: return "IncompleteTable";
    case ErrorCode::kNonEquivariantTable: return "NonEquivariantTable";
    case ErrorCode::kBadConductor: return "BadConductor";
    case ErrorCode::kAlreadyInSets: return "AlreadyInSets";
    case ErrorCode::kRamifiedShift: return "RamifiedShift";
    case ErrorCode::kNotSubgroup: return "NotSubgroup";
    case ErrorCode::kNotCocycle: return "NotCocycle";
    case ErrorCode::kNotClassModule: return "NotClassModule";
    case ErrorCode::kNonNormalSubgroup: return "NonNormalSubgroup";
    case ErrorCode::kPlaceInSorT: return "PlaceInSorT";
    case ErrorCode::kMissingDecompositionData: return "MissingDecompositionData";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInconsistentSets: return "InconsistentSets";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kMissingLValues: return "MissingLValues";
    case ErrorCode::kCharacterIdentityFails: return "CharacterIdentityFails";
    case ErrorCode::kActionMismatch: return "ActionMismatch";
    case ErrorCode::kNotQuadratic: return "NotQuadratic";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace brumer
