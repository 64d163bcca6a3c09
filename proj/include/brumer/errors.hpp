#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brumer {

enum class ErrorCode {
  kNonInvolution,
  kEmptyGroup,
  kRamifiedEmbedding,
  kPrecisionExhausted,
  kNotIntegral,
  kRingMismatch,
  kTrivialConjugation,
  kNotDivisible,
  kEvenCharacter,
  kSetsOverlap,
  kMissingRamified,
  kIncompleteTable,
  kNonEquivariantTable,
  kBadConductor,
  kAlreadyInSets,
  kRamifiedShift,
  kNotSubgroup,
  kNotCocycle,
  kNotClassModule,
  kNonNormalSubgroup,
  kPlaceInSorT,
  kMissingDecompositionData,
  kSchemaError,
  kInconsistentSets,
  kUnknownElement,
  kMissingLValues,
  kCharacterIdentityFails,
  kActionMismatch,
  kNotQuadratic,
  kSizeMismatch,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace brumer
