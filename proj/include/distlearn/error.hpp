#pragma once

#include <stdexcept>
#include <string>

namespace distlearn {

enum class ErrorCode {
  kShapeMismatch,
  kInvalidArgument,
  kWrongMagic,
  kTruncated,
  kBadDimensions,
  kLabelOutOfRange,
  kUnknownModel,
  kBackwardBeforeForward,
  kNonFinite,
  kEmptyInput,
  kIo,
  kConfig,
  kChecksum,
  kNetwork,
};

const char* to_string(ErrorCode code);

// All library failures surface as this exception; `code()` distinguishes the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace distlearn
