#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace movable {

enum class ErrorCode {
    InvalidGeometry,
    InsufficientCover,
    ProtocolViolation,
    ImmovableObject,
    NotRotatable,
    DisabledHandle,
    DisabledPart,
    Vanished,
    DuplicateId,
    UnknownId,
    MissingMember,
    MalformedDocument,
    MalformedTrace,
};

std::string_view to_string(ErrorCode code);

/// Every engine failure is reported through this one exception type; the
/// code identifies the contract that was broken.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace movable
