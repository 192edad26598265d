#pragma once

#include <stdexcept>
#include <string>

namespace nic {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    ParseError,
    TooSmall,
    NonSphericalEmbedding,
    InvalidEmbedding,
    NonPlanar,
    NotMaximalEmbedding,
    NoKiteNode,
    LevelExceedsTwo,
    AccountingViolation,
    PreconditionViolated,
    KTooSmall,
    InvalidParameters,
    LimitExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, long offset = -1);

    ErrorCode code() const { return code_; }
    // Byte offset for parse errors, -1 otherwise.
    long offset() const { return offset_; }

private:
    ErrorCode code_;
    long offset_;
};

}  // namespace nic
