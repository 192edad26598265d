#include "nic/error.hpp"

namespace nic {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NonSphericalEmbedding: return "NonSphericalEmbedding";
        case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
        case ErrorCode::NonPlanar: return "NonPlanar";
        case ErrorCode::NotMaximalEmbedding: return "NotMaximalEmbedding";
        case ErrorCode::NoKiteNode: return "NoKiteNode";
        case ErrorCode::LevelExceedsTwo: return "LevelExceedsTwo";
        case ErrorCode::AccountingViolation: return "AccountingViolation";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
    }
    return "Unknown";
}

static std::string decorate(ErrorCode code, const std::string& message, long offset) {
    std::string s = to_string(code);
    if (offset >= 0) s += " at byte " + std::to_string(offset);
    if (!message.empty()) s += ": " + message;
    return s;
}

Error::Error(ErrorCode code, const std::string& message, long offset)
    : std::runtime_error(decorate(code, message, offset)), code_(code), offset_(offset) {}

}  // namespace nic
