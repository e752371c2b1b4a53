#include "irregwalk/errors.hpp"

namespace irregwalk {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidWalk: return "InvalidWalk";
    case ErrorCode::EmptyWalk: return "EmptyWalk";
    case ErrorCode::NotNice: return "NotNice";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::BadGuide: return "BadGuide";
    case ErrorCode::ImproperColouring: return "ImproperColouring";
    case ErrorCode::ImproperLabelling: return "ImproperLabelling";
    case ErrorCode::NoLabellingWithinCap: return "NoLabellingWithinCap";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MethodInapplicable: return "MethodInapplicable";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

} // namespace irregwalk
