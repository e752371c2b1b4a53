#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irregwalk {

enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    InvalidWalk,
    EmptyWalk,
    NotNice,
    NotConnected,
    BadGuide,
    ImproperColouring,
    ImproperLabelling,
    NoLabellingWithinCap,
    OrderTooSmall,
    NotATree,
    DimensionMismatch,
    NotCubic,
    NotBipartite,
    ParseError,
    MethodInapplicable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace irregwalk
