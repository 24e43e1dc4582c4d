#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domlab {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    EndpointOutOfRange,
    VertexOutOfRange,
    EmptyGraph,
    ParseError,
    HeaderMismatch,
    PartitionMismatch,
    InvalidArgument,
    TooLarge,
    TimedOut,
    NotMonotone,
    ContiguousSet,
    IsolatedVertex,
    TwoColorable,
    EmptyDecoration,
    OddLength,
    SharedVariables,
    PadFailure,
    NegativeLiteral,
    NotAnImage,
    OddZ,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace domlab
