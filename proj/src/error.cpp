#include "domlab/error.hpp"

namespace domlab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::HeaderMismatch: return "HeaderMismatch";
        case ErrorCode::PartitionMismatch: return "PartitionMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::TimedOut: return "TimedOut";
        case ErrorCode::NotMonotone: return "NotMonotone";
        case ErrorCode::ContiguousSet: return "ContiguousSet";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::TwoColorable: return "TwoColorable";
        case ErrorCode::EmptyDecoration: return "EmptyDecoration";
        case ErrorCode::OddLength: return "OddLength";
        case ErrorCode::SharedVariables: return "SharedVariables";
        case ErrorCode::PadFailure: return "PadFailure";
        case ErrorCode::NegativeLiteral: return "NegativeLiteral";
        case ErrorCode::NotAnImage: return "NotAnImage";
        case ErrorCode::OddZ: return "OddZ";
    }
    return "Unknown";
}

}  // namespace domlab
