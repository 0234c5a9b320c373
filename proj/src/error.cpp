#include "widgetforge/error.hpp"

namespace wf {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::Unrepairable: return "Unrepairable";
    case ErrorCode::UnknownTemplate: return "UnknownTemplate";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::DegenerateViewport: return "DegenerateViewport";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::UndecodableImage: return "UndecodableImage";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::AllTransparent: return "AllTransparent";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyIndex: return "EmptyIndex";
    case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

Error::Error(ErrorCode code, std::string message, std::string path)
    : std::runtime_error(path.empty() ? std::string(error_code_name(code)) + ": " + message
                                      : std::string(error_code_name(code)) + " at " + path + ": " + message)
    , code_(code)
    , path_(std::move(path))
{
}

} // namespace wf
