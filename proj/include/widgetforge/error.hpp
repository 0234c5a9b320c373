#pragma once

#include <stdexcept>
#include <string>

namespace wf {

enum class ErrorCode {
    SyntaxError,
    SchemaError,
    UnknownComponent,
    Unrepairable,
    UnknownTemplate,
    BadParameter,
    DegenerateViewport,
    NoConvergence,
    UnsupportedKind,
    EmptyData,
    UndecodableImage,
    EmptySupport,
    AllTransparent,
    DimensionMismatch,
    DuplicateId,
    EmptyIndex,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string path = {});

    ErrorCode code() const { return code_; }
    const std::string& path() const { return path_; }

private:
    ErrorCode code_;
    std::string path_;
};

} // namespace wf
