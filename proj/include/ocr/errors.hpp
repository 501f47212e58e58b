#pragma once

#include <stdexcept>
#include <string>

namespace ocr {

// Everything the pipeline can reject is funneled through one exception type
// with a machine-checkable kind. The CLI maps any Error to exit code 2.
enum class ErrorKind {
    BadMagic,
    TruncatedData,
    MaxvalUnsupported,
    EmptyImage,
    EmptyBand,
    ParseError,
    CoverageError,
    AmbiguityError,
    UnknownCode,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::BadMagic: return "BadMagic";
        case ErrorKind::TruncatedData: return "TruncatedData";
        case ErrorKind::MaxvalUnsupported: return "MaxvalUnsupported";
        case ErrorKind::EmptyImage: return "EmptyImage";
        case ErrorKind::EmptyBand: return "EmptyBand";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::CoverageError: return "CoverageError";
        case ErrorKind::AmbiguityError: return "AmbiguityError";
        case ErrorKind::UnknownCode: return "UnknownCode";
        case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

} // namespace ocr
