#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbamnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };
struct GraphError : Error { using Error::Error; };
struct InvalidLabel : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };
struct EmptyClass : Error { using Error::Error; };
struct NoTrainableParameters : Error { using Error::Error; };
struct DegenerateFold : Error { using Error::Error; };

// Corrupt or truncated file; carries the byte offset where decoding failed.
struct FormatError : Error {
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
    std::size_t byte_offset;
};

}  // namespace cbamnet
