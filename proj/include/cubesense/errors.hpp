#pragma once

#include <stdexcept>

namespace cubesense {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EmptySelection : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };

} // namespace cubesense
