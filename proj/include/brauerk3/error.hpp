#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauerk3 {

/// Failure categories reported by the library. The CLI maps every one of
/// these to exit code 1.
enum class ErrorKind {
    ZeroCoefficient,
    ZeroInput,
    CubeCase,
    NotCoprimeToThree,
    NotPrime,
    NotCoprime,
    NotUnit,
    BadResidueNorm,
    BadReduction,
    NotFound,
    NotImaginary,
    ZeroIsogeny,
    NotOrderThree,
    DepthExceeded,
    PrecisionTooLow,
    ZeroD,
    OutOfRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace brauerk3
