#include "brauerk3/error.hpp"

namespace brauerk3 {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::CubeCase: return "CubeCase";
    case ErrorKind::NotCoprimeToThree: return "NotCoprimeToThree";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::BadResidueNorm: return "BadResidueNorm";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotImaginary: return "NotImaginary";
    case ErrorKind::ZeroIsogeny: return "ZeroIsogeny";
    case ErrorKind::NotOrderThree: return "NotOrderThree";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::ZeroD: return "ZeroD";
    case ErrorKind::OutOfRange: return "OutOfRange";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace brauerk3
