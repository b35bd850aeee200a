#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modsing {

enum class ErrorKind {
    invalid_generator,
    order_mismatch,
    non_divisor,
    out_of_bounds,
    excluded_case,
    enumeration_bound,
    unsupported_basis,
    invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_generator: return "invalid-generator";
        case ErrorKind::order_mismatch: return "order-mismatch";
        case ErrorKind::non_divisor: return "non-divisor";
        case ErrorKind::out_of_bounds: return "out-of-bounds";
        case ErrorKind::excluded_case: return "excluded-case";
        case ErrorKind::enumeration_bound: return "enumeration-bound";
        case ErrorKind::unsupported_basis: return "unsupported-basis";
        case ErrorKind::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

/// Domain error raised by every computation in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) throw Error(kind, what);
}

}  // namespace detail

}  // namespace modsing
