#pragma once

#include <stdexcept>
#include <string>

namespace shiftcheck {

enum class ErrorKind {
    invalid_argument,
    parse,
    io,
    dimension_mismatch,
    not_symmetric,
    not_commuting,
    shift_enabled,
    eigenvalues_not_distinct,
    no_convergence,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace shiftcheck
