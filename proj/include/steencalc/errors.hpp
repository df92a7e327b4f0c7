#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steencalc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (zero where a unit is
/// required, constant term not 1, weight 0 where it must be inverted, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed user input: expression syntax, unknown names, bad files.
class InputError : public Error {
public:
    InputError(const std::string& what, std::size_t position = npos)
        : Error(position == npos ? what : what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Two operands live in different rings / fields.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// The operation is not implemented for this kind of input.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A structure failed validation at construction (non-associative algebra,
/// ill-formed morphism, inconsistent seeds, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

namespace detail {

[[noreturn]] inline void internal_failure(const std::string& what) {
    throw std::logic_error("steencalc internal error: " + what);
}

}  // namespace detail

}  // namespace steencalc
