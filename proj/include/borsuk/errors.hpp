#ifndef BORSUK_ERRORS_HPP
#define BORSUK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace borsuk {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Raised by the expression and group-literal parsers. Carries the byte
/// offset of the offending token and the set of tokens that would have
/// been accepted there.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position,
               std::vector<std::string> expected)
        : Error(message), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

/// A space descriptor violates a semantic constraint (gcd(p,q) != 1,
/// non-orientable genus 0, product of non-spheres, ...).
class InvalidDescriptor : public Error {
public:
    using Error::Error;
};

/// The descriptor family has no homology table in this library.
class UnsupportedHomology : public Error {
public:
    using Error::Error;
};

/// The capacity of the family is known only as a count, so the dominated
/// list cannot be materialized.
class EnumerationUnavailable : public Error {
public:
    using Error::Error;
};

/// An explicit finite group exceeds the configured order bound.
class OrderTooLarge : public Error {
public:
    using Error::Error;
};

/// A graded-group input is truncated below the degree a computation needs.
class TruncationTooLow : public Error {
public:
    using Error::Error;
};

}  // namespace borsuk

#endif  // BORSUK_ERRORS_HPP
