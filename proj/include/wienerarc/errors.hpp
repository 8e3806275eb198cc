#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wienerarc {

// Invalid input: malformed measure text, non-normalized weights, parameters
// out of range. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failure carrying the byte offset of the offending token.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t offset, const std::string& message)
        : ValidationError(message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A fast path was requested whose hypothesis the measure does not certify,
// e.g. the continuous-measure shortcut on a measure with atoms. Exit code 3.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A reconstructed quantity is too small relative to its stability
// diagnostic to carry usable signal. Exit code 4.
class DegenerateSignalError : public std::runtime_error {
public:
    DegenerateSignalError(const std::string& message, double radius)
        : std::runtime_error(message), radius_(radius) {}

    double radius() const noexcept { return radius_; }

private:
    double radius_;
};

}  // namespace wienerarc
