#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace riskframe {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a formula (e.g. n_rc = 0 where
/// a damaged-frame strength is requested).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure could not produce a usable result.
class NumericalError : public Error {
public:
    using Error::Error;
};

struct Violation {
    std::string field;
    std::string message;
};

/// One or more scenario invariants failed. Carries the full list.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

}  // namespace riskframe
