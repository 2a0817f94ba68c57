#pragma once

#include <stdexcept>
#include <string>

namespace rdmd {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters, shapes, or configuration files. CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Numerical failure: singular systems, non-convergence, divergence,
// contour collisions, inconsistent multiplicities. CLI exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

// Filesystem trouble. CLI exit code 4.
class IoError : public Error {
public:
    using Error::Error;
};

// Near-singular linear system; carries the condition estimate that
// tripped the guard.
class SingularSystemError : public NumericError {
public:
    SingularSystemError(const std::string& msg, double condition_estimate)
        : NumericError(msg), condition_estimate_(condition_estimate) {}
    double condition_estimate() const { return condition_estimate_; }

private:
    double condition_estimate_ = 0.0;
};

} // namespace rdmd
