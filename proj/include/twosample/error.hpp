#pragma once

#include <stdexcept>
#include <string>

namespace twosample {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data: unreadable file, missing cell, non-finite value.
class IngestionError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input violating the data contract (e.g. label not in {0,1}).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Bad argument value (k out of range, nonpositive bandwidth, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Covariance matrix not invertible where the method requires it.
class SingularCovariance : public Error {
public:
    using Error::Error;
};

/// Data degenerate for the requested computation (all points identical, one class only, ...).
class DegenerateData : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the given model kind (e.g. smoother weights of a forest).
class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

/// A stated validity condition does not hold (e.g. 2k >= n for the kNN sigma formula).
class ConditionViolated : public Error {
public:
    using Error::Error;
};

} // namespace twosample
