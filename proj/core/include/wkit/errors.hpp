#pragma once

#include <stdexcept>
#include <string>

namespace wkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression, flag value or argument. Reported as a usage error by the CLI.
class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

class SubstitutionCycle : public Error {
public:
    using Error::Error;
};

class NonPolynomialResult : public Error {
public:
    using Error::Error;
};

class TruncationOverflow : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class UnsupportedType : public Error {
public:
    using Error::Error;
};

class OddDegreeInput : public Error {
public:
    using Error::Error;
};

class ConventionMismatch : public Error {
public:
    using Error::Error;
};

} // namespace wkit
