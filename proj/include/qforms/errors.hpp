#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Base of every domain error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact division left a remainder. Inside the library this always
/// means an integrality guarantee was violated, i.e. a bug.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// Parameters make a formula undefined (b = +-2a, beta*a - alpha*b = 0, ...).
class DegenerateParams : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A named trajectory was requested at an order of the wrong parity.
class ParityMismatch : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace qf
