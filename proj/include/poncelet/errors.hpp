#pragma once

#include <stdexcept>
#include <string>

namespace poncelet {

// Base of every error thrown by the library. All of them signal either a
// violated precondition or an internal consistency failure; none is used for
// ordinary control flow.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class NotOnConic : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// Tracing from two starts of the same conic pair produced different lengths.
class PorismViolation : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

// A computed result broke a structural guarantee, e.g. a root count.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class InsufficientOrder : public Error {
public:
    using Error::Error;
};

// The coefficient iteration cannot separate n-gons from m-gons when both
// lengths share the same iteration period and both divide p+1.
class AmbiguousIteration : public Error {
public:
    using Error::Error;
};

}  // namespace poncelet
