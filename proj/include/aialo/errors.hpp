#pragma once

#include <stdexcept>
#include <string>

namespace aialo {

// Base class for every error raised by the library. The CLI maps
// ValidationError to exit code 2 and everything else to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class InfeasibleOrUnbounded : public Error {
public:
    using Error::Error;
};

class UnknownParameterOnly : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NumericalBreakdown : public Error {
public:
    using Error::Error;
};

class IterationCap : public Error {
public:
    using Error::Error;
};

class CombinatorialBlowup : public Error {
public:
    using Error::Error;
};

class NonUniqueOptimum : public Error {
public:
    using Error::Error;
};

class Degenerate : public Error {
public:
    using Error::Error;
};

class RoundCap : public Error {
public:
    using Error::Error;
};

class GeneratorExhausted : public Error {
public:
    using Error::Error;
};

[[noreturn]] void throw_validation(const std::string& what);

}  // namespace aialo
