// errors.hpp: exception hierarchy

#pragma once

#include <stdexcept>
#include <string>

namespace cqed {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InvalidDimension : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Errors raised by a numerical solve; the CLI maps these to exit code 3.
class SolverError : public Error {
public:
    using Error::Error;
};

class SingularResolvent : public SolverError {
public:
    SingularResolvent(int rung, const std::string& what)
        : SolverError(what), rung_(rung) {}
    int rung() const noexcept { return rung_; }

private:
    int rung_;
};

class DegenerateSteadyState : public SolverError {
public:
    using SolverError::SolverError;
};

class IntegrationError : public SolverError {
public:
    using SolverError::SolverError;
};

class NoSplitting : public SolverError {
public:
    using SolverError::SolverError;
};

class FitError : public SolverError {
public:
    using SolverError::SolverError;
};

// Bad configuration input; the CLI maps these to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace cqed
