#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elastica {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: wrong sizes, orders, parameters. Maps to a validation failure.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Anything the solver cannot get past numerically.
class NumericalError : public Error {
public:
    using Error::Error;
};

class DegenerateCurve : public NumericalError {
public:
    DegenerateCurve(std::size_t node, double gamma);
    std::size_t node() const { return node_; }
    double gamma() const { return gamma_; }

private:
    std::size_t node_;
    double gamma_;
};

class ZeroEnergy : public NumericalError {
public:
    explicit ZeroEnergy(double denominator);
    double denominator() const { return denominator_; }

private:
    double denominator_;
};

class EnergyIncrease : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Energy still rose after every allowed halving of dt.
class MaxRetries : public EnergyIncrease {
public:
    using EnergyIncrease::EnergyIncrease;
};

class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BoundaryViolation : public Error {
public:
    using Error::Error;
};

class GenerationFailure : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace elastica
