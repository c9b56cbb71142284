#pragma once

#include <stdexcept>
#include <string>

namespace casigrav {

/// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// quantities
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};
class FractionalDimension : public Error {
  public:
    using Error::Error;
};

/// A domain-type invariant was violated (non-positive length, n < 1, ...).
class InvalidParameter : public Error {
  public:
    using Error::Error;
};

// stress_tensor / force
class MetricDegenerate : public Error {
  public:
    using Error::Error;
};
class StepTooLarge : public Error {
  public:
    using Error::Error;
};

// modesum
class ScheduleTooShort : public Error {
  public:
    using Error::Error;
};
class NonConvergent : public Error {
  public:
    using Error::Error;
};
class InsideHorizon : public Error {
  public:
    using Error::Error;
};

// experiment
class OutOfRange : public Error {
  public:
    using Error::Error;
};
class FrequencyOutOfCurve : public Error {
  public:
    using Error::Error;
};

// cli
class ConfigInvalid : public Error {
  public:
    using Error::Error;
};
class UnknownAxis : public Error {
  public:
    using Error::Error;
};

} // namespace casigrav
