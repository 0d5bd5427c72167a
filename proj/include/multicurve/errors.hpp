#pragma once

#include <stdexcept>
#include <string>

namespace multicurve {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or out-of-domain input (dates out of order, F <= 0, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Query beyond the last curve pillar.
class ExtrapolationError : public Error {
public:
    explicit ExtrapolationError(const std::string& msg) : Error(msg) {}
};

/// Schedule generation failure (non-integral number of periods, ...).
class ScheduleError : public Error {
public:
    explicit ScheduleError(const std::string& msg) : Error(msg) {}
};

/// Bad bootstrap specification (unsorted quotes, duplicate pillars, ...).
class SpecError : public Error {
public:
    explicit SpecError(const std::string& msg) : Error(msg) {}
};

/// Root-finding failure during curve construction; carries the pillar identity.
class BootstrapError : public Error {
public:
    explicit BootstrapError(const std::string& msg) : Error(msg) {}
};

/// Root-finder could not bracket or converge.
class RootFindError : public Error {
public:
    explicit RootFindError(const std::string& msg) : Error(msg) {}
};

/// Optimizer exhausted its budget without meeting the convergence contract.
class CalibrationError : public Error {
public:
    explicit CalibrationError(const std::string& msg) : Error(msg) {}
};

/// Market inputs admit no arbitrage-free solution (negative forward premium).
class ArbitrageError : public Error {
public:
    explicit ArbitrageError(const std::string& msg) : Error(msg) {}
};

/// Harness configuration problem (missing curve, mispaired surface, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// File read/write failure.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace multicurve
