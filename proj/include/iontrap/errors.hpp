#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace iontrap {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments, malformed configs, step-size violations.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Physically meaningless request (no minimum, r >= 1, non-PD Hessian, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct CalibrationError : Error {
    std::vector<double> residuals;  // per-anchor relative residuals
    CalibrationError(const std::string& msg, std::vector<double> res)
        : Error(msg), residuals(std::move(res)) {}
};

struct SynthesisError : Error {
    double time = 0.0;       // program time of the failure
    double position = 0.0;   // requested minimum position
    double curvature = 0.0;  // requested curvature
    SynthesisError(const std::string& msg, double t, double z, double c)
        : Error(msg), time(t), position(z), curvature(c) {}
    explicit SynthesisError(const std::string& msg) : Error(msg) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

struct FitError : Error {
    explicit FitError(const std::string& msg) : Error(msg) {}
};

// Ion left the trap region during integration.
struct EscapeError : Error {
    double time;
    EscapeError(const std::string& msg, double t) : Error(msg), time(t) {}
};

}  // namespace iontrap
