#pragma once

#include <functional>
#include <string>

namespace iontrap::waveform {

enum class ProfileKind { Sin2, SmoothPolynomial };

// One-way transport request: move the well from start to end over T while
// holding the target secular frequency.
struct TrajectorySpec {
    double start = 0.0;          // m
    double end = 0.0;            // m
    double duration = 0.0;       // s
    ProfileKind kind = ProfileKind::Sin2;
    double nu_target = 2.9e6;    // Hz

    void validate() const;
};

// Position/velocity/acceleration of a trajectory profile; the extra factory
// functions below cover the oracle profiles used by the harmonic-gain checks.
struct Profile {
    std::function<double(double)> pos;
    std::function<double(double)> vel;
    std::function<double(double)> acc;
    double duration = 0.0;
};

// sin^2(pi t / 2T) profile (the transport waveform of the experiment).
double transport_profile(const TrajectorySpec& spec, double t);

// Quintic with zero velocity and acceleration at both endpoints.
double smooth_polynomial_profile(const TrajectorySpec& spec, double t);

Profile make_profile(const TrajectorySpec& spec);

Profile constant_profile(double z0, double duration);
Profile linear_profile(double start, double end, double duration);
Profile cubic_profile(double start, double end, double duration);   // smoothstep3
Profile sin2_profile(double start, double end, double duration);
Profile quintic_profile(double start, double end, double duration);

}  // namespace iontrap::waveform
