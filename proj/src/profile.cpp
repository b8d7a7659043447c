#include "iontrap/profile.hpp"

#include <cmath>

#include "iontrap/errors.hpp"
#include "iontrap/numeric.hpp"

namespace iontrap::waveform {

void TrajectorySpec::validate() const {
    if (!(duration > 0.0)) throw InputError("trajectory spec: duration must be positive");
    if (!std::isfinite(start) || !std::isfinite(end))
        throw InputError("trajectory spec: non-finite endpoints");
}

namespace {

void check_time(const TrajectorySpec& spec, double t) {
    spec.validate();
    if (t < 0.0 || t > spec.duration)
        throw InputError("profile: t outside [0, T]");
}

}  // namespace

double transport_profile(const TrajectorySpec& spec, double t) {
    check_time(spec, t);
    const double s = std::sin(num::pi * t / (2.0 * spec.duration));
    return spec.start + (spec.end - spec.start) * s * s;
}

double smooth_polynomial_profile(const TrajectorySpec& spec, double t) {
    check_time(spec, t);
    return spec.start + (spec.end - spec.start) * num::smoothstep5(t / spec.duration);
}

Profile sin2_profile(double start, double end, double T) {
    const double d = end - start;
    return {
        [=](double t) {
            const double s = std::sin(num::pi * t / (2.0 * T));
            return start + d * s * s;
        },
        [=](double t) { return d * num::pi / (2.0 * T) * std::sin(num::pi * t / T); },
        [=](double t) {
            return d * num::pi * num::pi / (2.0 * T * T) * std::cos(num::pi * t / T);
        },
        T};
}

Profile quintic_profile(double start, double end, double T) {
    const double d = end - start;
    return {[=](double t) { return start + d * num::smoothstep5(t / T); },
            [=](double t) { return d / T * num::smoothstep5_deriv(t / T); },
            [=](double t) { return d / (T * T) * num::smoothstep5_deriv2(t / T); },
            T};
}

Profile constant_profile(double z0, double T) {
    return {[=](double) { return z0; }, [](double) { return 0.0; },
            [](double) { return 0.0; }, T};
}

Profile linear_profile(double start, double end, double T) {
    const double v = (end - start) / T;
    return {[=](double t) { return start + v * t; }, [=](double) { return v; },
            [](double) { return 0.0; }, T};
}

Profile cubic_profile(double start, double end, double T) {
    const double d = end - start;
    return {[=](double t) {
                const double u = t / T;
                return start + d * u * u * (3.0 - 2.0 * u);
            },
            [=](double t) {
                const double u = t / T;
                return d / T * 6.0 * u * (1.0 - u);
            },
            [=](double t) {
                const double u = t / T;
                return d / (T * T) * (6.0 - 12.0 * u);
            },
            T};
}

Profile make_profile(const TrajectorySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case ProfileKind::Sin2:
            return sin2_profile(spec.start, spec.end, spec.duration);
        case ProfileKind::SmoothPolynomial:
            return quintic_profile(spec.start, spec.end, spec.duration);
    }
    throw InputError("profile: unknown kind");
}

}  // namespace iontrap::waveform
