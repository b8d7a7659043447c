#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "iontrap/filter.hpp"
#include "iontrap/potential.hpp"
#include "iontrap/profile.hpp"

namespace iontrap::waveform {

using potential::Voltages;

// Sampled per-electrode voltage time series.  duration = (len-1) * sample_period.
struct VoltageProgram {
    double sample_period = 0.0;
    std::vector<Voltages> samples;

    struct Meta {
        std::string purpose;
        double nu_target = 0.0;
        double start = 0.0, end = 0.0;      // requested well endpoints
        std::vector<std::uint8_t> clamped;  // per-sample: curvature target not met
        std::vector<std::string> notes;
    } meta;

    double duration() const {
        return samples.empty() ? 0.0
                               : sample_period * static_cast<double>(samples.size() - 1);
    }
    std::size_t size() const { return samples.size(); }

    // Cubic (Catmull-Rom) interpolation between samples; constant past the end.
    Voltages at(double t) const;

    VoltageProgram reversed() const;
    // Appends `other` assuming its first sample equals this program's last.
    void append(const VoltageProgram& other);
    void append_hold(double hold_duration);
};

// CSV with header t_s,V1,V2,V3,V4,V5; 9 significant digits, bit-stable on
// a write/read/write round trip.
void write_program_csv(const VoltageProgram& program, const std::string& path);
VoltageProgram read_program_csv(const std::string& path);

// Rounds every sample to the nearest multiple of `step` (DAC quantization).
VoltageProgram quantize(const VoltageProgram& program, double step = 10e-3);

struct SynthesisOptions {
    double rail_lo = 0.0, rail_hi = 10.0;
    // When the curvature target is infeasible within the rails, hold the
    // position exactly and emit the closest achievable curvature instead of
    // failing.  Strict mode (false) throws SynthesisError.
    bool clamp_curvature = true;
    double far_barrier = 8.0;            // passive outer-barrier voltage
    double crossfade_halfwidth = 100e-6; // active-pair blend window
    int verify_stride = 10;
    double position_tol = 1e-7;          // verification tolerance, m
    double nu_tol = 0.01;                // relative, at unclamped samples
};

// Per-sample two-electrode inverse solve along the profile: the pair
// flanking the minimum takes the (position, curvature) constraints, the
// remaining electrodes are pinned (outer barriers at far_barrier, wells at
// 0 V) with a smooth crossfade where the active pair changes.
VoltageProgram synthesize_transport(const potential::ElectrodeBasis& basis,
                                    const TrajectorySpec& spec, double sample_period,
                                    const SynthesisOptions& options = {});

struct SeparationSpec {
    double duration = 10e-3;
    double nu_start = 700e3;  // single-well COM at trap #3
    double nu_min = 90e3;     // lowest two-ion COM along the program
    double nu_end = 2.9e6;    // per-well frequency of the final double well
    double nu_min_tol = 0.01; // relative tolerance of the tuning loop
};

// Raises electrode 3 from 0 V to the double-well endpoint on a smooth
// monotone polynomial schedule while electrodes 1 and 5 carry a mid-program
// bias bump; the bump amplitude is tuned by bisection so the two-ion COM
// frequency bottoms out at nu_min.
VoltageProgram synthesize_separation(const potential::ElectrodeBasis& basis,
                                     const SeparationSpec& spec, double sample_period,
                                     const SynthesisOptions& options = {});

}  // namespace iontrap::waveform
