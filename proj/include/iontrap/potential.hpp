#pragma once

#include <array>
#include <optional>
#include <vector>

#include "iontrap/constants.hpp"
#include "iontrap/geometry.hpp"

namespace iontrap::potential {

using Voltages = std::array<double, 5>;

// Analytic surrogate for the numerically solved axial potential: each
// electrode pair contributes
//     phi_i(z) = (alpha/2) [tanh((z-a_i)/w) - tanh((z-b_i)/w)],
// the potential at the ion per volt applied to the pair.  A single electrode
// of a pair (used by the noise budget) couples at half the pair gradient.
struct ElectrodeBasis {
    TrapGeometry geometry;
    double smoothing_w = 318e-6;  // edge smoothing scale, meters
    double alpha = 0.51;          // overall efficiency, dimensionless
    PhysicalConstants constants = PhysicalConstants::be9();

    double phi(int i, double z) const;
    double dphi(int i, double z) const;    // d/dz
    double d2phi(int i, double z) const;   // d2/dz2
    double d3phi(int i, double z) const;
    double d4phi(int i, double z) const;

    // Secular frequency for a curvature d2Phi/dz2 > 0.
    double curvature_to_freq(double d2) const;
    double freq_to_curvature(double nu) const;
};

// Potential at the ion, volts.  Linear in the voltage vector.
double axial_potential(const ElectrodeBasis& basis, const Voltages& v, double z);

// (axial electric field E = -dPhi/dz, curvature d2Phi/dz2).
std::pair<double, double> axial_field_and_curvature(const ElectrodeBasis& basis,
                                                    const Voltages& v, double z);

// Field magnitude per volt applied to ONE electrode of pair i (V/m).
double single_electrode_field(const ElectrodeBasis& basis, int i, double z);

struct Well {
    double z;          // minimum position, m
    double nu;         // secular frequency, Hz
    double curvature;  // d2Phi/dz2, V/m^2
};

// All local minima of the axial potential in the trap region, sorted by z.
// Throws DomainError when the configuration traps nothing.
std::vector<Well> find_minima(const ElectrodeBasis& basis, const Voltages& v);

// Minimum nearest to z0, or nullopt.
std::optional<Well> nearest_minimum(const ElectrodeBasis& basis, const Voltages& v,
                                    double z0, double max_distance = 400e-6);

struct Anchor {
    enum class Kind {
        Frequency,             // secular frequency of the minimum nearest `z`
        FieldMagnitude,        // |dPhi/dz| at `z` for the given pair voltages
        SingleElectrodeField,  // as above divided by 2 (one electrode of each pair)
    };
    Voltages voltages{};
    Kind kind = Kind::Frequency;
    double target = 0.0;  // Hz or V/m
    double z = 0.0;       // evaluation / search location
};

// The three measured anchors: 2.9 MHz at trap #2 for (8,0,8,0,8),
// 700 kHz at trap #3 for (8,0,0,0,8), 242 V/m per volt on one electrode #1.
std::vector<Anchor> default_anchors(const TrapGeometry& geometry);

struct CalibrationResult {
    ElectrodeBasis basis;
    std::vector<double> residuals;  // per-anchor relative residuals
    double sum_sq = 0.0;
};

struct CalibrationOptions {
    double tolerance = 0.15;      // max |relative residual| per anchor
    double alpha_lo = 0.05, alpha_hi = 1.0;
    double w_lo = 60e-6, w_hi = 560e-6;
    // Optional seed point; the global grid stage makes the result
    // insensitive to it.
    std::optional<std::pair<double, double>> initial_guess;
};

// Least-squares fit of (alpha, w) to the anchors.  Throws CalibrationError
// (carrying per-anchor residuals) when any residual exceeds the tolerance.
CalibrationResult calibrate(const TrapGeometry& geometry,
                            const std::vector<Anchor>& anchors,
                            const PhysicalConstants& constants = PhysicalConstants::be9(),
                            const CalibrationOptions& options = {});

double anchor_observable(const ElectrodeBasis& basis, const Anchor& anchor);

}  // namespace iontrap::potential
