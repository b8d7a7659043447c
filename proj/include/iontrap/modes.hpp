#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iontrap/potential.hpp"

namespace iontrap::dynamics {

enum class ModeLabel { Single, Com, Stretch };

std::string to_string(ModeLabel label);

struct ModeSpectrum {
    std::vector<double> positions;  // equilibrium positions, ascending, m
    std::vector<double> freqs;      // mode frequencies, ascending, Hz
    std::vector<ModeLabel> labels;  // aligned with freqs
};

// Axial potential sampled with value/derivatives in volts: fills
// (Phi, dPhi/dz, d2Phi/dz2).
using AxialPotentialFn = std::function<void(double z, double& u, double& du, double& d2u)>;

AxialPotentialFn basis_potential(const potential::ElectrodeBasis& basis,
                                 const potential::Voltages& v);

// Pure harmonic well with center z0 and single-ion secular frequency nu.
AxialPotentialFn harmonic_potential(double nu, double z0,
                                    const PhysicalConstants& constants);

// Two equal ions in the given axial potential: equilibria from Newton
// iteration, mode frequencies from the 2x2 Hessian including the Coulomb
// terms.  `guess` seeds the Newton solve (continuation along a program).
ModeSpectrum two_ion_equilibrium(const AxialPotentialFn& pot,
                                 const PhysicalConstants& constants,
                                 double z1_guess, double z2_guess);

ModeSpectrum two_ion_equilibrium(const potential::ElectrodeBasis& basis,
                                 const potential::Voltages& v);

// Single-ion spectrum: one entry per potential well.
ModeSpectrum single_ion_modes(const potential::ElectrodeBasis& basis,
                              const potential::Voltages& v);

// Closed-form separation of two ions in a harmonic well at COM frequency nu:
// s^3 = e^2 / (2 pi eps0 m omega^2).
double harmonic_two_ion_separation(double nu, const PhysicalConstants& constants);

}  // namespace iontrap::dynamics
