#pragma once

namespace iontrap {

// SI constants (CODATA 2018) plus the atomic parameters of the 9Be+ qubit.
struct PhysicalConstants {
    double ion_mass = 9.0121831 * 1.66053906660e-27;  // kg, 9Be (electron-mass deficit negligible)
    double charge = 1.602176634e-19;                   // C
    double hbar = 1.054571817e-34;                     // J s
    double h = 6.62607015e-34;                         // J s
    double k_boltzmann = 1.380649e-23;                 // J/K
    double coulomb = 8.9875517923e9;                   // 1/(4 pi eps0), N m^2/C^2
    double hyperfine_hz = 1.25e9;                      // qubit splitting omega0/2pi
    double raman_wavelength = 313e-9;                  // m

    static PhysicalConstants be9() { return PhysicalConstants{}; }
};

}  // namespace iontrap
