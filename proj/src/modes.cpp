#include "iontrap/modes.hpp"

#include <algorithm>
#include <cmath>

#include "iontrap/errors.hpp"
#include "iontrap/numeric.hpp"

namespace iontrap::dynamics {

std::string to_string(ModeLabel label) {
    switch (label) {
        case ModeLabel::Single: return "single";
        case ModeLabel::Com: return "com";
        case ModeLabel::Stretch: return "stretch";
    }
    return "?";
}

AxialPotentialFn basis_potential(const potential::ElectrodeBasis& basis,
                                 const potential::Voltages& v) {
    return [basis, v](double z, double& u, double& du, double& d2u) {
        u = du = d2u = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double vi = v[static_cast<size_t>(i)];
            u += vi * basis.phi(i, z);
            du += vi * basis.dphi(i, z);
            d2u += vi * basis.d2phi(i, z);
        }
    };
}

AxialPotentialFn harmonic_potential(double nu, double z0,
                                    const PhysicalConstants& constants) {
    const double omega = num::two_pi * nu;
    const double c2 = constants.ion_mass * omega * omega / constants.charge;  // d2Phi/dz2
    return [c2, z0](double z, double& u, double& du, double& d2u) {
        const double x = z - z0;
        u = 0.5 * c2 * x * x;
        du = c2 * x;
        d2u = c2;
    };
}

ModeSpectrum two_ion_equilibrium(const AxialPotentialFn& pot,
                                 const PhysicalConstants& constants,
                                 double z1_guess, double z2_guess) {
    const double e = constants.charge;
    const double ke2 = constants.coulomb * e * e;

    double z1 = z1_guess, z2 = z2_guess;
    if (!(z2 > z1)) throw InputError("two_ion_equilibrium: guess must have z1 < z2");

    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        double u1, du1, d2u1, u2, du2, d2u2;
        pot(z1, u1, du1, d2u1);
        pot(z2, u2, du2, d2u2);
        const double s = z2 - z1;
        const double g1 = e * du1 + ke2 / (s * s);
        const double g2 = e * du2 - ke2 / (s * s);
        const double cc = 2.0 * ke2 / (s * s * s);
        const double h11 = e * d2u1 + cc;
        const double h22 = e * d2u2 + cc;
        const double h12 = -cc;

        double dz1, dz2;
        if (!num::solve2x2(h11, h12, h12, h22, -g1, -g2, dz1, dz2))
            throw ConvergenceError("two_ion_equilibrium: singular Hessian step");

        // Keep the ordering; Coulomb repulsion makes crossing unphysical.
        double scale = 1.0;
        while (scale > 1e-6 && (z2 + scale * dz2) - (z1 + scale * dz1) <= 0.0)
            scale *= 0.5;
        z1 += scale * dz1;
        z2 += scale * dz2;

        const double fscale = std::fabs(e * d2u1 * s) + std::fabs(e * d2u2 * s) + ke2 / (s * s);
        if (std::hypot(g1, g2) < 1e-12 * fscale + 1e-30) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("two_ion_equilibrium: Newton failed in 100 iterations");

    double u1, du1, d2u1, u2, du2, d2u2;
    pot(z1, u1, du1, d2u1);
    pot(z2, u2, du2, d2u2);
    const double s = z2 - z1;
    const double cc = 2.0 * ke2 / (s * s * s);
    const double h11 = e * d2u1 + cc;
    const double h22 = e * d2u2 + cc;
    const double h12 = -cc;

    std::array<double, 2> vals;
    std::array<std::array<double, 2>, 2> vecs;
    num::eig2x2_sym(h11, h12, h22, vals, vecs);

    ModeSpectrum spec;
    spec.positions = {z1, z2};
    for (int k = 0; k < 2; ++k) {
        if (vals[static_cast<size_t>(k)] <= 0.0)
            throw DomainError("two_ion_equilibrium: unstable configuration (non-PD Hessian)");
        const double omega = std::sqrt(vals[static_cast<size_t>(k)] / constants.ion_mass);
        spec.freqs.push_back(omega / num::two_pi);
        const auto& vv = vecs[static_cast<size_t>(k)];
        const double com_w = std::fabs(vv[0] + vv[1]);
        const double str_w = std::fabs(vv[0] - vv[1]);
        spec.labels.push_back(com_w >= str_w ? ModeLabel::Com : ModeLabel::Stretch);
    }
    if (spec.freqs[0] > spec.freqs[1]) {
        std::swap(spec.freqs[0], spec.freqs[1]);
        std::swap(spec.labels[0], spec.labels[1]);
    }
    return spec;
}

ModeSpectrum two_ion_equilibrium(const potential::ElectrodeBasis& basis,
                                 const potential::Voltages& v) {
    const auto wells = potential::find_minima(basis, v);
    const auto& c = basis.constants;
    double z1, z2;
    if (wells.size() >= 2) {
        z1 = wells.front().z;
        z2 = wells.back().z;
    } else {
        const double s0 = std::cbrt(2.0 * c.coulomb * c.charge / wells[0].curvature);
        z1 = wells[0].z - 0.5 * s0;
        z2 = wells[0].z + 0.5 * s0;
    }
    return two_ion_equilibrium(basis_potential(basis, v), c, z1, z2);
}

ModeSpectrum single_ion_modes(const potential::ElectrodeBasis& basis,
                              const potential::Voltages& v) {
    ModeSpectrum spec;
    for (const auto& w : potential::find_minima(basis, v)) {
        spec.positions.push_back(w.z);
        spec.freqs.push_back(w.nu);
        spec.labels.push_back(ModeLabel::Single);
    }
    return spec;
}

double harmonic_two_ion_separation(double nu, const PhysicalConstants& constants) {
    const double omega = num::two_pi * nu;
    return std::cbrt(2.0 * constants.coulomb * constants.charge * constants.charge /
                     (constants.ion_mass * omega * omega));
}

}  // namespace iontrap::dynamics
