#pragma once

#include <array>
#include <cstddef>
#include <utility>

namespace iontrap::potential {

// Axial layout of the five control-electrode pairs.  z = 0 sits at the
// center of electrode 2 (trap #2); trap #4 is then at +1.22 mm.
struct TrapGeometry {
    std::array<std::pair<double, double>, 5> edges;  // (z_start, z_end), meters
    double gap = 10e-6;                              // inter-electrode slot width
    double ion_electrode_distance = 270e-6;          // d

    static TrapGeometry from_lengths(const std::array<double, 5>& lengths,
                                     double gap, double d);

    // 1100/400/800/400/1100 um electrodes, 10 um gaps, d = 270 um.
    static TrapGeometry standard();

    double center(int electrode) const {  // electrode in 0..4
        return 0.5 * (edges[static_cast<size_t>(electrode)].first +
                      edges[static_cast<size_t>(electrode)].second);
    }

    // Trap locations are labeled by the electrode they are centered on (1-based
    // like the figure: trap #2 over electrode 2, etc).
    double trap_center(int trap) const { return center(trap - 1); }

    double region_lo() const { return edges[0].first - 200e-6; }
    double region_hi() const { return edges[4].second + 200e-6; }

    void validate() const;  // ordered, non-overlapping, uniform gaps
};

}  // namespace iontrap::potential
