#include "iontrap/geometry.hpp"

#include <cmath>

#include "iontrap/errors.hpp"

namespace iontrap::potential {

TrapGeometry TrapGeometry::from_lengths(const std::array<double, 5>& lengths,
                                        double gap, double d) {
    TrapGeometry g;
    g.gap = gap;
    g.ion_electrode_distance = d;
    // Place electrode 2 symmetric about z = 0, then walk outward.
    double left = -0.5 * lengths[1];
    g.edges[1] = {left, left + lengths[1]};
    g.edges[0] = {left - gap - lengths[0], left - gap};
    double right = g.edges[1].second + gap;
    for (int i = 2; i < 5; ++i) {
        g.edges[static_cast<size_t>(i)] = {right, right + lengths[static_cast<size_t>(i)]};
        right += lengths[static_cast<size_t>(i)] + gap;
    }
    g.validate();
    return g;
}

TrapGeometry TrapGeometry::standard() {
    return from_lengths({1100e-6, 400e-6, 800e-6, 400e-6, 1100e-6}, 10e-6, 270e-6);
}

void TrapGeometry::validate() const {
    if (!(gap > 0.0) || !(ion_electrode_distance > 0.0))
        throw InputError("trap geometry: gap and ion-electrode distance must be positive");
    for (const auto& [a, b] : edges)
        if (!(b > a)) throw InputError("trap geometry: electrode with non-positive length");
    for (size_t i = 1; i < edges.size(); ++i) {
        const double slot = edges[i].first - edges[i - 1].second;
        if (std::fabs(slot - gap) > 1e-12)
            throw InputError("trap geometry: electrodes must be separated by exactly the gap");
    }
}

}  // namespace iontrap::potential
