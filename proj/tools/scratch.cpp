#include <cstdio>
#include "iontrap/potential.hpp"
using namespace iontrap;
using namespace iontrap::potential;

int main() {
    auto geom = TrapGeometry::standard();
    auto anchors = default_anchors(geom);
    CalibrationOptions opt;
    opt.tolerance = 10.0;  // report only
    auto cal = calibrate(geom, anchors, PhysicalConstants::be9(), opt);
    std::printf("alpha=%.6f w=%.3f um  ssq=%.5g\n", cal.basis.alpha,
                cal.basis.smoothing_w * 1e6, cal.sum_sq);
    for (size_t i = 0; i < cal.residuals.size(); ++i)
        std::printf("  anchor %zu: residual %+.4f  obs %.6g (target %.6g)\n", i,
                    cal.residuals[i], anchor_observable(cal.basis, anchors[i]),
                    anchors[i].target);
    auto wells = find_minima(cal.basis, {8, 0, 8, 0, 8});
    for (auto& w : wells)
        std::printf("well (8,0,8,0,8): z=%.3f um nu=%.4g MHz\n", w.z * 1e6, w.nu * 1e-6);
    auto wells3 = find_minima(cal.basis, {8, 0, 0, 0, 8});
    for (auto& w : wells3)
        std::printf("well (8,0,0,0,8): z=%.3f um nu=%.4g kHz\n", w.z * 1e6, w.nu * 1e-3);
    return 0;
}
