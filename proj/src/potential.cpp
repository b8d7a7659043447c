#include "iontrap/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iontrap/errors.hpp"
#include "iontrap/numeric.hpp"

namespace iontrap::potential {

namespace {

constexpr double kRegionLimit = 5e-3;  // point operations allowed within +-5 mm

void check_point_inputs(const Voltages& v, double z) {
    if (!std::isfinite(z) || std::fabs(z) > kRegionLimit)
        throw InputError("potential: z outside +-5 mm of trap center");
    for (double vi : v)
        if (!std::isfinite(vi)) throw InputError("potential: non-finite voltage");
}

// tanh and derived factors for one electrode edge.
struct EdgeTerms {
    double t;  // tanh(u)
    double s;  // sech^2(u)
};

inline EdgeTerms edge(double u) {
    const double t = std::tanh(u);
    return {t, 1.0 - t * t};
}

}  // namespace

double ElectrodeBasis::phi(int i, double z) const {
    const auto& [a, b] = geometry.edges[static_cast<size_t>(i)];
    return 0.5 * alpha * (std::tanh((z - a) / smoothing_w) - std::tanh((z - b) / smoothing_w));
}

double ElectrodeBasis::dphi(int i, double z) const {
    const auto& [a, b] = geometry.edges[static_cast<size_t>(i)];
    const auto ea = edge((z - a) / smoothing_w);
    const auto eb = edge((z - b) / smoothing_w);
    return 0.5 * alpha / smoothing_w * (ea.s - eb.s);
}

double ElectrodeBasis::d2phi(int i, double z) const {
    const auto& [a, b] = geometry.edges[static_cast<size_t>(i)];
    const auto ea = edge((z - a) / smoothing_w);
    const auto eb = edge((z - b) / smoothing_w);
    // d2/du2 tanh = -2 t s
    return alpha / (smoothing_w * smoothing_w) * (eb.t * eb.s - ea.t * ea.s);
}

double ElectrodeBasis::d3phi(int i, double z) const {
    const auto& [a, b] = geometry.edges[static_cast<size_t>(i)];
    const auto ea = edge((z - a) / smoothing_w);
    const auto eb = edge((z - b) / smoothing_w);
    // d3/du3 tanh = s (4 t^2 - 2 s)
    const double w3 = smoothing_w * smoothing_w * smoothing_w;
    const double fa = ea.s * (4.0 * ea.t * ea.t - 2.0 * ea.s);
    const double fb = eb.s * (4.0 * eb.t * eb.t - 2.0 * eb.s);
    return 0.5 * alpha / w3 * (fa - fb);
}

double ElectrodeBasis::d4phi(int i, double z) const {
    const auto& [a, b] = geometry.edges[static_cast<size_t>(i)];
    const auto ea = edge((z - a) / smoothing_w);
    const auto eb = edge((z - b) / smoothing_w);
    // d4/du4 tanh = 8 t s (2 s - t^2)
    const double w4 = std::pow(smoothing_w, 4);
    const double fa = 8.0 * ea.t * ea.s * (2.0 * ea.s - ea.t * ea.t);
    const double fb = 8.0 * eb.t * eb.s * (2.0 * eb.s - eb.t * eb.t);
    return 0.5 * alpha / w4 * (fa - fb);
}

double ElectrodeBasis::curvature_to_freq(double d2) const {
    if (d2 <= 0.0) throw DomainError("curvature_to_freq: non-positive curvature");
    return std::sqrt(constants.charge * d2 / constants.ion_mass) / num::two_pi;
}

double ElectrodeBasis::freq_to_curvature(double nu) const {
    const double omega = num::two_pi * nu;
    return constants.ion_mass * omega * omega / constants.charge;
}

double axial_potential(const ElectrodeBasis& basis, const Voltages& v, double z) {
    check_point_inputs(v, z);
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += v[static_cast<size_t>(i)] * basis.phi(i, z);
    return sum;
}

std::pair<double, double> axial_field_and_curvature(const ElectrodeBasis& basis,
                                                    const Voltages& v, double z) {
    check_point_inputs(v, z);
    double d1 = 0.0, d2 = 0.0;
    for (int i = 0; i < 5; ++i) {
        d1 += v[static_cast<size_t>(i)] * basis.dphi(i, z);
        d2 += v[static_cast<size_t>(i)] * basis.d2phi(i, z);
    }
    return {-d1, d2};
}

double single_electrode_field(const ElectrodeBasis& basis, int i, double z) {
    return 0.5 * std::fabs(basis.dphi(i, z));
}

namespace {

double slope(const ElectrodeBasis& basis, const Voltages& v, double z) {
    double d1 = 0.0;
    for (int i = 0; i < 5; ++i) d1 += v[static_cast<size_t>(i)] * basis.dphi(i, z);
    return d1;
}

double curvature(const ElectrodeBasis& basis, const Voltages& v, double z) {
    double d2 = 0.0;
    for (int i = 0; i < 5; ++i) d2 += v[static_cast<size_t>(i)] * basis.d2phi(i, z);
    return d2;
}

}  // namespace

std::vector<Well> find_minima(const ElectrodeBasis& basis, const Voltages& v) {
    for (double vi : v)
        if (!std::isfinite(vi)) throw InputError("find_minima: non-finite voltage");

    const double lo = basis.geometry.region_lo();
    const double hi = basis.geometry.region_hi();
    const double step = 1e-6;  // 1 um scan, refined by bisection to 1 nm

    std::vector<Well> wells;
    double z_prev = lo;
    double s_prev = slope(basis, v, z_prev);
    for (double z = lo + step; z <= hi + 0.5 * step; z += step) {
        const double s = slope(basis, v, z);
        if (s_prev < 0.0 && s >= 0.0) {
            const double zmin = num::bisect(
                [&](double x) { return slope(basis, v, x); }, z_prev, z, 1e-9);
            const double c = curvature(basis, v, zmin);
            if (c > 0.0) wells.push_back({zmin, basis.curvature_to_freq(c), c});
        }
        z_prev = z;
        s_prev = s;
    }
    if (wells.empty())
        throw DomainError("find_minima: no axial minimum in the trap region");
    return wells;
}

std::optional<Well> nearest_minimum(const ElectrodeBasis& basis, const Voltages& v,
                                    double z0, double max_distance) {
    std::vector<Well> wells;
    try {
        wells = find_minima(basis, v);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    const Well* best = nullptr;
    for (const auto& w : wells)
        if (!best || std::fabs(w.z - z0) < std::fabs(best->z - z0)) best = &w;
    if (!best || std::fabs(best->z - z0) > max_distance) return std::nullopt;
    return *best;
}

std::vector<Anchor> default_anchors(const TrapGeometry& geometry) {
    std::vector<Anchor> anchors;
    anchors.push_back({{8, 0, 8, 0, 8}, Anchor::Kind::Frequency, 2.9e6,
                       geometry.trap_center(2)});
    anchors.push_back({{8, 0, 0, 0, 8}, Anchor::Kind::Frequency, 700e3,
                       geometry.trap_center(3)});
    anchors.push_back({{1, 0, 0, 0, 0}, Anchor::Kind::SingleElectrodeField, 242.0,
                       geometry.trap_center(2)});
    return anchors;
}

double anchor_observable(const ElectrodeBasis& basis, const Anchor& anchor) {
    switch (anchor.kind) {
        case Anchor::Kind::Frequency: {
            auto well = nearest_minimum(basis, anchor.voltages, anchor.z);
            if (!well) return std::numeric_limits<double>::quiet_NaN();
            return well->nu;
        }
        case Anchor::Kind::FieldMagnitude:
            return std::fabs(slope(basis, anchor.voltages, anchor.z));
        case Anchor::Kind::SingleElectrodeField:
            return 0.5 * std::fabs(slope(basis, anchor.voltages, anchor.z));
    }
    return std::numeric_limits<double>::quiet_NaN();
}

namespace {

std::vector<double> anchor_residuals(const ElectrodeBasis& basis,
                                     const std::vector<Anchor>& anchors) {
    std::vector<double> res;
    res.reserve(anchors.size());
    for (const auto& a : anchors) {
        const double obs = anchor_observable(basis, a);
        const double denom = std::fabs(a.target) > 0.0 ? std::fabs(a.target) : 1.0;
        if (!std::isfinite(obs)) {
            res.push_back(10.0);  // penalty: anchor has no observable (no minimum)
        } else {
            res.push_back((obs - a.target) / denom);
        }
    }
    return res;
}

double objective(const TrapGeometry& geometry, const PhysicalConstants& constants,
                 const std::vector<Anchor>& anchors, double alpha, double w) {
    ElectrodeBasis basis{geometry, w, alpha, constants};
    double s = 0.0;
    for (double r : anchor_residuals(basis, anchors)) s += r * r;
    return s;
}

}  // namespace

CalibrationResult calibrate(const TrapGeometry& geometry,
                            const std::vector<Anchor>& anchors,
                            const PhysicalConstants& constants,
                            const CalibrationOptions& options) {
    if (anchors.empty()) throw InputError("calibrate: anchor list is empty");
    geometry.validate();

    auto f = [&](double a, double w) { return objective(geometry, constants, anchors, a, w); };

    // Global coarse grid, then shrinking local grids.  Deterministic, so the
    // result does not depend on the optional initial guess beyond tie-breaks.
    double best_a = options.initial_guess ? options.initial_guess->first
                                          : 0.5 * (options.alpha_lo + options.alpha_hi);
    double best_w = options.initial_guess ? options.initial_guess->second
                                          : 0.5 * (options.w_lo + options.w_hi);
    double best_f = f(best_a, best_w);

    const int na = 20, nw = 26;
    for (int ia = 0; ia <= na; ++ia) {
        const double a = options.alpha_lo + (options.alpha_hi - options.alpha_lo) * ia / na;
        for (int iw = 0; iw <= nw; ++iw) {
            const double w = options.w_lo + (options.w_hi - options.w_lo) * iw / nw;
            const double val = f(a, w);
            if (val < best_f) {
                best_f = val;
                best_a = a;
                best_w = w;
            }
        }
    }

    double span_a = (options.alpha_hi - options.alpha_lo) / na;
    double span_w = (options.w_hi - options.w_lo) / nw;
    for (int round = 0; round < 8; ++round) {
        const int n = 6;
        double round_a = best_a, round_w = best_w;
        for (int ia = -n; ia <= n; ++ia) {
            for (int iw = -n; iw <= n; ++iw) {
                const double a = std::clamp(best_a + span_a * ia / n,
                                            options.alpha_lo, options.alpha_hi);
                const double w = std::clamp(best_w + span_w * iw / n,
                                            options.w_lo, options.w_hi);
                const double val = f(a, w);
                if (val < best_f) {
                    best_f = val;
                    round_a = a;
                    round_w = w;
                }
            }
        }
        best_a = round_a;
        best_w = round_w;
        span_a *= 0.35;
        span_w *= 0.35;
    }

    CalibrationResult result;
    result.basis = ElectrodeBasis{geometry, best_w, best_a, constants};
    result.residuals = anchor_residuals(result.basis, anchors);
    result.sum_sq = 0.0;
    for (double r : result.residuals) result.sum_sq += r * r;

    for (double r : result.residuals) {
        if (std::fabs(r) > options.tolerance)
            throw CalibrationError("calibrate: anchor residual exceeds tolerance",
                                   result.residuals);
    }
    return result;
}

}  // namespace iontrap::potential
