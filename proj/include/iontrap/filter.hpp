#pragma once

#include <complex>
#include <vector>

namespace iontrap::waveform {

struct VoltageProgram;

// RC low-pass ladder on each control line, listed source -> electrode
// (electrode-side stage last).  A zero capacitance is treated as an open
// capacitor (pure series R).
struct FilterModel {
    struct Stage {
        double resistance;   // ohms
        double capacitance;  // farads
    };
    std::vector<Stage> stages;

    // Two (1 kOhm, 820 pF) sections on every control line.
    static FilterModel control_line();
    // The extra two (1 kOhm, 22 nF) sections inserted for ion separation.
    static FilterModel separation_prefilter();
    // prefilter stages followed by the control-line stages.
    FilterModel prepend(const FilterModel& earlier) const;

    double min_time_constant() const;
    void validate() const;
};

// Impedance of the ladder seen from the electrode node (ideal source at the
// far end).  Real part is the Johnson-noise-relevant resistance.
std::complex<double> filter_impedance(const FilterModel& filter, double omega);

// Convolves each electrode channel with the ladder response, treating the
// input samples as a zero-order-hold DAC output (exact discretization of the
// ladder ODEs over each sample).  DC gain 1, causal; the state starts in
// steady state at the first sample.
VoltageProgram apply_filter(const VoltageProgram& program, const FilterModel& filter);

}  // namespace iontrap::waveform
