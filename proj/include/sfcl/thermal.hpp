#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfcl {

/// Steady-state thermal resistance stack from junction to ambient.
/// Dynamic thermal capacitances are ignored throughout.
struct ThermalStack {
    double t_a_c = 25.0;  // ambient, C
    double r_jc = 0.0;    // junction-case, C/W
    double r_ch = 0.0;    // case-heatsink, C/W
    double r_ha = 0.0;    // heatsink-ambient, C/W

    double r_ca() const { return r_ch + r_ha; }
    void validate() const;
};

/// One on-state current sample: the instantaneous current held over its own
/// sampling period.
struct CurrentSample {
    double amps;
    double seconds;
};

/// Switching + conduction loss description. The samples must cover exactly
/// one averaging period; non-uniform sampling periods are allowed.
struct LossSpec {
    double f_sw_hz = 0.0;
    double e_on_j = 0.0;
    double e_off_j = 0.0;
    double v_0 = 0.0;   // threshold voltage, V
    double r_s = 0.0;   // static resistance, ohm
    std::vector<CurrentSample> samples;
};

/// Average device loss in watts:
///   f_sw * (E_on + E_off) + (1/T) * sum (V0 + Rs * i) * i * Ts,  T = sum Ts.
double power_loss(const LossSpec& spec);

/// Junction temperature from ambient through the full stack:
///   T_j = T_a + P_loss * (R_jc + R_ca).
double junction_temperature(const ThermalStack& stack, double p_loss_w);

/// Junction temperature from a measured case temperature:
///   T_j = T_c + P_loss * R_jc.
double junction_from_case(double t_case_c, double p_loss_w, double r_jc);

// Waveform CSV with header `t_s,i_a` and a strictly increasing time column.
// Row k's current is held over [t_k, t_k+1); the final row only closes the
// averaging period.
std::vector<CurrentSample> read_waveform_csv(std::istream& in);
std::vector<CurrentSample> load_waveform_csv(const std::string& path);

}  // namespace sfcl
