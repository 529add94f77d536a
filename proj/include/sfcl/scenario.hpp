#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sfcl/failure.hpp"
#include "sfcl/topology.hpp"

namespace sfcl {

/// Flat key-value scenario file (one `key = value` per line, `#` comments).
/// Unknown keys are rejected; optional defaults match the thyristor case
/// (chi = 0.98, gamma = 1, p_s = 1, a = 3082). Keys a command needs but the
/// file omits are reported by name when first used.
struct Scenario {
    std::optional<Topology> topology;

    // coverage
    double p_s = 1.0;
    double gamma = 1.0;
    double chi = kDefaultShortFraction;

    // failure model
    double a = kDefaultArrheniusA;
    std::optional<double> lambda_b_fit;
    std::optional<double> pi_q;
    std::optional<double> pi_e;

    // thermal / losses
    std::optional<double> t_a_c;
    std::optional<double> r_jc;
    std::optional<double> r_ch;
    std::optional<double> r_ha;
    std::optional<double> p_loss_w;
    std::optional<double> p_loss_half_w;

    // cost
    std::optional<double> mttr_days;
    std::optional<double> c0_usd_per_ka;
    std::optional<double> i_rating_ka;
    std::optional<double> c_l0_usd_per_kwh;
    std::optional<double> c_lt_usd_per_ka_day;
    std::optional<double> c_d0_usd_per_day;

    // conduction/switching loss model
    double f_sw_hz = 0.0;
    double e_on_j = 0.0;
    double e_off_j = 0.0;
    std::optional<double> v0_v;
    std::optional<double> r_s_ohm;
    std::optional<std::string> waveform_full_csv;
    std::optional<std::string> waveform_half_csv;
};

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

/// Returns the value or throws ValidationError naming the missing key.
double require_key(const std::optional<double>& value, const char* key);

}  // namespace sfcl
