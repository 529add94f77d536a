#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sfcl {

inline constexpr double kFitPerHour = 1e-9;   // 1 FIT = 1e-9 failures/hour
inline constexpr double kZeroCelsiusK = 273.0;
inline constexpr double kReferenceTempC = 25.0;  // temperature factor is 1 here

/// Arrhenius activation constant for a thyristor pair (kelvin).
inline constexpr double kDefaultArrheniusA = 3082.0;
/// Fraction of switch faults that are short circuits for thyristors.
inline constexpr double kDefaultShortFraction = 0.98;

/// Part-stress failure-rate parameters of a unidirectional switch:
/// lambda = lambda_b * pi_T(T_j) * pi_Q * pi_E * prod(extra_pi).
struct PartStressParams {
    double lambda_b_fit = 0.0;
    double pi_q = 1.0;
    double pi_e = 1.0;
    std::vector<std::pair<std::string, double>> extra_pi;  // e.g. voltage stress
    double arrhenius_a = kDefaultArrheniusA;
};

/// Arrhenius temperature factor exp(-a * (1/(T_j + 273) - 1/298)).
/// Exactly 1 at 25 C; strictly increasing in T_j.
double temperature_factor(double t_j_c, double arrhenius_a);

/// Failure rate of one unidirectional switch in FIT at the given junction
/// temperature. All pi factors must be strictly positive.
double unidirectional_rate_fit(const PartStressParams& p, double t_j_c);

struct RateSplit {
    double lambda_sc;
    double lambda_oc;
};

/// Splits a bidirectional-switch rate into short-circuit and open-circuit
/// parts: lambda_sc = chi * lambda_sw, lambda_oc the remainder. The two parts
/// always add back to lambda_sw exactly.
RateSplit split_rates(double lambda_sw, double chi);

/// Half-load to full-load failure-rate ratio implied by the temperature
/// factors: exp(a * (1/(T_j + 273) - 1/(T_j_h + 273))). Below 1 whenever the
/// half-load junction runs cooler.
double rate_ratio_from_temps(double t_j_c, double t_j_h_c, double arrhenius_a);

/// Open/short failure rates of one unidirectional switch at full and half
/// load, in failures/hour. FIT values belong at the I/O boundary only.
struct SwitchRates {
    double lambda_oc = 0.0;
    double lambda_sc = 0.0;
    double lambda_oc_h = 0.0;
    double lambda_sc_h = 0.0;

    double lambda_sw() const { return lambda_oc + lambda_sc; }
    double lambda_sw_h() const { return lambda_oc_h + lambda_sc_h; }

    /// Builds the four mode rates from bidirectional full/half-load rates and
    /// a short-circuit fraction.
    static SwitchRates from_bidirectional(double lambda_sw_per_hour,
                                          double lambda_sw_h_per_hour,
                                          double chi);
    void validate() const;
};

/// Fault-coverage parameters. `p_s` is the perfect relaying probability of
/// the shunt arrangement (and the generic single-probability case); the
/// series-standby arrangement uses gamma * p_s.
struct CoverageParams {
    double p_s = 1.0;
    double gamma = 1.0;
    double chi = kDefaultShortFraction;

    double p_series_standby() const { return gamma * p_s; }
    void validate() const;
};

}  // namespace sfcl
