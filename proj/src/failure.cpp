#include "sfcl/failure.hpp"

#include <cmath>

#include "sfcl/errors.hpp"

namespace sfcl {

namespace {

void check_temperature(double t_j_c) {
    if (!(t_j_c > -kZeroCelsiusK))
        throw ValidationError(
            "junction temperature must be above -273 C");
}

}  // namespace

double temperature_factor(double t_j_c, double arrhenius_a) {
    check_temperature(t_j_c);
    if (!(arrhenius_a > 0))
        throw ValidationError("arrhenius constant 'a' must be positive");
    const double ref_k = kReferenceTempC + kZeroCelsiusK;
    return std::exp(-arrhenius_a * (1.0 / (t_j_c + kZeroCelsiusK) - 1.0 / ref_k));
}

double unidirectional_rate_fit(const PartStressParams& p, double t_j_c) {
    if (!(p.lambda_b_fit >= 0))
        throw ValidationError("base failure rate 'lambda_b_fit' must be >= 0");
    if (!(p.pi_q > 0)) throw ValidationError("'pi_q' must be positive");
    if (!(p.pi_e > 0)) throw ValidationError("'pi_e' must be positive");
    double rate = p.lambda_b_fit * temperature_factor(t_j_c, p.arrhenius_a) *
                  p.pi_q * p.pi_e;
    for (const auto& [name, value] : p.extra_pi) {
        if (!(value > 0))
            throw ValidationError("factor '" + name + "' must be positive");
        rate *= value;
    }
    return rate;
}

RateSplit split_rates(double lambda_sw, double chi) {
    if (!(lambda_sw >= 0))
        throw ValidationError("'lambda_sw' must be >= 0");
    if (!(chi >= 0.0 && chi <= 1.0))
        throw ValidationError("'chi' must lie in [0, 1]");
    double sc = chi * lambda_sw;
    double oc = lambda_sw - sc;
    // The parts must add back to lambda_sw bit for bit. When sc's lowest bit
    // sits half an ulp of lambda_sw below the grid, every candidate sum ties
    // and rounds away, so no oc alone can close the gap; displacing sc by one
    // of its own ulps (a 2^-52 relative perturbation) breaks the tie.
    for (int outer = 0; outer < 8 && sc + oc != lambda_sw; ++outer) {
        for (int i = 0; i < 2 && sc + oc != lambda_sw; ++i)
            oc -= (sc + oc) - lambda_sw;
        if (sc + oc != lambda_sw) {
            sc = std::nextafter(sc, 0.0);
            oc = lambda_sw - sc;
        }
    }
    return {sc, oc};
}

double rate_ratio_from_temps(double t_j_c, double t_j_h_c,
                             double arrhenius_a) {
    check_temperature(t_j_c);
    check_temperature(t_j_h_c);
    return std::exp(arrhenius_a * (1.0 / (t_j_c + kZeroCelsiusK) -
                                   1.0 / (t_j_h_c + kZeroCelsiusK)));
}

SwitchRates SwitchRates::from_bidirectional(double lambda_sw_per_hour,
                                            double lambda_sw_h_per_hour,
                                            double chi) {
    RateSplit full = split_rates(lambda_sw_per_hour, chi);
    RateSplit half = split_rates(lambda_sw_h_per_hour, chi);
    SwitchRates r{full.lambda_oc, full.lambda_sc, half.lambda_oc,
                  half.lambda_sc};
    r.validate();
    return r;
}

void SwitchRates::validate() const {
    if (!(lambda_oc >= 0)) throw ValidationError("'lambda_oc' must be >= 0");
    if (!(lambda_sc >= 0)) throw ValidationError("'lambda_sc' must be >= 0");
    if (!(lambda_oc_h >= 0))
        throw ValidationError("'lambda_oc_h' must be >= 0");
    if (!(lambda_sc_h >= 0))
        throw ValidationError("'lambda_sc_h' must be >= 0");
}

void CoverageParams::validate() const {
    if (!(p_s >= 0.0 && p_s <= 1.0))
        throw ValidationError("'p_s' must lie in [0, 1]");
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw ValidationError("'gamma' must lie in [0, 1]");
    if (!(chi >= 0.0 && chi <= 1.0))
        throw ValidationError("'chi' must lie in [0, 1]");
}

}  // namespace sfcl
