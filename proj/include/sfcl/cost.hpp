#pragma once

#include <utility>
#include <vector>

#include "sfcl/topology.hpp"

namespace sfcl {

struct Scenario;

inline constexpr double kHoursPerDay = 24.0;

struct CostParams {
    double c0_usd_per_ka = 0.0;       // installation cost per rated kA
    double i_rating_ka = 0.0;
    int x_switches = 1;               // bidirectional switch modules
    double c_l0_usd_per_kwh = 0.0;    // energy price for dissipated losses
    double c_lt_usd_per_ka_day = 0.0; // labor/transportation per repair
    double c_d0_usd_per_day = 0.0;    // outage revenue loss
    double mttr_days = 0.0;

    void validate() const;
};

/// Lifetime cost components in dollars plus the levelized cost: the total
/// over the expected lifetime divided by MTTF + MTTR, reported per million
/// hours.
struct CostBill {
    double c_inst = 0.0;
    double c_loss = 0.0;
    double c_repair = 0.0;
    double c_outage = 0.0;
    double mttf_h = 0.0;
    double lc_per_mh = 0.0;

    double total() const { return c_inst + c_loss + c_repair + c_outage; }
};

/// C_inst = X * C0 * I.
double investment_cost(const CostParams& p);

/// Component breakdown for a configuration with the given MTTF and total
/// dissipated device power:
///   C_loss   = P_loss * MTTF * C_l0          (kWh accounting)
///   C_repair = C_inst + C_lt * I * MTTR      (reinstallation + labor)
///   C_outage = C_d0 * MTTR
/// Throws when MTTF + MTTR is not positive.
CostBill levelized_cost(const CostParams& p, double mttf_h,
                        double p_loss_total_w);

/// Average dissipation of all devices in a configuration, from the measured
/// per-device full-load and half-load losses. A bidirectional switch is two
/// devices conducting on alternate half cycles; the shunt-parallel
/// arrangement runs both modules at half load, series-parallel runs both at
/// full load, standby and non-redundant run one module at full load.
double configuration_loss_w(Topology t, double p_loss_w,
                            double p_loss_half_w);

/// Evaluates every configuration end to end (losses -> junction temperature
/// -> rates -> MTTF -> levelized cost) and sorts ascending by levelized
/// cost. Equal-cost entries keep the enum order.
std::vector<std::pair<Topology, CostBill>> rank_configurations(
    const Scenario& s);

/// Single-configuration evaluation with the same chain as
/// rank_configurations.
CostBill cost_for_topology(const Scenario& s, Topology t);

}  // namespace sfcl
