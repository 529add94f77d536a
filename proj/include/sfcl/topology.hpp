#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sfcl/failure.hpp"
#include "sfcl/state_diagram.hpp"
#include "sfcl/thermal.hpp"

namespace sfcl {

struct Scenario;

/// The component-level redundant switch arrangements, plus the single-switch
/// baseline. "parallel"/"standby" is the redundancy role of the spare from a
/// reliability point of view.
enum class Topology {
    shunt_parallel,
    shunt_standby,
    series_parallel,
    series_standby,
    non_redundant,
};

inline constexpr std::array<Topology, 5> kAllTopologies = {
    Topology::shunt_parallel, Topology::shunt_standby,
    Topology::series_parallel, Topology::series_standby,
    Topology::non_redundant};
inline constexpr std::array<Topology, 4> kRedundantTopologies = {
    Topology::shunt_parallel, Topology::shunt_standby,
    Topology::series_parallel, Topology::series_standby};

const char* to_string(Topology t);
std::optional<Topology> topology_from_string(const std::string& name);

/// Builds the state-space diagram of a topology. The shunt-parallel diagram
/// is the full seven-state chain; the others are two-transient chains with a
/// lumped failed state.
StateDiagram build_diagram(Topology t, const SwitchRates& r,
                           const CoverageParams& c);

/// Whether the diagram built by build_diagram reproduces the topology's
/// closed-form MTTF. The series-standby reconstruction is validated at full
/// coverage only; its closed form implies extra events in the backup state
/// that the diagram does not carry.
bool diagram_matches_closed_form(Topology t, const CoverageParams& c);

/// Closed-form MTTF in hours. Throws InfiniteMttfError on a vanishing total
/// rate (or the degenerate series-standby denominator).
double mttf_closed_form(Topology t, const SwitchRates& r,
                        const CoverageParams& c);

/// Constants of the more-reliable-region boundary T_j > C1 * T_j_h + C2.
struct BoundaryConstants {
    double c1;
    double c2;
};

/// C1 = (a + 273 ln 2) / (a - 273 ln 2), C2 = ln 2 * 273^2 / (a - 273 ln 2).
/// Throws when a <= 273 ln 2 (the denominator changes sign).
BoundaryConstants boundary_constants(double arrhenius_a);

/// Full-load junction temperature above which the shunt-parallel arrangement
/// is the more reliable one, for a given half-load junction temperature.
double temperature_boundary(double t_j_h_c, double arrhenius_a);

/// Which side of a comparison boundary an operating point falls on. Exact
/// ties are reported as `boundary`, never silently assigned; `standby` means
/// the standby pair (series standby being the stronger of the two under
/// imperfect coverage).
enum class Preferred { shunt_parallel, standby, boundary };

const char* to_string(Preferred p);

struct ComparisonVerdict {
    Preferred region;
    double lhs;  // evaluated left side of the deciding inequality
    double rhs;  // evaluated threshold

    /// Winning topology; empty at an exact boundary.
    std::optional<Topology> winner() const;
};

/// Perfect-coverage comparison: the shunt-parallel arrangement wins exactly
/// when lambda_sw / lambda_sw_h > 2.
ComparisonVerdict perfect_coverage_winner(double rate_ratio_full_to_half);

/// Right-hand side of the imperfect-coverage comparison: the shunt-parallel
/// arrangement wins when lambda_sw_h / lambda_sw falls below this threshold.
/// The truncated form drops a small cross term from the denominator; the
/// full form keeps it.
double imperfect_coverage_threshold(const CoverageParams& c);
double imperfect_coverage_threshold_full(const CoverageParams& c);

/// Imperfect-coverage verdict for a measured half/full failure-rate ratio.
ComparisonVerdict coverage_winner(double rate_ratio_half_to_full,
                                  const CoverageParams& c,
                                  bool full_form = false);

/// Thermal-design form of the boundary:
///   P_loss - C1 * P_loss_h > ((C1 - 1) * T_a + C2) / (R_jc + R_ca).
ComparisonVerdict heatsink_condition(double p_loss_w, double p_loss_half_w,
                                     const ThermalStack& stack,
                                     double arrhenius_a);

/// Scenario-derived operating point: junction temperatures and the failure
/// rates they imply.
struct OperatingPoint {
    ThermalStack stack;
    double t_j_c;       // full load
    double t_j_h_c;     // half load
    SwitchRates rates;  // per hour
    CoverageParams coverage;
    double p_loss_w;
    double p_loss_half_w;
    double arrhenius_a;
};

OperatingPoint evaluate_operating_point(const Scenario& s);

enum class SweepParam { t_a, p_loss_scale, r_ca };

const char* to_string(SweepParam p);
std::optional<SweepParam> sweep_param_from_string(const std::string& name);

struct SweepRow {
    double value;
    double mttf_sh_p_h;
    double mttf_sh_sb_h;
    double mttf_s_p_h;
    double mttf_s_sb_h;
    Preferred winner;  // heatsink-condition verdict at this grid point
};

/// Recomputes the full chain (losses -> junction temperatures -> rates ->
/// MTTFs -> verdict) across a monotone grid of one parameter. Domain errors
/// are rethrown with the offending grid index.
std::vector<SweepRow> sensitivity_sweep(const Scenario& base, SweepParam param,
                                        const std::vector<double>& grid);

}  // namespace sfcl
