#include "sfcl/topology.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sfcl/errors.hpp"
#include "sfcl/scenario.hpp"

namespace sfcl {

const char* to_string(Topology t) {
    switch (t) {
        case Topology::shunt_parallel: return "shunt_parallel";
        case Topology::shunt_standby: return "shunt_standby";
        case Topology::series_parallel: return "series_parallel";
        case Topology::series_standby: return "series_standby";
        case Topology::non_redundant: return "non_redundant";
    }
    return "?";
}

std::optional<Topology> topology_from_string(const std::string& name) {
    for (Topology t : kAllTopologies)
        if (name == to_string(t)) return t;
    return std::nullopt;
}

const char* to_string(Preferred p) {
    switch (p) {
        case Preferred::shunt_parallel: return "shunt_parallel";
        case Preferred::standby: return "standby";
        case Preferred::boundary: return "boundary";
    }
    return "?";
}

std::optional<Topology> ComparisonVerdict::winner() const {
    switch (region) {
        case Preferred::shunt_parallel: return Topology::shunt_parallel;
        case Preferred::standby: return Topology::series_standby;
        case Preferred::boundary: return std::nullopt;
    }
    return std::nullopt;
}

StateDiagram build_diagram(Topology t, const SwitchRates& r,
                           const CoverageParams& c) {
    r.validate();
    c.validate();
    const double p = c.p_s;
    StateDiagram d;

    switch (t) {
        case Topology::shunt_parallel: {
            // Both switches share the load until the first fault, so the
            // working state uses half-load rates. An open switch drops out by
            // itself; a shorted one needs its relay to open (probability p),
            // otherwise the limiter is bypassed for good.
            for (const char* name : {"S1", "S2", "S3"})
                d.add_state(name, StateKind::transient);
            for (const char* name : {"S4", "S5", "S6", "S7"})
                d.add_state(name, StateKind::absorbing);
            d.add_transition("S1", "S2", 2.0 * r.lambda_oc_h);
            d.add_transition("S1", "S3", 2.0 * p * r.lambda_sc_h);
            d.add_transition("S1", "S4", 2.0 * (1.0 - p) * r.lambda_sc_h);
            d.add_transition("S2", "S5", r.lambda_oc);
            d.add_transition("S2", "S6", r.lambda_sc);
            d.add_transition("S3", "S6", r.lambda_oc);
            d.add_transition("S3", "S7", r.lambda_sc);
            d.set_initial("S1");
            return d;
        }
        case Topology::shunt_standby: {
            // Single switch at full load; switching over to the spare needs
            // the main relay to open for a short (p twice) or just the spare
            // relay to close for an open (p once).
            d.add_state("S1", StateKind::transient);
            d.add_state("S2", StateKind::transient);
            d.add_state("F", StateKind::absorbing);
            d.add_transition("S1", "S2", p * r.lambda_oc + p * p * r.lambda_sc);
            d.add_transition("S1", "F", (1.0 - p) * r.lambda_oc +
                                            (1.0 - p * p) * r.lambda_sc);
            d.add_transition("S2", "F", r.lambda_oc + r.lambda_sc);
            d.set_initial("S1");
            return d;
        }
        case Topology::series_parallel: {
            // Two switches in series, both at full load from the start. A
            // short is self-masking (the healthy switch keeps control); an
            // open needs its bypass relay to close.
            d.add_state("S1", StateKind::transient);
            d.add_state("S2", StateKind::transient);
            d.add_state("F", StateKind::absorbing);
            d.add_transition("S1", "S2",
                             2.0 * r.lambda_sc + 2.0 * p * r.lambda_oc);
            d.add_transition("S1", "F", 2.0 * (1.0 - p) * r.lambda_oc);
            d.add_transition("S2", "F", r.lambda_oc + r.lambda_sc);
            d.set_initial("S1");
            return d;
        }
        case Topology::series_standby: {
            // Reconstruction validated against the closed form at full
            // coverage only; see diagram_matches_closed_form.
            const double q = c.p_series_standby();
            d.add_state("S1", StateKind::transient);
            d.add_state("S2", StateKind::transient);
            d.add_state("F", StateKind::absorbing);
            d.add_transition("S1", "S2", q * q * r.lambda_oc + q * r.lambda_sc);
            d.add_transition("S1", "F", (1.0 - q * q) * r.lambda_oc +
                                            (1.0 - q) * r.lambda_sc);
            d.add_transition("S2", "F", r.lambda_oc + r.lambda_sc);
            d.set_initial("S1");
            return d;
        }
        case Topology::non_redundant: {
            d.add_state("S1", StateKind::transient);
            d.add_state("F", StateKind::absorbing);
            d.add_transition("S1", "F", r.lambda_oc + r.lambda_sc);
            d.set_initial("S1");
            return d;
        }
    }
    throw ValidationError("unknown topology");
}

bool diagram_matches_closed_form(Topology t, const CoverageParams& c) {
    if (t != Topology::series_standby) return true;
    return c.p_series_standby() >= 1.0;
}

double mttf_closed_form(Topology t, const SwitchRates& r,
                        const CoverageParams& c) {
    r.validate();
    c.validate();
    const double s = r.lambda_sw();

    switch (t) {
        case Topology::shunt_parallel: {
            const double s_h = r.lambda_sw_h();
            if (!(s > 0) || !(s_h > 0))
                throw InfiniteMttfError("zero total failure rate");
            const double num =
                s + 2.0 * (r.lambda_oc_h + c.p_s * r.lambda_sc_h);
            return num / (2.0 * s * s_h);
        }
        case Topology::shunt_standby: {
            if (!(s > 0)) throw InfiniteMttfError("zero total failure rate");
            const double num =
                (s + c.p_s * r.lambda_oc) + (c.p_s * c.p_s) * r.lambda_sc;
            return num / (s * s);
        }
        case Topology::series_parallel: {
            if (!(s > 0)) throw InfiniteMttfError("zero total failure rate");
            const double num =
                s + 2.0 * r.lambda_sc + 2.0 * c.p_s * r.lambda_oc;
            return num / (2.0 * (s * s));
        }
        case Topology::series_standby: {
            const double q = c.p_series_standby();
            const double num = (s + (q * q) * r.lambda_oc) + q * r.lambda_sc;
            const double den = ((q * q) * r.lambda_oc + r.lambda_sc) * s;
            if (!(den > 0))
                throw InfiniteMttfError("zero total failure rate");
            return num / den;
        }
        case Topology::non_redundant: {
            if (!(s > 0)) throw InfiniteMttfError("zero total failure rate");
            return 1.0 / s;
        }
    }
    throw ValidationError("unknown topology");
}

BoundaryConstants boundary_constants(double arrhenius_a) {
    const double x = kZeroCelsiusK * std::log(2.0);
    if (!(arrhenius_a > x)) {
        std::ostringstream msg;
        msg << "arrhenius constant 'a' = " << arrhenius_a
            << " must exceed 273*ln(2) = " << x;
        throw ValidationError(msg.str());
    }
    return {(arrhenius_a + x) / (arrhenius_a - x),
            std::log(2.0) * kZeroCelsiusK * kZeroCelsiusK / (arrhenius_a - x)};
}

double temperature_boundary(double t_j_h_c, double arrhenius_a) {
    if (!(t_j_h_c > -kZeroCelsiusK))
        throw ValidationError("junction temperature must be above -273 C");
    BoundaryConstants bc = boundary_constants(arrhenius_a);
    return bc.c1 * t_j_h_c + bc.c2;
}

namespace {

ComparisonVerdict verdict_from_sides(double lhs, double rhs,
                                     bool shunt_wins_when_greater) {
    Preferred region;
    if (lhs == rhs)
        region = Preferred::boundary;
    else if ((lhs > rhs) == shunt_wins_when_greater)
        region = Preferred::shunt_parallel;
    else
        region = Preferred::standby;
    return {region, lhs, rhs};
}

}  // namespace

ComparisonVerdict perfect_coverage_winner(double rate_ratio_full_to_half) {
    if (!(rate_ratio_full_to_half > 0))
        throw ValidationError("rate ratio must be positive");
    return verdict_from_sides(rate_ratio_full_to_half, 2.0, true);
}

namespace {

double coverage_threshold_impl(const CoverageParams& c, bool full_form) {
    c.validate();
    const double chi = c.chi;
    const double p_sh = c.p_s;                // shunt relaying probability
    const double p_sb = c.p_series_standby();  // series-standby probability

    const double num = 0.5 * (chi + (1.0 - chi) * p_sb * p_sb);
    double den =
        (1.0 - chi) + chi * chi + chi * p_sb - (chi * chi) * p_sh;
    if (full_form)
        den += (chi - chi * chi) * (p_sb * p_sb) * (1.0 - p_sh);
    if (!(den > 0))
        throw ValidationError("coverage threshold denominator is not positive");
    return num / den;
}

}  // namespace

double imperfect_coverage_threshold(const CoverageParams& c) {
    return coverage_threshold_impl(c, false);
}

double imperfect_coverage_threshold_full(const CoverageParams& c) {
    return coverage_threshold_impl(c, true);
}

ComparisonVerdict coverage_winner(double rate_ratio_half_to_full,
                                  const CoverageParams& c, bool full_form) {
    if (!(rate_ratio_half_to_full > 0))
        throw ValidationError("rate ratio must be positive");
    const double threshold = coverage_threshold_impl(c, full_form);
    return verdict_from_sides(rate_ratio_half_to_full, threshold, false);
}

ComparisonVerdict heatsink_condition(double p_loss_w, double p_loss_half_w,
                                     const ThermalStack& stack,
                                     double arrhenius_a) {
    stack.validate();
    const double r_total = stack.r_jc + stack.r_ca();
    if (!(r_total > 0))
        throw ValidationError("total thermal resistance must be positive");
    BoundaryConstants bc = boundary_constants(arrhenius_a);
    const double lhs = p_loss_w - bc.c1 * p_loss_half_w;
    const double rhs = ((bc.c1 - 1.0) * stack.t_a_c + bc.c2) / r_total;
    return verdict_from_sides(lhs, rhs, true);
}

OperatingPoint evaluate_operating_point(const Scenario& s) {
    ThermalStack stack{require_key(s.t_a_c, "t_a_c"),
                       require_key(s.r_jc, "r_jc"),
                       require_key(s.r_ch, "r_ch"),
                       require_key(s.r_ha, "r_ha")};
    const double p_full = require_key(s.p_loss_w, "p_loss_w");
    const double p_half = require_key(s.p_loss_half_w, "p_loss_half_w");
    if (!(p_full >= 0))
        throw ValidationError("'p_loss_w' must be >= 0");
    if (!(p_half >= 0))
        throw ValidationError("'p_loss_half_w' must be >= 0");
    const double t_j = junction_temperature(stack, p_full);
    const double t_j_h = junction_temperature(stack, p_half);

    PartStressParams params;
    params.lambda_b_fit = require_key(s.lambda_b_fit, "lambda_b_fit");
    params.pi_q = require_key(s.pi_q, "pi_q");
    params.pi_e = require_key(s.pi_e, "pi_e");
    params.arrhenius_a = s.a;

    // A bidirectional switch is a pair of anti-parallel devices.
    const double sw_fit = 2.0 * unidirectional_rate_fit(params, t_j);
    const double sw_h_fit = 2.0 * unidirectional_rate_fit(params, t_j_h);

    CoverageParams coverage{s.p_s, s.gamma, s.chi};
    coverage.validate();
    SwitchRates rates = SwitchRates::from_bidirectional(
        sw_fit * kFitPerHour, sw_h_fit * kFitPerHour, s.chi);
    return {stack, t_j, t_j_h, rates, coverage, p_full, p_half, s.a};
}

const char* to_string(SweepParam p) {
    switch (p) {
        case SweepParam::t_a: return "t_a";
        case SweepParam::p_loss_scale: return "p_loss_scale";
        case SweepParam::r_ca: return "r_ca";
    }
    return "?";
}

std::optional<SweepParam> sweep_param_from_string(const std::string& name) {
    for (SweepParam p :
         {SweepParam::t_a, SweepParam::p_loss_scale, SweepParam::r_ca})
        if (name == to_string(p)) return p;
    return std::nullopt;
}

std::vector<SweepRow> sensitivity_sweep(const Scenario& base, SweepParam param,
                                        const std::vector<double>& grid) {
    if (grid.empty()) throw ValidationError("sweep grid is empty");
    bool nondecreasing = true, nonincreasing = true;
    for (size_t i = 1; i < grid.size(); ++i) {
        nondecreasing &= grid[i] >= grid[i - 1];
        nonincreasing &= grid[i] <= grid[i - 1];
    }
    if (!nondecreasing && !nonincreasing)
        throw ValidationError("sweep grid must be monotone");

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const double value = grid[i];
        Scenario s = base;
        switch (param) {
            case SweepParam::t_a:
                s.t_a_c = value;
                break;
            case SweepParam::p_loss_scale:
                s.p_loss_w = require_key(base.p_loss_w, "p_loss_w") * value;
                s.p_loss_half_w =
                    require_key(base.p_loss_half_w, "p_loss_half_w") * value;
                break;
            case SweepParam::r_ca:
                s.r_ch = 0.0;
                s.r_ha = value;
                break;
        }
        try {
            OperatingPoint op = evaluate_operating_point(s);
            SweepRow row;
            row.value = value;
            row.mttf_sh_p_h = mttf_closed_form(Topology::shunt_parallel,
                                               op.rates, op.coverage);
            row.mttf_sh_sb_h = mttf_closed_form(Topology::shunt_standby,
                                                op.rates, op.coverage);
            row.mttf_s_p_h = mttf_closed_form(Topology::series_parallel,
                                              op.rates, op.coverage);
            row.mttf_s_sb_h = mttf_closed_form(Topology::series_standby,
                                               op.rates, op.coverage);
            row.winner = heatsink_condition(op.p_loss_w, op.p_loss_half_w,
                                            op.stack, op.arrhenius_a)
                             .region;
            rows.push_back(row);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "sweep grid index " << i << " (value " << value
                << "): " << e.what();
            throw ValidationError(msg.str());
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const SweepRow& a, const SweepRow& b) {
                  return a.value < b.value;
              });
    return rows;
}

}  // namespace sfcl
