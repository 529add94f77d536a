// sfclrel: reliability and levelized-cost analysis of component-level
// redundant switch arrangements for a solid-state fault current limiter.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfcl/cost.hpp"
#include "sfcl/errors.hpp"
#include "sfcl/failure.hpp"
#include "sfcl/markov.hpp"
#include "sfcl/monte_carlo.hpp"
#include "sfcl/scenario.hpp"
#include "sfcl/state_diagram.hpp"
#include "sfcl/thermal.hpp"
#include "sfcl/topology.hpp"

namespace {

struct OutputOptions {
    std::string csv_path;
    std::string precision = "6";

    int digits() const { return precision == "full" ? 17 : 6; }
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--csv", out.csv_path, "also write the result as CSV");
    cmd->add_option("--precision", out.precision,
                    "significant digits: '6' (default) or 'full'")
        ->check(CLI::IsMember({"6", "full"}));
}

std::string fmt_num(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const OutputOptions& out) {
    std::vector<size_t> width(t.header.size());
    for (size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& row : t.rows)
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    auto print_row = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            std::cout << row[c];
            if (c + 1 < row.size())
                std::cout << std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << "\n";
    };
    print_row(t.header);
    for (const auto& row : t.rows) print_row(row);

    if (!out.csv_path.empty()) {
        std::ofstream csv(out.csv_path);
        if (!csv)
            throw sfcl::ValidationError("cannot write CSV file '" +
                                        out.csv_path + "'");
        auto csv_row = [&](const std::vector<std::string>& row) {
            for (size_t c = 0; c < row.size(); ++c) {
                csv << row[c];
                if (c + 1 < row.size()) csv << ",";
            }
            csv << "\n";
        };
        csv_row(t.header);
        for (const auto& row : t.rows) csv_row(row);
    }
}

sfcl::Topology pick_topology(const std::string& flag_value,
                             const sfcl::Scenario* scenario) {
    if (!flag_value.empty()) {
        auto t = sfcl::topology_from_string(flag_value);
        if (!t)
            throw sfcl::ValidationError("unknown topology '" + flag_value +
                                        "'");
        return *t;
    }
    if (scenario && scenario->topology) return *scenario->topology;
    throw sfcl::ValidationError(
        "no topology given (use --topology or a 'topology' scenario key)");
}

void warn_if_unvalidated(sfcl::Topology t, const sfcl::CoverageParams& c) {
    if (!sfcl::diagram_matches_closed_form(t, c))
        std::cerr << "note: the " << sfcl::to_string(t)
                  << " state diagram is validated against its closed form at "
                     "full coverage only\n";
}

// ----------------------------------------------------------------- mttf ---

int run_mttf(const std::string& scenario_path, const std::string& diagram_path,
             const std::string& topology_flag, const OutputOptions& out) {
    const int digits = out.digits();
    if (!diagram_path.empty()) {
        sfcl::StateDiagram d = sfcl::load_state_diagram(diagram_path);
        const double hours = sfcl::mttf(d);
        Table t{{"source", "mttf_h", "mttf_Mh"},
                {{diagram_path, fmt_num(hours, digits),
                  fmt_num(hours / 1e6, digits)}}};
        emit(t, out);
        return 0;
    }
    if (scenario_path.empty())
        throw sfcl::ValidationError("mttf needs --scenario or --diagram");

    sfcl::Scenario s = sfcl::load_scenario(scenario_path);
    sfcl::Topology topo = pick_topology(topology_flag, &s);
    sfcl::OperatingPoint op = sfcl::evaluate_operating_point(s);
    const double closed = sfcl::mttf_closed_form(topo, op.rates, op.coverage);
    const double engine =
        sfcl::mttf(sfcl::build_diagram(topo, op.rates, op.coverage));
    warn_if_unvalidated(topo, op.coverage);

    Table t{{"topology", "mttf_closed_h", "mttf_markov_h", "mttf_Mh",
             "diagram_validated"},
            {{sfcl::to_string(topo), fmt_num(closed, digits),
              fmt_num(engine, digits), fmt_num(closed / 1e6, digits),
              sfcl::diagram_matches_closed_form(topo, op.coverage) ? "yes"
                                                                   : "no"}}};
    emit(t, out);
    return 0;
}

// -------------------------------------------------------------- diagram ---

int run_diagram(const std::string& scenario_path,
                const std::string& topology_flag, const std::string& out_path) {
    sfcl::Scenario s = sfcl::load_scenario(scenario_path);
    sfcl::Topology topo = pick_topology(topology_flag, &s);
    sfcl::OperatingPoint op = sfcl::evaluate_operating_point(s);
    warn_if_unvalidated(topo, op.coverage);
    const std::string text = sfcl::format_state_diagram(
        sfcl::build_diagram(topo, op.rates, op.coverage));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw sfcl::ValidationError("cannot write '" + out_path + "'");
        f << text;
    }
    return 0;
}

// --------------------------------------------------------------- region ---

int run_region(double t_j, double t_j_h, double a, const OutputOptions& out) {
    const int digits = out.digits();
    const double threshold = sfcl::temperature_boundary(t_j_h, a);
    sfcl::Preferred region;
    if (t_j == threshold)
        region = sfcl::Preferred::boundary;
    else
        region = t_j > threshold ? sfcl::Preferred::shunt_parallel
                                 : sfcl::Preferred::standby;
    std::cout << sfcl::to_string(region) << "\n";
    Table t{{"winner", "t_j_c", "t_j_h_c", "threshold_c", "a"},
            {{sfcl::to_string(region), fmt_num(t_j, digits),
              fmt_num(t_j_h, digits), fmt_num(threshold, digits),
              fmt_num(a, digits)}}};
    emit(t, out);
    return 0;
}

// --------------------------------------------------------------- losses ---

// Paths inside a scenario file resolve relative to the file itself.
std::string resolve_near(const std::string& scenario_path,
                         const std::string& file) {
    if (file.empty() || file.front() == '/') return file;
    auto slash = scenario_path.find_last_of('/');
    if (slash == std::string::npos) return file;
    return scenario_path.substr(0, slash + 1) + file;
}

int run_losses(const std::string& waveform_path,
               const std::string& scenario_path, bool half_load,
               const std::optional<double>& v0,
               const std::optional<double>& rs,
               const std::optional<double>& fsw,
               const std::optional<double>& eon,
               const std::optional<double>& eoff, const OutputOptions& out) {
    sfcl::LossSpec spec;
    std::string resolved_waveform = waveform_path;
    if (!scenario_path.empty()) {
        sfcl::Scenario s = sfcl::load_scenario(scenario_path);
        spec.v_0 = sfcl::require_key(s.v0_v, "v0_v");
        spec.r_s = sfcl::require_key(s.r_s_ohm, "r_s_ohm");
        spec.f_sw_hz = s.f_sw_hz;
        spec.e_on_j = s.e_on_j;
        spec.e_off_j = s.e_off_j;
        if (resolved_waveform.empty()) {
            const auto& key = half_load ? s.waveform_half_csv
                                        : s.waveform_full_csv;
            if (key)
                resolved_waveform = resolve_near(scenario_path, *key);
        }
    }
    if (v0) spec.v_0 = *v0;
    if (rs) spec.r_s = *rs;
    if (fsw) spec.f_sw_hz = *fsw;
    if (eon) spec.e_on_j = *eon;
    if (eoff) spec.e_off_j = *eoff;
    if (resolved_waveform.empty())
        throw sfcl::ValidationError(
            "losses needs --waveform or a scenario waveform key");
    spec.samples = sfcl::load_waveform_csv(resolved_waveform);

    const double total = sfcl::power_loss(spec);
    const double switching = spec.f_sw_hz * (spec.e_on_j + spec.e_off_j);
    const int digits = out.digits();
    Table t{{"p_loss_w", "p_conduction_w", "p_switching_w", "samples"},
            {{fmt_num(total, digits), fmt_num(total - switching, digits),
              fmt_num(switching, digits),
              std::to_string(spec.samples.size())}}};
    emit(t, out);
    return 0;
}

// ----------------------------------------------------------------- cost ---

int run_cost(const std::string& scenario_path, const std::string& topology_flag,
             bool rank, const OutputOptions& out) {
    sfcl::Scenario s = sfcl::load_scenario(scenario_path);
    const int digits = out.digits();
    Table t;
    t.header = {"topology", "c_inst",  "c_loss", "c_repair",
                "c_outage", "mttf_h", "lc_per_Mh"};
    auto add_row = [&](sfcl::Topology topo, const sfcl::CostBill& bill) {
        t.rows.push_back({sfcl::to_string(topo), fmt_num(bill.c_inst, digits),
                          fmt_num(bill.c_loss, digits),
                          fmt_num(bill.c_repair, digits),
                          fmt_num(bill.c_outage, digits),
                          fmt_num(bill.mttf_h, digits),
                          fmt_num(bill.lc_per_mh, digits)});
    };
    if (rank) {
        for (const auto& [topo, bill] : sfcl::rank_configurations(s))
            add_row(topo, bill);
    } else {
        sfcl::Topology topo = pick_topology(topology_flag, &s);
        add_row(topo, sfcl::cost_for_topology(s, topo));
    }
    emit(t, out);
    return 0;
}

// ---------------------------------------------------------------- sweep ---

int run_sweep(const std::string& scenario_path, const std::string& param_name,
              double from, double to, unsigned steps,
              const OutputOptions& out) {
    if (steps < 1) throw sfcl::ValidationError("--steps must be >= 1");
    auto param = sfcl::sweep_param_from_string(param_name);
    if (!param)
        throw sfcl::ValidationError("unknown sweep parameter '" + param_name +
                                    "' (t_a, p_loss_scale, r_ca)");
    sfcl::Scenario s = sfcl::load_scenario(scenario_path);

    std::vector<double> grid;
    grid.reserve(steps);
    if (steps == 1) {
        grid.push_back(from);
    } else {
        for (unsigned i = 0; i < steps; ++i)
            grid.push_back(from + (to - from) * static_cast<double>(i) /
                                      static_cast<double>(steps - 1));
    }

    const int digits = out.digits();
    Table t;
    t.header = {"param",       "value",      "mttf_sh_p_h", "mttf_sh_sb_h",
                "mttf_s_p_h", "mttf_s_sb_h", "winner"};
    for (const auto& row : sfcl::sensitivity_sweep(s, *param, grid)) {
        t.rows.push_back({sfcl::to_string(*param), fmt_num(row.value, digits),
                          fmt_num(row.mttf_sh_p_h, digits),
                          fmt_num(row.mttf_sh_sb_h, digits),
                          fmt_num(row.mttf_s_p_h, digits),
                          fmt_num(row.mttf_s_sb_h, digits),
                          sfcl::to_string(row.winner)});
    }
    emit(t, out);
    return 0;
}

// ---------------------------------------------------------- mc-validate ---

int run_mc_validate(const std::string& scenario_path,
                    const std::string& topology_flag, std::uint64_t trials,
                    std::uint64_t seed, double cutoff,
                    const OutputOptions& out) {
    sfcl::Scenario s = sfcl::load_scenario(scenario_path);
    sfcl::OperatingPoint op = sfcl::evaluate_operating_point(s);

    std::vector<sfcl::Topology> topologies;
    if (!topology_flag.empty()) {
        topologies.push_back(pick_topology(topology_flag, &s));
    } else {
        topologies.assign(sfcl::kAllTopologies.begin(),
                          sfcl::kAllTopologies.end());
    }

    sfcl::McConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.max_sim_hours = cutoff;

    const int digits = out.digits();
    Table t;
    t.header = {"topology",    "analytic_mttf_h", "mc_mttf_h",
                "std_error_h", "z_score",         "censored",
                "trials"};
    for (sfcl::Topology topo : topologies) {
        if (!sfcl::diagram_matches_closed_form(topo, op.coverage)) {
            std::cerr << "note: skipping " << sfcl::to_string(topo)
                      << " (diagram validated at full coverage only)\n";
            continue;
        }
        const double analytic =
            sfcl::mttf_closed_form(topo, op.rates, op.coverage);
        sfcl::McResult mc = sfcl::simulate_mttf(
            sfcl::build_diagram(topo, op.rates, op.coverage), cfg);
        const double z = mc.std_error_h > 0
                             ? (mc.mean_ttf_h - analytic) / mc.std_error_h
                             : 0.0;
        t.rows.push_back({sfcl::to_string(topo), fmt_num(analytic, digits),
                          fmt_num(mc.mean_ttf_h, digits),
                          fmt_num(mc.std_error_h, digits), fmt_num(z, digits),
                          std::to_string(mc.censored),
                          std::to_string(mc.trials)});
    }
    emit(t, out);
    return 0;
}

// -------------------------------------------------------------- compare ---

int run_compare(const std::string& scenario_path,
                const std::optional<double>& ratio, bool full_eq24,
                const OutputOptions& out) {
    const int digits = out.digits();
    if (ratio) {
        sfcl::ComparisonVerdict v = sfcl::perfect_coverage_winner(*ratio);
        std::cout << sfcl::to_string(v.region) << "\n";
        Table t{{"winner", "ratio_full_to_half", "boundary_ratio"},
                {{sfcl::to_string(v.region), fmt_num(v.lhs, digits),
                  fmt_num(v.rhs, digits)}}};
        emit(t, out);
        return 0;
    }
    if (scenario_path.empty())
        throw sfcl::ValidationError("compare needs --scenario or --ratio");

    sfcl::Scenario s = sfcl::load_scenario(scenario_path);
    sfcl::OperatingPoint op = sfcl::evaluate_operating_point(s);
    const double ratio_hf = op.rates.lambda_sw_h() / op.rates.lambda_sw();
    sfcl::ComparisonVerdict v =
        sfcl::coverage_winner(ratio_hf, op.coverage, full_eq24);
    sfcl::ComparisonVerdict heat = sfcl::heatsink_condition(
        op.p_loss_w, op.p_loss_half_w, op.stack, op.arrhenius_a);

    std::cout << sfcl::to_string(v.region) << "\n";
    Table t{{"winner", "ratio_half_to_full", "threshold", "t_j_c", "t_j_h_c",
             "lambda_sw_fit", "lambda_sw_h_fit", "heatsink_winner"},
            {{sfcl::to_string(v.region), fmt_num(v.lhs, digits),
              fmt_num(v.rhs, digits), fmt_num(op.t_j_c, digits),
              fmt_num(op.t_j_h_c, digits),
              fmt_num(op.rates.lambda_sw() / sfcl::kFitPerHour, digits),
              fmt_num(op.rates.lambda_sw_h() / sfcl::kFitPerHour, digits),
              sfcl::to_string(heat.region)}}};
    emit(t, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solid-state fault current limiter redundancy analysis"};
    app.require_subcommand(1);

    // mttf
    auto* mttf_cmd =
        app.add_subcommand("mttf", "mean time to failure of a configuration");
    std::string mttf_scenario, mttf_diagram, mttf_topology;
    OutputOptions mttf_out;
    mttf_cmd->add_option("--scenario", mttf_scenario, "scenario file");
    mttf_cmd->add_option("--diagram", mttf_diagram,
                         "state diagram file (FROM -> TO : RATE_FIT)");
    mttf_cmd->add_option("--topology", mttf_topology, "configuration name");
    add_output_options(mttf_cmd, mttf_out);

    // diagram
    auto* diagram_cmd = app.add_subcommand(
        "diagram", "dump a configuration's state diagram as text");
    std::string diagram_scenario, diagram_topology, diagram_out_path;
    diagram_cmd->add_option("--scenario", diagram_scenario, "scenario file")
        ->required();
    diagram_cmd->add_option("--topology", diagram_topology,
                            "configuration name");
    diagram_cmd->add_option("--out", diagram_out_path, "output path");

    // region
    auto* region_cmd = app.add_subcommand(
        "region", "more-reliable region from junction temperatures");
    double region_tj = 0, region_tjh = 0, region_a = sfcl::kDefaultArrheniusA;
    OutputOptions region_out;
    region_cmd->add_option("--tj", region_tj, "full-load junction temp, C")
        ->required();
    region_cmd->add_option("--tjh", region_tjh, "half-load junction temp, C")
        ->required();
    region_cmd->add_option("--a", region_a, "arrhenius constant, K");
    add_output_options(region_cmd, region_out);

    // losses
    auto* losses_cmd =
        app.add_subcommand("losses", "device power loss from a waveform");
    std::string losses_waveform, losses_scenario;
    bool losses_half = false;
    std::optional<double> losses_v0, losses_rs, losses_fsw, losses_eon,
        losses_eoff;
    OutputOptions losses_out;
    losses_cmd->add_option("--waveform", losses_waveform,
                           "current waveform CSV (t_s,i_a)");
    losses_cmd->add_option("--scenario", losses_scenario,
                           "scenario file with v0_v / r_s_ohm");
    losses_cmd->add_flag("--half", losses_half,
                         "use the scenario's half-load waveform");
    losses_cmd->add_option("--v0", losses_v0, "threshold voltage, V");
    losses_cmd->add_option("--rs", losses_rs, "static resistance, ohm");
    losses_cmd->add_option("--fsw", losses_fsw, "switching frequency, Hz");
    losses_cmd->add_option("--eon", losses_eon, "turn-on energy, J");
    losses_cmd->add_option("--eoff", losses_eoff, "turn-off energy, J");
    add_output_options(losses_cmd, losses_out);

    // cost
    auto* cost_cmd =
        app.add_subcommand("cost", "levelized cost of configurations");
    std::string cost_scenario, cost_topology;
    bool cost_rank = false;
    OutputOptions cost_out;
    cost_cmd->add_option("--scenario", cost_scenario, "scenario file")
        ->required();
    cost_cmd->add_option("--topology", cost_topology, "configuration name");
    cost_cmd->add_flag("--rank", cost_rank,
                       "evaluate and sort all configurations");
    add_output_options(cost_cmd, cost_out);

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "sensitivity of MTTF and winner to one parameter");
    std::string sweep_scenario, sweep_param;
    double sweep_from = 0, sweep_to = 0;
    unsigned sweep_steps = 0;
    OutputOptions sweep_out;
    sweep_cmd->add_option("--scenario", sweep_scenario, "scenario file")
        ->required();
    sweep_cmd->add_option("--param", sweep_param,
                          "t_a | p_loss_scale | r_ca")
        ->required();
    sweep_cmd->add_option("--from", sweep_from, "grid start")->required();
    sweep_cmd->add_option("--to", sweep_to, "grid end")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "number of grid points")
        ->required();
    add_output_options(sweep_cmd, sweep_out);

    // mc-validate
    auto* mc_cmd = app.add_subcommand(
        "mc-validate", "Monte Carlo cross-check of analytic MTTFs");
    std::string mc_scenario, mc_topology;
    std::uint64_t mc_trials = 1'000'000, mc_seed = 1;
    double mc_cutoff = 1e12;
    OutputOptions mc_out;
    mc_cmd->add_option("--scenario", mc_scenario, "scenario file")->required();
    mc_cmd->add_option("--topology", mc_topology, "configuration name");
    mc_cmd->add_option("--trials", mc_trials, "number of trials");
    mc_cmd->add_option("--seed", mc_seed, "random seed");
    mc_cmd->add_option("--cutoff", mc_cutoff, "censoring horizon, hours");
    add_output_options(mc_cmd, mc_out);

    // compare
    auto* compare_cmd = app.add_subcommand(
        "compare", "which redundant arrangement is more reliable");
    std::string compare_scenario;
    std::optional<double> compare_ratio;
    bool compare_full24 = false;
    OutputOptions compare_out;
    compare_cmd->add_option("--scenario", compare_scenario, "scenario file");
    compare_cmd->add_option("--ratio", compare_ratio,
                            "full-load to half-load failure-rate ratio");
    compare_cmd->add_flag(
        "--full-eq24", compare_full24,
        "use the full coverage threshold instead of the truncated form");
    add_output_options(compare_cmd, compare_out);

    try {
        app.parse(argc, argv);

        if (mttf_cmd->parsed())
            return run_mttf(mttf_scenario, mttf_diagram, mttf_topology,
                            mttf_out);
        if (diagram_cmd->parsed())
            return run_diagram(diagram_scenario, diagram_topology,
                               diagram_out_path);
        if (region_cmd->parsed())
            return run_region(region_tj, region_tjh, region_a, region_out);
        if (losses_cmd->parsed())
            return run_losses(losses_waveform, losses_scenario, losses_half,
                              losses_v0, losses_rs, losses_fsw, losses_eon,
                              losses_eoff, losses_out);
        if (cost_cmd->parsed())
            return run_cost(cost_scenario, cost_topology, cost_rank, cost_out);
        if (sweep_cmd->parsed())
            return run_sweep(sweep_scenario, sweep_param, sweep_from, sweep_to,
                             sweep_steps, sweep_out);
        if (mc_cmd->parsed())
            return run_mc_validate(mc_scenario, mc_topology, mc_trials,
                                   mc_seed, mc_cutoff, mc_out);
        if (compare_cmd->parsed())
            return run_compare(compare_scenario, compare_ratio, compare_full24,
                               compare_out);
        std::cerr << "error: no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
