// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sfcl/cost.hpp"
#include "sfcl/errors.hpp"
#include "sfcl/failure.hpp"
#include "sfcl/markov.hpp"
#include "sfcl/monte_carlo.hpp"
#include "sfcl/scenario.hpp"
#include "sfcl/thermal.hpp"
#include "sfcl/topology.hpp"

using namespace sfcl;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!pass) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

std::mt19937_64 g_rng(424242);

double uniform01() {
    static std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(g_rng);
}

double sample_rate() {
    return std::exp(std::log(1e-9) +
                    uniform01() * (std::log(1e-3) - std::log(1e-9)));
}

// ---------------------------------------------------------------------------
// 1. Markov engine vs closed forms: relative 1e-9 over random samples,
//    series standby at full coverage, in under a second.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int samples = 0;
    bool ok = true;
    for (int rep = 0; rep < 200; ++rep) {
        const SwitchRates r{sample_rate(), sample_rate(), sample_rate(),
                            sample_rate()};
        const CoverageParams c{uniform01(), 1.0, 0.98};
        for (Topology t : {Topology::shunt_parallel, Topology::shunt_standby,
                           Topology::series_parallel}) {
            const double closed = mttf_closed_form(t, r, c);
            const double engine = mttf(build_diagram(t, r, c));
            worst = std::max(worst, std::abs(engine - closed) / closed);
            ++samples;
        }
        const CoverageParams full{1.0, 1.0, 0.98};
        const double closed =
            mttf_closed_form(Topology::series_standby, r, full);
        const double engine =
            mttf(build_diagram(Topology::series_standby, r, full));
        worst = std::max(worst, std::abs(engine - closed) / closed);
        ++samples;
    }
    const double secs = elapsed_s(start);
    ok = worst <= 1e-9 && secs < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "engine vs closed forms, %d samples, worst rel err %.2e, "
                  "%.3f s",
                  samples, worst, secs);
    report(1, ok, buf);
}

// ---------------------------------------------------------------------------
// 2. Perfect-coverage closed forms at lambda_sw = lambda_sw_h, and the
//    standby pair identity for all inputs at full coverage.
void criterion_2() {
    const CoverageParams c{1.0, 1.0, 0.98};
    double worst = 0.0;
    bool pair_identical = true;
    for (int rep = 0; rep < 200; ++rep) {
        const double sw = sample_rate();
        const SwitchRates equal =
            SwitchRates::from_bidirectional(sw, sw, uniform01());
        const double shp = mttf_closed_form(Topology::shunt_parallel, equal, c);
        const double shsb =
            mttf_closed_form(Topology::shunt_standby, equal, c);
        const double ssb =
            mttf_closed_form(Topology::series_standby, equal, c);
        const double sp =
            mttf_closed_form(Topology::series_parallel, equal, c);
        worst = std::max(worst, std::abs(shp - 1.5 / sw) / (1.5 / sw));
        worst = std::max(worst, std::abs(shsb - 2.0 / sw) / (2.0 / sw));
        worst = std::max(worst, std::abs(sp - 1.5 / sw) / (1.5 / sw));
        pair_identical &= (shsb == ssb);

        // pair equality must hold bit for bit on arbitrary rates too
        const SwitchRates any{sample_rate(), sample_rate(), sample_rate(),
                              sample_rate()};
        pair_identical &=
            mttf_closed_form(Topology::shunt_standby, any, c) ==
            mttf_closed_form(Topology::series_standby, any, c);
    }
    const double tol = 4.0 * std::numeric_limits<double>::epsilon();
    const bool ok = worst <= tol && pair_identical;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "perfect-coverage values exact to %.1e (worst %.2e), "
                  "standby pair %s",
                  tol, worst, pair_identical ? "bit-identical" : "DIFFERS");
    report(2, ok, buf);
}

// ---------------------------------------------------------------------------
// 3. Boundary constants for a = 3082.
void criterion_3() {
    BoundaryConstants bc = boundary_constants(3082.0);
    const bool ok = bc.c1 >= 1.1298 && bc.c1 <= 1.1318 && bc.c2 >= 17.848 &&
                    bc.c2 <= 17.868;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "C1 = %.6f in [1.1298, 1.1318], C2 = %.5f in "
                  "[17.848, 17.868]",
                  bc.c1, bc.c2);
    report(3, ok, buf);
}

// ---------------------------------------------------------------------------
// 4. Imperfect-coverage threshold at full coverage equals one half,
//    consistent with the perfect-coverage boundary ratio of 2.
void criterion_4() {
    const CoverageParams c{1.0, 1.0, 0.98};
    const double threshold = imperfect_coverage_threshold(c);
    const bool half = std::abs(threshold - 0.5) <= 1e-12;
    const bool consistent =
        std::abs(1.0 / threshold - 2.0) <= 1e-11 &&
        perfect_coverage_winner(2.0).region == Preferred::boundary;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "threshold(chi=0.98, gamma=1, P=1) = %.15f, boundary ratio "
                  "%.12f",
                  threshold, 1.0 / threshold);
    report(4, half && consistent, buf);
}

// ---------------------------------------------------------------------------
// 5. Measured-case temperature arithmetic and the heatsink verdict.
void criterion_5() {
    const double low = junction_from_case(44.46, 0.335, 1.3);
    const double high = junction_from_case(104.46, 1.34, 1.3);
    ThermalStack stack{25.0, 1.3, 0.0, 58.7};
    const auto verdict = heatsink_condition(1.34, 0.335, stack, 3082.0);
    const bool ok = std::abs(low - 44.90) <= 0.005 &&
                    std::abs(high - 106.20) <= 0.005 &&
                    verdict.region == Preferred::shunt_parallel;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "T_j = %.4f (44.90 +/- 0.005), %.4f (106.20 +/- 0.005), "
                  "heatsink verdict %s",
                  low, high, to_string(verdict.region));
    report(5, ok, buf);
}

// ---------------------------------------------------------------------------
// 6. Monte Carlo cross-validation at one million trials per diagram.
void criterion_6(const Scenario& scenario) {
    OperatingPoint op = evaluate_operating_point(scenario);
    McConfig cfg;
    cfg.trials = 1'000'000;
    cfg.seed = 20240229;

    bool ok = true;
    std::string detail = "1e6 trials:";
    for (Topology t : kAllTopologies) {
        if (!diagram_matches_closed_form(t, op.coverage)) continue;
        const auto start = std::chrono::steady_clock::now();
        const double analytic = mttf_closed_form(t, op.rates, op.coverage);
        McResult mc = simulate_mttf(build_diagram(t, op.rates, op.coverage),
                                    cfg);
        const double secs = elapsed_s(start);
        const double z = (mc.mean_ttf_h - analytic) / mc.std_error_h;
        ok &= std::abs(z) < 3.0 && secs < 60.0 && mc.censored == 0;
        char buf[64];
        std::snprintf(buf, sizeof buf, " %s z=%.2f (%.1fs)", to_string(t), z,
                      secs);
        detail += buf;
    }

    // determinism under a fixed seed
    McResult a = simulate_mttf(
        build_diagram(Topology::shunt_parallel, op.rates, op.coverage), cfg);
    McResult b = simulate_mttf(
        build_diagram(Topology::shunt_parallel, op.rates, op.coverage), cfg);
    const bool deterministic =
        a.mean_ttf_h == b.mean_ttf_h && a.std_error_h == b.std_error_h;
    ok &= deterministic;
    detail += deterministic ? ", deterministic" : ", NONDETERMINISTIC";
    report(6, ok, detail);
}

// ---------------------------------------------------------------------------
// 7. Cost ranking of the bundled scenario.
void criterion_7(const Scenario& scenario) {
    auto ranked = rank_configurations(scenario);
    const std::vector<Topology> expected = {
        Topology::shunt_parallel, Topology::shunt_standby,
        Topology::series_standby, Topology::series_parallel,
        Topology::non_redundant};
    bool order_ok = ranked.size() == expected.size();
    for (size_t i = 0; order_ok && i < expected.size(); ++i)
        order_ok &= ranked[i].first == expected[i];
    const bool strict = ranked[0].second.lc_per_mh < ranked[1].second.lc_per_mh &&
                        ranked[2].second.lc_per_mh < ranked[3].second.lc_per_mh &&
                        ranked[3].second.lc_per_mh < ranked[4].second.lc_per_mh;
    const bool pair_equal =
        ranked[1].second.lc_per_mh == ranked[2].second.lc_per_mh;
    std::string detail = "levelized-cost order:";
    for (const auto& [t, bill] : ranked) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " %s=%.1f", to_string(t),
                      bill.lc_per_mh);
        detail += buf;
    }
    report(7, order_ok && strict && pair_equal, detail);
}

// ---------------------------------------------------------------------------
// 8. Property suite.
void criterion_8() {
    bool ok = true;
    std::string failed;

    // rate scaling inverts engine MTTF
    for (int rep = 0; rep < 100 && ok; ++rep) {
        const SwitchRates r{sample_rate(), sample_rate(), sample_rate(),
                            sample_rate()};
        const CoverageParams c{uniform01(), 1.0, 0.98};
        const double k = std::exp((uniform01() - 0.5) * 8.0);
        const SwitchRates kr{k * r.lambda_oc, k * r.lambda_sc,
                             k * r.lambda_oc_h, k * r.lambda_sc_h};
        const double base = mttf(build_diagram(Topology::shunt_parallel, r, c));
        const double scaled =
            mttf(build_diagram(Topology::shunt_parallel, kr, c));
        if (std::abs(scaled - base / k) > 1e-9 * (base / k)) {
            ok = false;
            failed = "rate scaling";
        }
    }

    // temperature factor is exactly one at the reference temperature
    for (int rep = 0; rep < 100 && ok; ++rep) {
        if (temperature_factor(25.0, 10.0 + 10000.0 * uniform01()) != 1.0) {
            ok = false;
            failed = "pi_T(25 C) = 1";
        }
    }

    // mode split reconstructs exactly
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        const double sw = sample_rate();
        RateSplit split = split_rates(sw, uniform01());
        if (split.lambda_sc + split.lambda_oc != sw) {
            ok = false;
            failed = "mode-split reconstruction";
        }
    }

    // junction temperature is affine and monotone in loss
    for (int rep = 0; rep < 100 && ok; ++rep) {
        ThermalStack stack{50.0 * uniform01(), 2.0 * uniform01(),
                           uniform01(), 80.0 * uniform01()};
        const double p1 = 3.0 * uniform01(), p2 = 3.0 * uniform01();
        const double affine = junction_temperature(stack, p1) +
                              junction_temperature(stack, p2) -
                              junction_temperature(stack, 0.0);
        if (std::abs(junction_temperature(stack, p1 + p2) - affine) >
                1e-9 * std::max(1.0, std::abs(affine)) ||
            junction_temperature(stack, p1 + 1.0) <
                junction_temperature(stack, p1)) {
            ok = false;
            failed = "junction-temperature affinity";
        }
    }

    // levelized cost is homogeneous in the price inputs
    for (int rep = 0; rep < 100 && ok; ++rep) {
        CostParams p;
        p.c0_usd_per_ka = 100.0 + 900.0 * uniform01();
        p.i_rating_ka = 0.01 + uniform01();
        p.x_switches = 2;
        p.c_l0_usd_per_kwh = 15.0 * uniform01();
        p.c_lt_usd_per_ka_day = 500.0 * uniform01();
        p.c_d0_usd_per_day = 2000.0 * uniform01();
        p.mttr_days = 40.0 * uniform01();
        const double mttf_h = 1e4 + 1e6 * uniform01();
        const double loss = 3.0 * uniform01();
        const double k = 0.1 + 10.0 * uniform01();

        CostBill base = levelized_cost(p, mttf_h, loss);
        CostParams kp = p;
        kp.c0_usd_per_ka *= k;
        kp.c_l0_usd_per_kwh *= k;
        kp.c_lt_usd_per_ka_day *= k;
        kp.c_d0_usd_per_day *= k;
        CostBill kb = levelized_cost(kp, mttf_h, loss);
        if (std::abs(kb.lc_per_mh - k * base.lc_per_mh) >
            1e-12 * k * base.lc_per_mh) {
            ok = false;
            failed = "levelized-cost homogeneity";
        }
    }

    report(8, ok,
           ok ? "rate scaling, pi_T(25)=1, mode split, junction affinity, "
                "cost homogeneity all hold"
              : "property failed: " + failed);
}

}  // namespace

int main() {
    try {
        const Scenario scenario =
            load_scenario(std::string(SFCL_DATA_DIR) + "/paper_repro.scn");
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6(scenario);
        criterion_7(scenario);
        criterion_8();
    } catch (const std::exception& e) {
        std::printf("FAIL acceptance harness: %s\n", e.what());
        return 1;
    }
    if (g_failures == 0) {
        std::printf("all acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
