#include "sfcl/cost.hpp"

#include <algorithm>

#include "sfcl/errors.hpp"
#include "sfcl/scenario.hpp"

namespace sfcl {

void CostParams::validate() const {
    if (!(c0_usd_per_ka >= 0))
        throw ValidationError("'c0_usd_per_ka' must be >= 0");
    if (!(i_rating_ka >= 0))
        throw ValidationError("'i_rating_ka' must be >= 0");
    if (x_switches < 1)
        throw ValidationError("'x_switches' must be >= 1");
    if (!(c_l0_usd_per_kwh >= 0))
        throw ValidationError("'c_l0_usd_per_kwh' must be >= 0");
    if (!(c_lt_usd_per_ka_day >= 0))
        throw ValidationError("'c_lt_usd_per_ka_day' must be >= 0");
    if (!(c_d0_usd_per_day >= 0))
        throw ValidationError("'c_d0_usd_per_day' must be >= 0");
    if (!(mttr_days >= 0))
        throw ValidationError("'mttr_days' must be >= 0");
}

double investment_cost(const CostParams& p) {
    p.validate();
    return p.x_switches * p.c0_usd_per_ka * p.i_rating_ka;
}

CostBill levelized_cost(const CostParams& p, double mttf_h,
                        double p_loss_total_w) {
    p.validate();
    const double mttr_h = p.mttr_days * kHoursPerDay;
    if (!(mttf_h + mttr_h > 0))
        throw ValidationError("MTTF + MTTR must be positive");

    CostBill bill;
    bill.mttf_h = mttf_h;
    bill.c_inst = investment_cost(p);
    bill.c_loss = (p_loss_total_w / 1000.0) * mttf_h * p.c_l0_usd_per_kwh;
    bill.c_repair =
        bill.c_inst + p.c_lt_usd_per_ka_day * p.i_rating_ka * p.mttr_days;
    bill.c_outage = p.c_d0_usd_per_day * p.mttr_days;
    bill.lc_per_mh = bill.total() * 1e6 / (mttf_h + mttr_h);
    return bill;
}

double configuration_loss_w(Topology t, double p_loss_w,
                            double p_loss_half_w) {
    switch (t) {
        case Topology::shunt_parallel:
            return 4.0 * p_loss_half_w;  // two modules, four devices, half load
        case Topology::series_parallel:
            return 4.0 * p_loss_w;       // two modules in series, full load
        case Topology::shunt_standby:
        case Topology::series_standby:
        case Topology::non_redundant:
            return 2.0 * p_loss_w;       // one conducting module
    }
    throw ValidationError("unknown topology");
}

namespace {

CostParams cost_params_from_scenario(const Scenario& s, Topology t) {
    CostParams p;
    p.c0_usd_per_ka = require_key(s.c0_usd_per_ka, "c0_usd_per_ka");
    p.i_rating_ka = require_key(s.i_rating_ka, "i_rating_ka");
    p.x_switches = (t == Topology::non_redundant) ? 1 : 2;
    p.c_l0_usd_per_kwh = require_key(s.c_l0_usd_per_kwh, "c_l0_usd_per_kwh");
    p.c_lt_usd_per_ka_day =
        require_key(s.c_lt_usd_per_ka_day, "c_lt_usd_per_ka_day");
    p.c_d0_usd_per_day = require_key(s.c_d0_usd_per_day, "c_d0_usd_per_day");
    p.mttr_days = require_key(s.mttr_days, "mttr_days");
    return p;
}

}  // namespace

CostBill cost_for_topology(const Scenario& s, Topology t) {
    OperatingPoint op = evaluate_operating_point(s);
    const double mttf = mttf_closed_form(t, op.rates, op.coverage);
    const double loss =
        configuration_loss_w(t, op.p_loss_w, op.p_loss_half_w);
    return levelized_cost(cost_params_from_scenario(s, t), mttf, loss);
}

std::vector<std::pair<Topology, CostBill>> rank_configurations(
    const Scenario& s) {
    std::vector<std::pair<Topology, CostBill>> out;
    out.reserve(kAllTopologies.size());
    for (Topology t : kAllTopologies)
        out.emplace_back(t, cost_for_topology(s, t));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                         return a.second.lc_per_mh < b.second.lc_per_mh;
                     });
    return out;
}

}  // namespace sfcl
