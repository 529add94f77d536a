#include "sfcl/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "sfcl/errors.hpp"

namespace sfcl {

namespace {

double parse_number(const std::string& key, const std::string& value) {
    char* end = nullptr;
    double x = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size() ||
        !std::isfinite(x))
        throw ValidationError("scenario key '" + key + "' has bad value '" +
                              value + "'");
    return x;
}

void check_range(const std::string& key, double x, double lo, double hi) {
    if (!(x >= lo && x <= hi)) {
        std::ostringstream msg;
        msg << "scenario key '" << key << "' = " << x << " must lie in ["
            << lo << ", " << hi << "]";
        throw ValidationError(msg.str());
    }
}

void check_min(const std::string& key, double x, double lo) {
    if (!(x >= lo))
        throw ValidationError("scenario key '" + key + "' must be >= " +
                              std::to_string(lo));
}

void check_positive(const std::string& key, double x) {
    if (!(x > 0))
        throw ValidationError("scenario key '" + key + "' must be positive");
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
    Scenario s;

    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> setters = {
        {"topology",
         [&](const std::string& k, const std::string& v) {
             auto t = topology_from_string(v);
             if (!t)
                 throw ValidationError("scenario key '" + k +
                                       "' names unknown topology '" + v + "'");
             s.topology = *t;
         }},
        {"p_s", [&](const std::string& k, const std::string& v) {
             s.p_s = parse_number(k, v); check_range(k, s.p_s, 0, 1); }},
        {"gamma", [&](const std::string& k, const std::string& v) {
             s.gamma = parse_number(k, v); check_range(k, s.gamma, 0, 1); }},
        {"chi", [&](const std::string& k, const std::string& v) {
             s.chi = parse_number(k, v); check_range(k, s.chi, 0, 1); }},
        {"a", [&](const std::string& k, const std::string& v) {
             s.a = parse_number(k, v); check_positive(k, s.a); }},
        {"lambda_b_fit", [&](const std::string& k, const std::string& v) {
             s.lambda_b_fit = parse_number(k, v);
             check_min(k, *s.lambda_b_fit, 0); }},
        {"pi_q", [&](const std::string& k, const std::string& v) {
             s.pi_q = parse_number(k, v); check_positive(k, *s.pi_q); }},
        {"pi_e", [&](const std::string& k, const std::string& v) {
             s.pi_e = parse_number(k, v); check_positive(k, *s.pi_e); }},
        {"t_a_c", [&](const std::string& k, const std::string& v) {
             s.t_a_c = parse_number(k, v); }},
        {"r_jc", [&](const std::string& k, const std::string& v) {
             s.r_jc = parse_number(k, v); check_min(k, *s.r_jc, 0); }},
        {"r_ch", [&](const std::string& k, const std::string& v) {
             s.r_ch = parse_number(k, v); check_min(k, *s.r_ch, 0); }},
        {"r_ha", [&](const std::string& k, const std::string& v) {
             s.r_ha = parse_number(k, v); check_min(k, *s.r_ha, 0); }},
        {"p_loss_w", [&](const std::string& k, const std::string& v) {
             s.p_loss_w = parse_number(k, v); check_min(k, *s.p_loss_w, 0); }},
        {"p_loss_half_w", [&](const std::string& k, const std::string& v) {
             s.p_loss_half_w = parse_number(k, v);
             check_min(k, *s.p_loss_half_w, 0); }},
        {"mttr_days", [&](const std::string& k, const std::string& v) {
             s.mttr_days = parse_number(k, v); check_min(k, *s.mttr_days, 0); }},
        {"c0_usd_per_ka", [&](const std::string& k, const std::string& v) {
             s.c0_usd_per_ka = parse_number(k, v);
             check_min(k, *s.c0_usd_per_ka, 0); }},
        {"i_rating_ka", [&](const std::string& k, const std::string& v) {
             s.i_rating_ka = parse_number(k, v);
             check_min(k, *s.i_rating_ka, 0); }},
        {"c_l0_usd_per_kwh", [&](const std::string& k, const std::string& v) {
             s.c_l0_usd_per_kwh = parse_number(k, v);
             check_min(k, *s.c_l0_usd_per_kwh, 0); }},
        {"c_lt_usd_per_ka_day", [&](const std::string& k, const std::string& v) {
             s.c_lt_usd_per_ka_day = parse_number(k, v);
             check_min(k, *s.c_lt_usd_per_ka_day, 0); }},
        {"c_d0_usd_per_day", [&](const std::string& k, const std::string& v) {
             s.c_d0_usd_per_day = parse_number(k, v);
             check_min(k, *s.c_d0_usd_per_day, 0); }},
        {"f_sw_hz", [&](const std::string& k, const std::string& v) {
             s.f_sw_hz = parse_number(k, v); check_min(k, s.f_sw_hz, 0); }},
        {"e_on_j", [&](const std::string& k, const std::string& v) {
             s.e_on_j = parse_number(k, v); check_min(k, s.e_on_j, 0); }},
        {"e_off_j", [&](const std::string& k, const std::string& v) {
             s.e_off_j = parse_number(k, v); check_min(k, s.e_off_j, 0); }},
        {"v0_v", [&](const std::string& k, const std::string& v) {
             s.v0_v = parse_number(k, v); check_min(k, *s.v0_v, 0); }},
        {"r_s_ohm", [&](const std::string& k, const std::string& v) {
             s.r_s_ohm = parse_number(k, v); check_min(k, *s.r_s_ohm, 0); }},
        {"waveform_full_csv", [&](const std::string&, const std::string& v) {
             s.waveform_full_csv = v; }},
        {"waveform_half_csv", [&](const std::string&, const std::string& v) {
             s.waveform_half_csv = v; }},
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("scenario line " + std::to_string(lineno) +
                                  " is not 'key = value'");
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));

        auto it = setters.find(key);
        if (it == setters.end())
            throw ValidationError("unknown scenario key '" + key + "'");
        it->second(key, value);
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open scenario file '" + path + "'");
    return parse_scenario(in);
}

double require_key(const std::optional<double>& value, const char* key) {
    if (!value)
        throw ValidationError(std::string("scenario key '") + key +
                              "' is required but missing");
    return *value;
}

}  // namespace sfcl
