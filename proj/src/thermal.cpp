#include "sfcl/thermal.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sfcl/errors.hpp"

namespace sfcl {

void ThermalStack::validate() const {
    if (!(r_jc >= 0)) throw ValidationError("'r_jc' must be >= 0");
    if (!(r_ch >= 0)) throw ValidationError("'r_ch' must be >= 0");
    if (!(r_ha >= 0)) throw ValidationError("'r_ha' must be >= 0");
    if (!std::isfinite(t_a_c))
        throw ValidationError("'t_a_c' must be finite");
}

double power_loss(const LossSpec& spec) {
    if (spec.samples.empty())
        throw ValidationError("loss waveform has no samples");
    if (!(spec.f_sw_hz >= 0)) throw ValidationError("'f_sw_hz' must be >= 0");
    if (!(spec.e_on_j >= 0) || !(spec.e_off_j >= 0))
        throw ValidationError("switching energies must be >= 0");
    if (!(spec.v_0 >= 0)) throw ValidationError("'v_0' must be >= 0");
    if (!(spec.r_s >= 0)) throw ValidationError("'r_s' must be >= 0");

    double period = 0.0;
    double conduction_energy = 0.0;
    for (const auto& s : spec.samples) {
        if (!(s.seconds > 0))
            throw ValidationError("sampling periods must be positive");
        period += s.seconds;
        conduction_energy += (spec.v_0 + spec.r_s * s.amps) * s.amps * s.seconds;
    }
    return spec.f_sw_hz * (spec.e_on_j + spec.e_off_j) +
           conduction_energy / period;
}

double junction_temperature(const ThermalStack& stack, double p_loss_w) {
    stack.validate();
    return stack.t_a_c + p_loss_w * (stack.r_jc + stack.r_ca());
}

double junction_from_case(double t_case_c, double p_loss_w, double r_jc) {
    if (!(r_jc >= 0)) throw ValidationError("'r_jc' must be >= 0");
    return t_case_c + p_loss_w * r_jc;
}

std::vector<CurrentSample> read_waveform_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError("waveform CSV is empty");
    // Tolerate surrounding whitespace and a trailing CR in the header.
    std::string header;
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) header += c;
    if (header != "t_s,i_a")
        throw ValidationError("waveform CSV header must be 't_s,i_a'");

    std::vector<double> times, currents;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ss(line);
        std::string t_str, i_str;
        if (!std::getline(ss, t_str, ',') || !std::getline(ss, i_str))
            throw ValidationError("waveform CSV line " +
                                  std::to_string(lineno) + " is malformed");
        char* end = nullptr;
        double t = std::strtod(t_str.c_str(), &end);
        double i = std::strtod(i_str.c_str(), &end);
        if (!std::isfinite(t) || !std::isfinite(i))
            throw ValidationError("waveform CSV line " +
                                  std::to_string(lineno) + " is malformed");
        if (!times.empty() && !(t > times.back()))
            throw ValidationError("waveform time column must be strictly "
                                  "increasing (line " +
                                  std::to_string(lineno) + ")");
        times.push_back(t);
        currents.push_back(i);
    }
    if (times.size() < 2)
        throw ValidationError("waveform CSV needs at least two rows");

    std::vector<CurrentSample> samples;
    samples.reserve(times.size() - 1);
    for (size_t k = 0; k + 1 < times.size(); ++k)
        samples.push_back({currents[k], times[k + 1] - times[k]});
    return samples;
}

std::vector<CurrentSample> load_waveform_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open waveform file '" + path + "'");
    return read_waveform_csv(in);
}

}  // namespace sfcl
