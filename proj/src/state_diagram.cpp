#include "sfcl/state_diagram.hpp"

#include <cctype>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

#include "sfcl/errors.hpp"
#include "sfcl/failure.hpp"

namespace sfcl {

void StateDiagram::add_state(const std::string& name, StateKind kind) {
    if (index_of(name))
        throw ValidationError("duplicate state '" + name + "'");
    if (name.empty())
        throw ValidationError("state name must not be empty");
    states_.push_back({name, kind});
}

void StateDiagram::add_transition(const std::string& from,
                                  const std::string& to,
                                  double rate_per_hour) {
    auto fi = index_of(from);
    auto ti = index_of(to);
    if (!fi) throw ValidationError("unknown state '" + from + "'");
    if (!ti) throw ValidationError("unknown state '" + to + "'");
    for (auto& t : transitions_) {
        if (t.from == *fi && t.to == *ti) {
            t.rate_per_hour += rate_per_hour;  // parallel edges merge
            return;
        }
    }
    transitions_.push_back({*fi, *ti, rate_per_hour});
}

void StateDiagram::set_initial(const std::string& name) {
    auto i = index_of(name);
    if (!i) throw ValidationError("unknown state '" + name + "'");
    initial_ = *i;
}

std::optional<int> StateDiagram::index_of(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(states_.size()); ++i)
        if (states_[i].name == name) return i;
    return std::nullopt;
}

void StateDiagram::validate() const {
    if (states_.empty()) throw ValidationError("diagram has no states");
    if (initial_ < 0) throw ValidationError("initial state is not set");
    if (states_[initial_].kind != StateKind::transient)
        throw ValidationError("initial state '" + states_[initial_].name +
                              "' must be transient");

    for (const auto& t : transitions_) {
        const std::string& from = states_[t.from].name;
        const std::string& to = states_[t.to].name;
        if (states_[t.from].kind == StateKind::absorbing)
            throw ValidationError("transition out of absorbing state '" +
                                  from + "'");
        if (t.from == t.to)
            throw ValidationError("self-transition at state '" + from + "'");
        if (!(t.rate_per_hour >= 0) || !std::isfinite(t.rate_per_hour))
            throw ValidationError("transition " + from + " -> " + to +
                                  " has invalid rate");
    }

    // Breadth-first reachability over positive-rate transitions.
    std::vector<bool> seen(states_.size(), false);
    std::deque<int> queue{initial_};
    seen[initial_] = true;
    bool absorbing_reached = false;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        if (states_[s].kind == StateKind::absorbing) {
            absorbing_reached = true;
            continue;
        }
        for (const auto& t : transitions_) {
            if (t.from == s && t.rate_per_hour > 0 && !seen[t.to]) {
                seen[t.to] = true;
                queue.push_back(t.to);
            }
        }
    }
    if (!absorbing_reached)
        throw ValidationError(
            "no absorbing state is reachable from initial state '" +
            states_[initial_].name + "'");
}

namespace {

bool is_identifier(const std::string& tok) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct RawTransition {
    std::string from, to;
    double rate_fit;
};

}  // namespace

StateDiagram parse_state_diagram(std::istream& in) {
    std::vector<RawTransition> raw;
    std::vector<std::string> absorbing;
    std::string initial;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";

        if (line.rfind("absorbing:", 0) == 0) {
            std::istringstream ss(line.substr(10));
            std::string tok;
            while (ss >> tok) {
                if (!is_identifier(tok))
                    throw ValidationError("bad state identifier '" + tok +
                                          "'" + where);
                absorbing.push_back(tok);
            }
            continue;
        }
        if (line.rfind("initial:", 0) == 0) {
            initial = strip(line.substr(8));
            if (!is_identifier(initial))
                throw ValidationError("bad initial state '" + initial + "'" +
                                      where);
            continue;
        }

        auto arrow = line.find("->");
        auto colon = line.find(':', arrow == std::string::npos ? 0 : arrow);
        if (arrow == std::string::npos || colon == std::string::npos)
            throw ValidationError("expected 'FROM -> TO : RATE_FIT'" + where);
        std::string from = strip(line.substr(0, arrow));
        std::string to = strip(line.substr(arrow + 2, colon - arrow - 2));
        std::string rate_str = strip(line.substr(colon + 1));
        if (!is_identifier(from) || !is_identifier(to))
            throw ValidationError("bad state identifier in transition" +
                                  where);
        char* end = nullptr;
        double rate_fit = std::strtod(rate_str.c_str(), &end);
        if (end != rate_str.c_str() + rate_str.size() || rate_str.empty())
            throw ValidationError("bad rate '" + rate_str + "'" + where);
        raw.push_back({from, to, rate_fit});
    }

    if (initial.empty())
        throw ValidationError("diagram file has no 'initial:' line");

    StateDiagram d;
    auto ensure_state = [&](const std::string& name) {
        if (!d.index_of(name)) d.add_state(name, StateKind::transient);
    };
    ensure_state(initial);
    for (const auto& t : raw) {
        ensure_state(t.from);
        ensure_state(t.to);
    }
    for (const auto& name : absorbing)
        if (!d.index_of(name)) d.add_state(name, StateKind::absorbing);

    // Absorbing markers may refer to states already seen in transitions.
    StateDiagram out;
    for (const auto& s : d.states()) {
        bool is_abs = false;
        for (const auto& name : absorbing) is_abs |= (name == s.name);
        out.add_state(s.name, is_abs ? StateKind::absorbing
                                     : StateKind::transient);
    }
    for (const auto& t : raw)
        out.add_transition(t.from, t.to, t.rate_fit * kFitPerHour);
    out.set_initial(initial);
    return out;
}

StateDiagram load_state_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open diagram file '" + path + "'");
    return parse_state_diagram(in);
}

std::string format_state_diagram(const StateDiagram& d) {
    std::ostringstream out;
    char buf[64];
    for (const auto& t : d.transitions()) {
        std::snprintf(buf, sizeof buf, "%.17g",
                      t.rate_per_hour / kFitPerHour);
        out << d.states()[t.from].name << " -> " << d.states()[t.to].name
            << " : " << buf << "\n";
    }
    out << "absorbing:";
    for (const auto& s : d.states())
        if (s.kind == StateKind::absorbing) out << " " << s.name;
    out << "\n";
    out << "initial: " << d.states()[d.initial_index()].name << "\n";
    return out.str();
}

}  // namespace sfcl
