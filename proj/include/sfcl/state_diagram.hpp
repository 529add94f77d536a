#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sfcl {

enum class StateKind { transient, absorbing };

/// Labeled state-space diagram of a non-repairable system: transient states
/// with rate-labeled transitions into one or more absorbing (failed) states.
/// Rates are failures/hour. Parallel transitions between the same state pair
/// are summed into a single rate.
class StateDiagram {
public:
    struct State {
        std::string name;
        StateKind kind;
    };
    struct Transition {
        int from;
        int to;
        double rate_per_hour;
    };

    void add_state(const std::string& name, StateKind kind);
    void add_transition(const std::string& from, const std::string& to,
                        double rate_per_hour);
    void set_initial(const std::string& name);

    const std::vector<State>& states() const { return states_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    int initial_index() const { return initial_; }
    std::optional<int> index_of(const std::string& name) const;

    /// Throws ValidationError naming the offending state or transition when
    /// any invariant is violated:
    ///  - no transition may originate at an absorbing state,
    ///  - rates are >= 0 and no self-transitions exist,
    ///  - the initial state is set and transient,
    ///  - at least one absorbing state is reachable from the initial state
    ///    through positive-rate transitions.
    void validate() const;

private:
    std::vector<State> states_;
    std::vector<Transition> transitions_;
    int initial_ = -1;
};

// Plain-text exchange format, rates in FIT (1 FIT = 1e-9 failures/hour):
//   S1 -> S2 : 250
//   absorbing: S4 S5
//   initial: S1
// '#' starts a comment. Identifiers are alphanumeric tokens.
StateDiagram parse_state_diagram(std::istream& in);
StateDiagram load_state_diagram(const std::string& path);
std::string format_state_diagram(const StateDiagram& d);

}  // namespace sfcl
