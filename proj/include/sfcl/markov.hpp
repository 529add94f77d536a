#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sfcl/state_diagram.hpp"

namespace sfcl {

/// Stochastic transitional probability matrix of a diagram, using a one-hour
/// time step so that off-diagonal entries are the per-hour rates. Every row
/// sums to 1 (the diagonal absorbs the remainder) and absorbing states are
/// identity rows.
struct TransitionMatrix {
    Eigen::MatrixXd p;                 // n x n
    std::vector<std::string> order;    // row/column state names
    std::vector<bool> absorbing;       // per state
    int initial = 0;                   // index into `order`
};

/// Transient-transient block Q of a transition matrix, state order preserved.
struct TransientBlock {
    Eigen::MatrixXd q;                 // t x t
    std::vector<std::string> order;    // transient state names
    int initial = 0;                   // index into `order`
};

/// Fundamental matrix M = (I - Q)^-1 over the transient states. Entries are
/// the expected hours spent in each transient state before absorption; row
/// sums give mean times to failure.
struct FundamentalMatrix {
    Eigen::MatrixXd m;                 // t x t, hours
    std::vector<std::string> order;
};

// Relative pivot threshold below which I - Q is treated as singular.
inline constexpr double kSingularityThreshold = 1e-12;

/// Builds the transition matrix. Validates the diagram first and rejects any
/// row whose off-diagonal sum reaches 1 (rates too large for the hour step).
TransitionMatrix build_transition_matrix(const StateDiagram& d);

/// Deletes the rows and columns of the absorbing states.
/// Throws ValidationError "nothing to analyze" when no transient state exists.
TransientBlock truncate(const TransitionMatrix& p);

/// Inverts I - Q. Throws InfiniteMttfError when the block is singular, i.e.
/// some occupied state has no path to absorption.
FundamentalMatrix fundamental_matrix(const TransientBlock& block);

/// Mean time to failure in hours from the initial state: the initial-state
/// row sum of the fundamental matrix, computed as one linear solve
/// (I - Q) x = 1.
double mttf(const StateDiagram& d);

}  // namespace sfcl
