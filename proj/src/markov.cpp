#include "sfcl/markov.hpp"

#include <cmath>

#include "sfcl/errors.hpp"

namespace sfcl {

TransitionMatrix build_transition_matrix(const StateDiagram& d) {
    d.validate();
    const int n = static_cast<int>(d.states().size());

    TransitionMatrix out;
    out.p = Eigen::MatrixXd::Zero(n, n);
    out.order.reserve(n);
    out.absorbing.reserve(n);
    for (const auto& s : d.states()) {
        out.order.push_back(s.name);
        out.absorbing.push_back(s.kind == StateKind::absorbing);
    }
    out.initial = d.initial_index();

    for (const auto& t : d.transitions())
        out.p(t.from, t.to) += t.rate_per_hour;

    for (int i = 0; i < n; ++i) {
        if (out.absorbing[i]) {
            out.p(i, i) = 1.0;
            continue;
        }
        double exit = 0.0;  // ascending column order; tests re-sum the same way
        for (int j = 0; j < n; ++j)
            if (j != i) exit += out.p(i, j);
        if (!(exit < 1.0))
            throw ValidationError("off-diagonal rates of state '" +
                                  out.order[i] +
                                  "' sum to >= 1 per hour step");
        out.p(i, i) = 1.0 - exit;
    }
    return out;
}

TransientBlock truncate(const TransitionMatrix& p) {
    std::vector<int> transient;
    int absorbing_count = 0;
    for (int i = 0; i < static_cast<int>(p.absorbing.size()); ++i) {
        if (p.absorbing[i])
            ++absorbing_count;
        else
            transient.push_back(i);
    }
    if (transient.empty())
        throw ValidationError("nothing to analyze: no transient states");
    if (absorbing_count == 0)
        throw ValidationError("no absorbing states");

    const int t = static_cast<int>(transient.size());
    TransientBlock out;
    out.q.resize(t, t);
    out.initial = -1;
    for (int a = 0; a < t; ++a) {
        out.order.push_back(p.order[transient[a]]);
        if (transient[a] == p.initial) out.initial = a;
        for (int b = 0; b < t; ++b)
            out.q(a, b) = p.p(transient[a], transient[b]);
    }
    return out;
}

namespace {

Eigen::FullPivLU<Eigen::MatrixXd> factor_or_throw(Eigen::MatrixXd i_minus_q) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(std::move(i_minus_q));
    lu.setThreshold(kSingularityThreshold);
    if (!lu.isInvertible())
        throw InfiniteMttfError(
            "infinite MTTF: no path to absorption (I - Q is singular)");
    return lu;
}

}  // namespace

FundamentalMatrix fundamental_matrix(const TransientBlock& block) {
    FundamentalMatrix out;
    out.m = factor_or_throw(Eigen::MatrixXd::Identity(block.q.rows(),
                                                      block.q.cols()) -
                            block.q)
                .inverse();
    out.order = block.order;
    return out;
}

double mttf(const StateDiagram& d) {
    d.validate();

    // I - Q assembled directly from the rates: diagonal holds each state's
    // total exit rate, off-diagonals the negated transition rates. Same
    // algebra as the transition-matrix route, but forming 1 - (1 - rate)
    // would wipe out most of a tiny rate's precision.
    std::vector<int> pos(d.states().size(), -1);
    std::vector<int> transient;
    for (int i = 0; i < static_cast<int>(d.states().size()); ++i) {
        if (d.states()[i].kind == StateKind::transient) {
            pos[i] = static_cast<int>(transient.size());
            transient.push_back(i);
        }
    }
    const int t = static_cast<int>(transient.size());

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(t, t);
    for (const auto& tr : d.transitions()) {
        const int from = pos[tr.from];
        a(from, from) += tr.rate_per_hour;
        if (pos[tr.to] >= 0) a(from, pos[tr.to]) -= tr.rate_per_hour;
    }
    for (int i = 0; i < t; ++i) {
        if (!(a(i, i) < 1.0))
            throw ValidationError("off-diagonal rates of state '" +
                                  d.states()[transient[i]].name +
                                  "' sum to >= 1 per hour step");
    }

    auto lu = factor_or_throw(std::move(a));

    // Row sums of (I - Q)^-1 are the solution of (I - Q) x = 1.
    Eigen::VectorXd hours = lu.solve(Eigen::VectorXd::Ones(t));
    double result = hours(pos[d.initial_index()]);
    if (!std::isfinite(result) || result <= 0.0)
        throw InfiniteMttfError("infinite MTTF: ill-conditioned chain");
    return result;
}

}  // namespace sfcl
