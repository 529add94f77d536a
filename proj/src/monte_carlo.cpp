#include "sfcl/monte_carlo.hpp"

#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "sfcl/errors.hpp"

namespace sfcl {

namespace {

// SplitMix64 (Steele, Lea, Flood). One stream per trial, keyed by mixing the
// user seed with the trial index.
struct SplitMix64 {
    std::uint64_t state;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    explicit SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state(mix(seed) ^ mix(stream * 0xD1342543DE82EF95ULL + 1)) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0, 1]; safe under log().
    double next_open01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }
    // Uniform on [0, 1).
    double next_half_open01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

struct CompiledState {
    std::vector<int> successors;
    std::vector<double> rates;
    double exit_rate = 0.0;
    bool absorbing = false;
};

constexpr double kCensored = std::numeric_limits<double>::quiet_NaN();

double run_trial(const std::vector<CompiledState>& states, int initial,
                 double cutoff, SplitMix64 rng) {
    double t = 0.0;
    int s = initial;
    while (true) {
        const CompiledState& st = states[s];
        if (st.absorbing) return t;
        if (!(st.exit_rate > 0)) return kCensored;  // stuck, never absorbs
        t += -std::log(rng.next_open01()) / st.exit_rate;
        if (t > cutoff) return kCensored;

        double pick = rng.next_half_open01() * st.exit_rate;
        int next = st.successors.back();
        double cum = 0.0;
        for (size_t k = 0; k < st.rates.size(); ++k) {
            cum += st.rates[k];
            if (pick < cum) {
                next = st.successors[k];
                break;
            }
        }
        s = next;
    }
}

}  // namespace

McResult simulate_mttf(const StateDiagram& d, const McConfig& cfg) {
    d.validate();
    if (cfg.trials < 1) throw ValidationError("'trials' must be >= 1");
    if (!(cfg.max_sim_hours > 0) || !std::isfinite(cfg.max_sim_hours))
        throw ValidationError("'max_sim_hours' must be positive and finite");

    std::vector<CompiledState> states(d.states().size());
    for (size_t i = 0; i < states.size(); ++i)
        states[i].absorbing = d.states()[i].kind == StateKind::absorbing;
    for (const auto& t : d.transitions()) {
        if (t.rate_per_hour <= 0) continue;
        states[t.from].successors.push_back(t.to);
        states[t.from].rates.push_back(t.rate_per_hour);
        states[t.from].exit_rate += t.rate_per_hour;
    }
    const int initial = d.initial_index();

    std::vector<double> ttf(cfg.trials);
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i)
            ttf[i] = run_trial(states, initial, cfg.max_sim_hours,
                               SplitMix64(cfg.seed, i));
    };

    unsigned workers = cfg.workers;
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, cfg.trials));
    if (workers <= 1) {
        worker(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t begin = w * chunk;
            std::uint64_t end = std::min<std::uint64_t>(begin + chunk,
                                                        cfg.trials);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    // Ordered reduction: identical result for any worker partition.
    McResult res;
    res.trials = cfg.trials;
    double sum = 0.0;
    std::uint64_t n = 0;
    for (double x : ttf) {
        if (std::isnan(x)) {
            ++res.censored;
        } else {
            sum += x;
            ++n;
        }
    }
    if (n == 0)
        throw ValidationError(
            "cutoff too small: all trials censored before absorption");
    res.mean_ttf_h = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double x : ttf) {
            if (std::isnan(x)) continue;
            const double dev = x - res.mean_ttf_h;
            ss += dev * dev;
        }
        res.std_error_h = std::sqrt(ss / (static_cast<double>(n - 1) *
                                          static_cast<double>(n)));
    }
    return res;
}

}  // namespace sfcl
