#include "burn/random_burn.hpp"

#include "burn/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace burn {

TrialOutcome random_trial(const Graph& g, double m, std::uint64_t seed) {
    if (g.vertex_count() == 0) throw std::invalid_argument("random_trial: empty graph");
    if (!(m > 0.0)) throw std::invalid_argument("random_trial: m must be positive");
    TrialOutcome outcome;
    outcome.m = m;
    outcome.seed = seed;
    std::mt19937_64 gen(seed);
    std::vector<char> covered(g.vertex_count(), 0);
    int next = 0;
    while (true) {
        while (next < g.vertex_count() && covered[next]) ++next;
        if (next == g.vertex_count()) break;
        double raw = rng::unit_double(gen) * m;
        outcome.placements.push_back({next, raw});
        for (int v : ball(g, next, static_cast<int>(std::floor(raw)))) covered[v] = 1;
    }
    return outcome;
}

DominationCertificate min_domination_bound(std::span<const double> radii) {
    for (double a : radii)
        if (a < 0.0) throw std::invalid_argument("min_domination_bound: negative radius");
    DominationCertificate cert;
    std::vector<int> order(radii.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return std::floor(radii[i]) > std::floor(radii[j]);
    });
    // r = max over 1-based rank i of floor(a_(i)) + i; rank i takes slot r - i.
    int r = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int need = static_cast<int>(std::floor(radii[order[i]])) + static_cast<int>(i) + 1;
        r = std::max(r, need);
    }
    cert.r = r;
    cert.slots.resize(radii.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        cert.slots[order[i]] = r - static_cast<int>(i) - 1;
    return cert;
}

BurningSchedule outcome_to_schedule(const TrialOutcome& t,
                                    const DominationCertificate& c) {
    if (t.placements.size() != c.slots.size())
        throw std::invalid_argument("outcome_to_schedule: certificate size mismatch");
    BurningSchedule s;
    s.horizon = c.r;
    s.balls.reserve(t.placements.size());
    for (std::size_t i = 0; i < t.placements.size(); ++i) {
        int slot = c.slots[i];
        if (slot < static_cast<int>(std::floor(t.placements[i].raw_radius)))
            throw std::invalid_argument("outcome_to_schedule: slot below floored radius");
        s.balls.push_back({t.placements[i].center, slot});
    }
    return s;
}

RandomizedResult randomized_approx(const Graph& g, const RandomizedConfig& config) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("randomized_approx: empty graph");
    GreedyResult greedy = greedy_burning(g, config.greedy_tie_break);
    int m_max = config.m_max.value_or(greedy.r);
    if (config.m_min > m_max)
        throw std::invalid_argument("randomized_approx: m_min > m_max");
    if (config.m_min < 1)
        throw std::invalid_argument("randomized_approx: m_min must be positive");

    RandomizedResult result;
    result.greedy_r = greedy.r;
    result.r_best = greedy.r;
    result.schedule = greedy.schedule;

    double log_n = std::log(static_cast<double>(g.vertex_count()) + 1.0);
    for (int m = config.m_min; m <= m_max; ++m) {
        PerMStats stats;
        stats.m = m;
        stats.trials =
            static_cast<int>(std::ceil(config.trials_factor * m * log_n));
        std::uint64_t total_placements = 0;
        for (int t = 0; t < stats.trials; ++t) {
            std::uint64_t trial_seed = rng::mix(config.seed, static_cast<std::uint64_t>(m),
                                                static_cast<std::uint64_t>(t));
            TrialOutcome outcome = random_trial(g, static_cast<double>(m), trial_seed);
            total_placements += outcome.placements.size();
            std::vector<double> radii;
            radii.reserve(outcome.placements.size());
            for (const Placement& p : outcome.placements) radii.push_back(p.raw_radius);
            DominationCertificate cert = min_domination_bound(radii);
            if (!stats.best_bound || cert.r < *stats.best_bound)
                stats.best_bound = cert.r;
            if (cert.r < result.r_best) {
                result.r_best = cert.r;
                result.schedule = outcome_to_schedule(outcome, cert);
            }
        }
        if (stats.trials > 0)
            stats.mean_placements =
                static_cast<double>(total_placements) / stats.trials;
        result.per_m.push_back(stats);
    }
    return result;
}

}  // namespace burn
