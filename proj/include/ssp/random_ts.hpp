#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ssp/cm_formula.hpp"
#include "ssp/interaction.hpp"
#include "ssp/transition_system.hpp"

namespace ssp {

using Rng = std::mt19937_64;

struct RandomTsOptions {
    std::size_t min_states = 1;
    std::size_t max_states = 6;
    std::size_t max_events = 4;
    double extra_edge_prob = 0.3;
    bool loop_free = false;
    // Every event injective with disjoint source and target sets; keeps all
    // three extensions deterministic.
    bool extension_safe = false;
};

namespace detail {

inline std::string state_label(std::size_t i) { return "s" + std::to_string(i); }
inline std::string event_label(std::size_t i) {
    return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i);
}

// target[s * k + e], -1 for no edge.
inline TransitionSystem ts_from_table(std::size_t n, std::size_t k, const std::vector<int>& target) {
    RawTs raw;
    raw.initial = state_label(0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t e = 0; e < k; ++e)
            if (int t = target[s * k + e]; t >= 0)
                raw.edges.push_back({state_label(s), event_label(e), state_label(static_cast<std::size_t>(t))});
    return validate_ts(raw);
}

} // namespace detail

// A spanning tree from s0 plus random extra edges; unused event letters are
// dropped, so the TS may have fewer than max_events events.
inline TransitionSystem random_ts(Rng& rng, const RandomTsOptions& opt = {}) {
    const std::size_t k = std::max<std::size_t>(1, opt.max_events);
    for (;;) {
        const auto n = std::uniform_int_distribution<std::size_t>(opt.min_states, opt.max_states)(rng);
        std::vector<int> target(n * k, -1);
        auto fits = [&](std::size_t s, std::size_t e, std::size_t t) {
            if (target[s * k + e] >= 0) return false;
            if (opt.loop_free && s == t) return false;
            if (!opt.extension_safe) return true;
            if (s == t) return false;
            for (std::size_t x = 0; x < n; ++x) {
                int y = target[x * k + e];
                if (y < 0) continue;
                if (static_cast<std::size_t>(y) == t || static_cast<std::size_t>(y) == s || x == t) return false;
            }
            return true;
        };
        bool ok = true;
        for (std::size_t t = 1; t < n && ok; ++t) {
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t s = 0; s < t; ++s)
                for (std::size_t e = 0; e < k; ++e)
                    if (fits(s, e, t)) slots.push_back({s, e});
            if (slots.empty()) {
                ok = false;
                break;
            }
            auto [s, e] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
            target[s * k + e] = static_cast<int>(t);
        }
        if (!ok) continue;
        std::bernoulli_distribution extra(opt.extra_edge_prob);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t e = 0; e < k; ++e)
                if (extra(rng)) {
                    auto t = pick(rng);
                    if (fits(s, e, t)) target[s * k + e] = static_cast<int>(t);
                }
        return detail::ts_from_table(n, k, target);
    }
}

inline BooleanType random_type(Rng& rng) {
    return BooleanType::from_mask(static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, 255)(rng)));
}

// Every TS with exactly n states and k events up to renaming, as successor
// tables in a normal form: states are numbered in the order a slot scan
// (state-major, event-minor) first reaches them, and events in the order the
// scan first uses them. Each isomorphism class appears at least once.
inline void enumerate_tables(std::size_t n, std::size_t k, const std::function<void(const std::vector<int>&)>& visit) {
    if (n == 0) return;
    if (k == 0) {
        if (n == 1) visit({});
        return;
    }
    std::vector<int> target(n * k, -1);
    auto rec = [&](std::size_t slot, std::size_t seen, std::size_t used, auto& self) -> void {
        if (slot == n * k) {
            if (seen == n && used == k) visit(target);
            return;
        }
        const std::size_t s = slot / k, e = slot % k;
        if (s >= seen) return;  // s unreachable
        // remaining slots cannot introduce enough states or events
        if (n - seen > n * k - slot || k - used > n * k - slot) return;
        target[slot] = -1;
        self(slot + 1, seen, used, self);
        if (e > used) return;
        const std::size_t used2 = e == used ? used + 1 : used;
        for (std::size_t t = 0; t <= seen && t < n; ++t) {
            target[slot] = static_cast<int>(t);
            self(slot + 1, t == seen ? seen + 1 : seen, used2, self);
        }
        target[slot] = -1;
    };
    rec(0, 1, 0, rec);
}

inline void enumerate_ts(std::size_t n, std::size_t k, const std::function<void(const TransitionSystem&)>& visit) {
    enumerate_tables(n, k, [&](const std::vector<int>& t) { visit(detail::ts_from_table(n, k, t)); });
}

// All sizes up to the given bounds.
inline void enumerate_ts_upto(std::size_t max_n, std::size_t max_k,
                              const std::function<void(const TransitionSystem&)>& visit) {
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t k = 0; k <= max_k; ++k) enumerate_ts(n, k, visit);
}

// A cubic monotone formula with m clauses over X0..X{m-1}: three copies of
// every variable dealt into triples, retried until the result validates.
inline CmFormula random_cm_formula(Rng& rng, int m) {
    if (m < 4) throw SizeCapExceeded("cubic formulas with distinct clauses need m >= 4");
    std::vector<int> deck;
    for (int v = 0; v < m; ++v)
        for (int r = 0; r < 3; ++r) deck.push_back(v);
    for (;;) {
        std::shuffle(deck.begin(), deck.end(), rng);
        std::vector<std::array<int, 3>> clauses;
        for (int c = 0; c < m; ++c)
            clauses.push_back({deck[static_cast<std::size_t>(3 * c)], deck[static_cast<std::size_t>(3 * c + 1)],
                               deck[static_cast<std::size_t>(3 * c + 2)]});
        try {
            return cm_validate(clauses);
        } catch (const DuplicateClause&) {
        }
    }
}

} // namespace ssp
