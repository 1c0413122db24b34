#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ssp/engine.hpp"

namespace ssp {

inline constexpr std::size_t default_oracle_cap = 16;

// All regions of a TS, grouped by support: for each admissible support the
// feasible signatures form a product of per-event interaction sets.
struct RegionFamily {
    struct Entry {
        std::uint32_t support;             // bit s = sup(s)
        std::vector<std::uint8_t> allowed; // per event: mask of feasible interactions
    };
    std::size_t num_states = 0;
    std::vector<Entry> entries;

    std::uint64_t count() const {
        std::uint64_t total = 0;
        for (const auto& e : entries) {
            std::uint64_t prod = 1;
            for (auto m : e.allowed) prod *= static_cast<std::uint64_t>(std::popcount(m));
            total += prod;
        }
        return total;
    }

    std::vector<std::uint32_t> supports() const {
        std::vector<std::uint32_t> out;
        for (const auto& e : entries) out.push_back(e.support);
        return out;
    }

    bool admits(std::uint32_t support) const {
        for (const auto& e : entries)
            if (e.support == support) return true;
        return false;
    }

    static Region first_region(const Entry& e, std::size_t n) {
        Region r;
        r.sup.resize(n);
        for (std::size_t s = 0; s < n; ++s) r.sup[s] = static_cast<Bit>(e.support >> s & 1);
        for (auto m : e.allowed) r.sig.push_back(static_cast<Interaction>(std::countr_zero(m)));
        return r;
    }

    // Every region, support-major, signatures in interaction order.
    std::vector<Region> expand() const {
        std::vector<Region> out;
        for (const auto& e : entries) {
            Region r = first_region(e, num_states);
            std::vector<std::vector<Interaction>> choices;
            for (auto m : e.allowed) choices.push_back(BooleanType::from_mask(m).members());
            std::vector<std::size_t> pos(choices.size(), 0);
            for (;;) {
                for (std::size_t k = 0; k < choices.size(); ++k) r.sig[k] = choices[k][pos[k]];
                out.push_back(r);
                std::size_t k = 0;
                while (k < pos.size() && ++pos[k] == choices[k].size()) pos[k++] = 0;
                if (k == pos.size()) break;
            }
        }
        return out;
    }
};

namespace detail {

// compat[x][y]: interactions of tau with an x -> y edge
struct CompatTable {
    std::uint8_t cell[2][2] = {};
    explicit CompatTable(BooleanType tau) {
        for (const auto& te : type_edges(tau))
            cell[te.from][te.to] |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(te.label));
    }
};

inline void check_oracle_cap(const TransitionSystem& ts, std::size_t cap) {
    const auto n = ts.num_states();
    if (n > cap || n > 31)
        throw OracleCapExceeded("oracle handles at most " + std::to_string(cap) + " states, TS has " +
                                std::to_string(n));
}

// Narrows allowed (pre-filled with tau) to the signatures compatible with sup;
// false when some event has none left.
inline bool fill_allowed(const TransitionSystem& ts, const CompatTable& compat, std::uint32_t sup,
                         std::vector<std::uint8_t>& allowed) {
    for (const auto& e : ts.edges()) {
        allowed[e.event] &= compat.cell[sup >> e.src & 1][sup >> e.dst & 1];
        if (!allowed[e.event]) return false;
    }
    return true;
}

} // namespace detail

inline RegionFamily brute_force_regions(const TransitionSystem& ts, BooleanType tau,
                                        std::size_t cap = default_oracle_cap) {
    detail::check_oracle_cap(ts, cap);
    const auto n = ts.num_states();
    const detail::CompatTable compat(tau);
    RegionFamily fam;
    fam.num_states = n;
    std::vector<std::uint8_t> allowed(ts.num_events());
    for (std::uint32_t sup = 0; sup < (1u << n); ++sup) {
        std::fill(allowed.begin(), allowed.end(), tau.mask());
        if (detail::fill_allowed(ts, compat, sup, allowed)) fam.entries.push_back({sup, allowed});
    }
    return fam;
}

// Same decision procedure as a walk over brute_force_regions: each atom not yet
// covered takes the first admissible support that separates it.
inline SeparationReport brute_force_decide(const TransitionSystem& ts, BooleanType tau,
                                           std::size_t cap = default_oracle_cap) {
    detail::check_oracle_cap(ts, cap);
    const auto n = ts.num_states();
    const detail::CompatTable compat(tau);
    std::vector<std::uint8_t> allowed(ts.num_events());
    std::vector<std::uint32_t> supports;
    for (std::uint32_t sup = 0; sup < (1u << n); ++sup) {
        std::fill(allowed.begin(), allowed.end(), tau.mask());
        if (detail::fill_allowed(ts, compat, sup, allowed)) supports.push_back(sup);
    }

    SeparationReport report;
    report.decision = Decision::HasSSP;
    for (const auto& a : all_atoms(ts)) {
        ++report.stats.atoms_checked;
        int idx = detail::covering_region(report.regions, a);
        if (idx >= 0) {
            report.verdicts.push_back({a, AtomStatus::Solved, idx, true, 0});
            continue;
        }
        auto hit = std::find_if(supports.begin(), supports.end(),
                                [&](std::uint32_t s) { return (s >> a.first & 1) != (s >> a.second & 1); });
        if (hit == supports.end()) {
            report.verdicts.push_back({a, AtomStatus::Unsolvable, -1, false, 0});
            report.decision = Decision::LacksSSP;
            report.witness_atom = a;
            break;
        }
        std::fill(allowed.begin(), allowed.end(), tau.mask());
        detail::fill_allowed(ts, compat, *hit, allowed);
        report.verdicts.push_back({a, AtomStatus::Solved, static_cast<int>(report.regions.size()), false, 0});
        report.regions.push_back(RegionFamily::first_region({*hit, allowed}, n));
    }
    return report;
}

} // namespace ssp
