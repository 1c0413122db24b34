#pragma once

#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ssp/error.hpp"
#include "ssp/interaction.hpp"
#include "ssp/transition_system.hpp"

namespace ssp {

// Support per state id, signature per event id, both indexed like the TS.
struct Region {
    std::vector<Bit> sup;
    std::vector<Interaction> sig;
    bool operator==(const Region&) const = default;

    bool separates(StateId a, StateId b) const { return sup[a] != sup[b]; }
};

inline Region region_from_maps(const TransitionSystem& ts, const std::map<std::string, Bit>& sup,
                               const std::map<std::string, Interaction>& sig) {
    Region r;
    r.sup.resize(ts.num_states());
    r.sig.resize(ts.num_events());
    for (StateId s = 0; s < ts.num_states(); ++s) {
        auto it = sup.find(ts.state_name(s));
        if (it == sup.end()) throw PartialAssignment("support misses state '" + ts.state_name(s) + "'");
        if (it->second > 1) throw PartialAssignment("support of '" + ts.state_name(s) + "' is not a bit");
        r.sup[s] = it->second;
    }
    for (EventId e = 0; e < ts.num_events(); ++e) {
        auto it = sig.find(ts.event_name(e));
        if (it == sig.end()) throw PartialAssignment("signature misses event '" + ts.event_name(e) + "'");
        r.sig[e] = it->second;
    }
    return r;
}

inline void check_total(const TransitionSystem& ts, const Region& r) {
    if (r.sup.size() != ts.num_states())
        throw PartialAssignment("support has " + std::to_string(r.sup.size()) + " entries, TS has " +
                                std::to_string(ts.num_states()) + " states");
    if (r.sig.size() != ts.num_events())
        throw PartialAssignment("signature has " + std::to_string(r.sig.size()) + " entries, TS has " +
                                std::to_string(ts.num_events()) + " events");
}

inline bool is_region(const TransitionSystem& ts, BooleanType tau, const Region& r) {
    check_total(ts, r);
    for (auto i : r.sig)
        if (!tau.contains(i)) return false;
    for (const auto& e : ts.edges())
        if (!has_edge(tau, r.sup[e.src], r.sig[e.event], r.sup[e.dst])) return false;
    return true;
}

inline bool is_region(const TransitionSystem& ts, BooleanType tau, const std::map<std::string, Bit>& sup,
                      const std::map<std::string, Interaction>& sig) {
    return is_region(ts, tau, region_from_maps(ts, sup, sig));
}

// The region implicitly fixed by sup(initial) and sig, if one exists.
inline std::optional<Region> propagate_region(const TransitionSystem& ts, BooleanType tau, Bit sup_init,
                                              const std::vector<Interaction>& sig) {
    if (sig.size() != ts.num_events())
        throw PartialAssignment("signature has " + std::to_string(sig.size()) + " entries, TS has " +
                                std::to_string(ts.num_events()) + " events");
    for (auto i : sig)
        if (!tau.contains(i)) return std::nullopt;
    constexpr Bit unset = 2;
    Region r{std::vector<Bit>(ts.num_states(), unset), sig};
    r.sup[ts.initial()] = sup_init;
    std::queue<StateId> queue;
    queue.push(ts.initial());
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop();
        for (auto idx : ts.out_edges(s)) {
            const auto& e = ts.edges()[idx];
            auto y = apply(sig[e.event], r.sup[s]);
            if (!y) return std::nullopt;
            if (r.sup[e.dst] == unset) {
                r.sup[e.dst] = *y;
                queue.push(e.dst);
            } else if (r.sup[e.dst] != *y) {
                return std::nullopt;
            }
        }
    }
    return r;
}

struct PathImage {
    std::vector<Bit> bits;                  // sup of each visited state, length = edges + 1
    std::vector<Interaction> interactions;  // sig of each edge's event
    std::vector<EventId> events;            // the path's events, in order
    std::vector<bool> state_changing;       // per edge: bits differ across it

    std::string to_string() const {
        std::string out = std::to_string(bits.front());
        for (std::size_t i = 0; i < interactions.size(); ++i)
            out += "-" + std::string(name(interactions[i])) + "->" + std::to_string(bits[i + 1]);
        return out;
    }
};

inline PathImage image_of_path(const TransitionSystem& ts, const Region& r, const std::vector<Edge>& path,
                               std::optional<StateId> start = std::nullopt) {
    check_total(ts, r);
    StateId at = start.value_or(path.empty() ? ts.initial() : path.front().src);
    PathImage img;
    img.bits.push_back(r.sup[at]);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& e = path[i];
        if (e.src != at || !ts.has_edge(e.src, e.event, e.dst))
            throw DisconnectedPath("path breaks at position " + std::to_string(i));
        img.interactions.push_back(r.sig[e.event]);
        img.events.push_back(e.event);
        img.bits.push_back(r.sup[e.dst]);
        img.state_changing.push_back(r.sup[e.src] != r.sup[e.dst]);
        at = e.dst;
    }
    return img;
}

// Events whose every edge keeps the support constant.
inline std::vector<bool> support_constant_events(const TransitionSystem& ts, const Region& r) {
    std::vector<bool> keep(ts.num_events(), true);
    for (const auto& e : ts.edges())
        if (r.sup[e.src] != r.sup[e.dst]) keep[e.event] = false;
    return keep;
}

inline bool is_normalized(const TransitionSystem& ts, const Region& r) {
    auto keep = support_constant_events(ts, r);
    for (EventId e = 0; e < ts.num_events(); ++e) {
        auto i = r.sig[e];
        if (i == Interaction::used || i == Interaction::free) return false;
        if (i != Interaction::nop && keep[e]) return false;
    }
    return true;
}

inline Region normalize_region(const TransitionSystem& ts, BooleanType tau, const Region& r) {
    if (!tau.contains(Interaction::nop)) throw NopNotInType("normalization requires nop in the type");
    check_total(ts, r);
    Region out = r;
    auto keep = support_constant_events(ts, r);
    for (EventId e = 0; e < ts.num_events(); ++e)
        if (keep[e]) out.sig[e] = Interaction::nop;
    return out;
}

} // namespace ssp
