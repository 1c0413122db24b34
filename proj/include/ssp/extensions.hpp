#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ssp/transition_system.hpp"

namespace ssp {

// Backward: every edge s -e-> s' gains s' -bar(e)-> s.
// OnewayLoop: Backward plus s' -e-> s'.
// Loop: OnewayLoop plus s -bar(e)-> s.
enum class ExtensionKind { Backward, OnewayLoop, Loop };

inline const char* to_string(ExtensionKind k) {
    switch (k) {
        case ExtensionKind::Backward: return "backward";
        case ExtensionKind::OnewayLoop: return "oneway-loop";
        case ExtensionKind::Loop: return "loop";
    }
    return "?";
}

inline std::optional<ExtensionKind> extension_from_name(std::string_view s) {
    if (s == "backward") return ExtensionKind::Backward;
    if (s == "oneway-loop") return ExtensionKind::OnewayLoop;
    if (s == "loop") return ExtensionKind::Loop;
    return std::nullopt;
}

// e -> bar_e, with apostrophes appended until the name is unused.
inline std::map<std::string, std::string> barred_names(const TransitionSystem& ts) {
    std::set<std::string> taken(ts.event_names().begin(), ts.event_names().end());
    std::map<std::string, std::string> out;
    for (const auto& e : ts.event_names()) {
        std::string b = "bar_" + e;
        while (taken.count(b)) b += "'";
        taken.insert(b);
        out[e] = b;
    }
    return out;
}

inline TransitionSystem extend(const TransitionSystem& ts, ExtensionKind kind) {
    if (!ts.loop_free()) throw NotLoopFree("extensions need a loop-free TS");
    auto bar = barred_names(ts);
    RawTs raw = ts.to_raw();
    for (const auto& e : ts.edges()) {
        const auto& s = ts.state_name(e.src);
        const auto& d = ts.state_name(e.dst);
        const auto& ev = ts.event_name(e.event);
        raw.edges.push_back({d, bar[ev], s});
        if (kind != ExtensionKind::Backward) raw.edges.push_back({d, ev, d});
        if (kind == ExtensionKind::Loop) raw.edges.push_back({s, bar[ev], s});
    }
    try {
        return validate_ts(raw);
    } catch (const NondeterministicEdge& err) {
        throw ExtensionNondeterministic(std::string("extension is not deterministic: ") + err.what());
    }
}

} // namespace ssp
