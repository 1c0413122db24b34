#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssp/error.hpp"

namespace ssp {

using StateId = std::uint32_t;
using EventId = std::uint32_t;

struct Edge {
    StateId src;
    EventId event;
    StateId dst;
    auto operator<=>(const Edge&) const = default;
};

struct RawEdge {
    std::string src;
    std::string event;
    std::string dst;
};

// Unvalidated input. States and events are collected from the edges and the
// initial state; the explicit lists may declare extras, which validation rejects
// if they are isolated (unreachable) or unused.
struct RawTs {
    std::string initial;
    std::vector<RawEdge> edges;
    std::vector<std::string> states;
    std::vector<std::string> events;
};

namespace detail {

inline bool utf8_at(std::string_view s, std::size_t i, std::string_view seq) {
    return s.substr(i, seq.size()) == seq;
}

} // namespace detail

// [A-Za-z0-9_.'-] plus the two spine glyphs in UTF-8. The file format narrows this to ASCII.
inline bool valid_identifier(std::string_view id, bool ascii_only = false) {
    if (id.empty()) return false;
    for (std::size_t i = 0; i < id.size();) {
        unsigned char c = static_cast<unsigned char>(id[i]);
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
            c == '.' || c == '\'' || c == '-') {
            ++i;
            continue;
        }
        if (!ascii_only && (detail::utf8_at(id, i, "⊤") || detail::utf8_at(id, i, "⊥"))) {
            i += 3;
            continue;
        }
        return false;
    }
    return true;
}

// A validated, deterministic, initialized TS. States and events are numbered in
// lexicographic order of their names; edges are sorted, so iteration order is
// the serialization order.
class TransitionSystem {
public:
    std::size_t num_states() const noexcept { return state_names_.size(); }
    std::size_t num_events() const noexcept { return event_names_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    StateId initial() const noexcept { return initial_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& state_names() const noexcept { return state_names_; }
    const std::vector<std::string>& event_names() const noexcept { return event_names_; }
    const std::string& state_name(StateId s) const { return state_names_.at(s); }
    const std::string& event_name(EventId e) const { return event_names_.at(e); }

    std::optional<StateId> find_state(std::string_view name) const {
        auto it = std::lower_bound(state_names_.begin(), state_names_.end(), name);
        if (it == state_names_.end() || *it != name) return std::nullopt;
        return static_cast<StateId>(it - state_names_.begin());
    }
    std::optional<EventId> find_event(std::string_view name) const {
        auto it = std::lower_bound(event_names_.begin(), event_names_.end(), name);
        if (it == event_names_.end() || *it != name) return std::nullopt;
        return static_cast<EventId>(it - event_names_.begin());
    }
    StateId state(std::string_view name) const {
        auto s = find_state(name);
        if (!s) throw UnknownState("unknown state '" + std::string(name) + "'");
        return *s;
    }
    EventId event(std::string_view name) const {
        auto e = find_event(name);
        if (!e) throw UnknownEvent("unknown event '" + std::string(name) + "'");
        return *e;
    }

    // Edge indices labeled with e.
    std::span<const std::uint32_t> edges_of(EventId e) const { return by_event_.at(e); }
    // Edge indices leaving s.
    std::span<const std::uint32_t> out_edges(StateId s) const { return out_.at(s); }
    std::span<const std::uint32_t> in_edges(StateId s) const { return in_.at(s); }

    std::optional<StateId> successor(StateId s, EventId e) const {
        for (auto idx : out_.at(s))
            if (edges_[idx].event == e) return edges_[idx].dst;
        return std::nullopt;
    }
    bool has_edge(StateId s, EventId e, StateId d) const {
        auto t = successor(s, e);
        return t && *t == d;
    }

    bool loop_free() const noexcept { return loop_free_; }
    bool bi_directed() const noexcept { return bi_directed_; }

    RawTs to_raw() const {
        RawTs raw;
        raw.initial = state_names_[initial_];
        for (const auto& e : edges_)
            raw.edges.push_back({state_names_[e.src], event_names_[e.event], state_names_[e.dst]});
        return raw;
    }

    bool operator==(const TransitionSystem& o) const {
        return state_names_ == o.state_names_ && event_names_ == o.event_names_ && edges_ == o.edges_ &&
               initial_ == o.initial_;
    }

    friend TransitionSystem validate_ts(const RawTs& raw);

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> event_names_;
    std::vector<Edge> edges_;
    StateId initial_ = 0;
    // Edge indices grouped by key, stored flat.
    class Adjacency {
    public:
        void build(std::size_t keys, std::size_t edges, auto key_of) {
            start_.assign(keys + 1, 0);
            for (std::uint32_t i = 0; i < edges; ++i) ++start_[key_of(i) + 1];
            for (std::size_t k = 0; k < keys; ++k) start_[k + 1] += start_[k];
            items_.resize(edges);
            auto fill = start_;
            for (std::uint32_t i = 0; i < edges; ++i) items_[fill[key_of(i)]++] = i;
        }
        std::span<const std::uint32_t> at(std::size_t key) const {
            if (key + 1 >= start_.size()) throw std::out_of_range("adjacency key out of range");
            return {items_.data() + start_[key], start_[key + 1] - start_[key]};
        }
        std::span<const std::uint32_t> operator[](std::size_t key) const {
            return {items_.data() + start_[key], start_[key + 1] - start_[key]};
        }

    private:
        std::vector<std::uint32_t> start_;
        std::vector<std::uint32_t> items_;
    };
    Adjacency by_event_;
    Adjacency out_;
    Adjacency in_;
    bool loop_free_ = true;
    bool bi_directed_ = false;
};

inline TransitionSystem validate_ts(const RawTs& raw) {
    std::vector<std::string> states;
    std::vector<std::string> events;
    states.reserve(1 + raw.states.size() + 2 * raw.edges.size());
    events.reserve(raw.events.size() + raw.edges.size());
    auto check_id = [](const std::string& id) {
        if (!valid_identifier(id)) throw InvalidIdentifier("invalid identifier '" + id + "'");
    };
    if (!raw.initial.empty()) {
        check_id(raw.initial);
        states.push_back(raw.initial);
    }
    for (const auto& s : raw.states) {
        check_id(s);
        states.push_back(s);
    }
    for (const auto& e : raw.events) {
        check_id(e);
        events.push_back(e);
    }
    for (const auto& e : raw.edges) {
        check_id(e.src);
        check_id(e.event);
        check_id(e.dst);
        states.push_back(e.src);
        states.push_back(e.dst);
        events.push_back(e.event);
    }
    for (auto* v : {&states, &events}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    if (states.empty()) throw EmptyStateSet("transition system has no states");
    if (raw.initial.empty()) throw EmptyStateSet("no initial state given");

    TransitionSystem ts;
    ts.state_names_ = std::move(states);
    ts.event_names_ = std::move(events);
    ts.initial_ = *ts.find_state(raw.initial);

    ts.edges_.reserve(raw.edges.size());
    for (const auto& e : raw.edges)
        ts.edges_.push_back({*ts.find_state(e.src), *ts.find_event(e.event), *ts.find_state(e.dst)});
    std::sort(ts.edges_.begin(), ts.edges_.end());
    ts.edges_.erase(std::unique(ts.edges_.begin(), ts.edges_.end()), ts.edges_.end());

    for (std::size_t i = 1; i < ts.edges_.size(); ++i) {
        const auto& a = ts.edges_[i - 1];
        const auto& b = ts.edges_[i];
        if (a.src == b.src && a.event == b.event)
            throw NondeterministicEdge("state '" + ts.state_names_[a.src] + "' has two '" +
                                       ts.event_names_[a.event] + "' edges (to '" + ts.state_names_[a.dst] +
                                       "' and '" + ts.state_names_[b.dst] + "')");
    }

    const auto n = ts.state_names_.size();
    const auto m = ts.edges_.size();
    ts.by_event_.build(ts.event_names_.size(), m, [&](std::uint32_t i) { return ts.edges_[i].event; });
    ts.out_.build(n, m, [&](std::uint32_t i) { return ts.edges_[i].src; });
    ts.in_.build(n, m, [&](std::uint32_t i) { return ts.edges_[i].dst; });
    for (const auto& e : ts.edges_)
        if (e.src == e.dst) ts.loop_free_ = false;
    for (EventId e = 0; e < ts.event_names_.size(); ++e)
        if (ts.by_event_[e].empty()) throw UnusedEvent("event '" + ts.event_names_[e] + "' labels no edge");

    std::vector<char> seen(n, 0);
    std::vector<StateId> stack{ts.initial_};
    seen[ts.initial_] = 1;
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto idx : ts.out_[s]) {
            auto d = ts.edges_[idx].dst;
            if (!seen[d]) {
                seen[d] = 1;
                stack.push_back(d);
            }
        }
    }
    std::vector<std::string> unreachable;
    for (StateId s = 0; s < n; ++s)
        if (!seen[s]) unreachable.push_back(ts.state_names_[s]);
    if (!unreachable.empty()) throw UnreachableState(std::move(unreachable));

    ts.bi_directed_ = ts.loop_free_;
    if (ts.bi_directed_)
        for (const auto& e : ts.edges_)
            if (!std::binary_search(ts.edges_.begin(), ts.edges_.end(), Edge{e.dst, e.event, e.src})) {
                ts.bi_directed_ = false;
                break;
            }
    return ts;
}

// Convenience for literals: {{"s0","a","s1"}, ...}.
inline TransitionSystem make_ts(std::string initial, std::vector<RawEdge> edges) {
    RawTs raw;
    raw.initial = std::move(initial);
    raw.edges = std::move(edges);
    return validate_ts(raw);
}

} // namespace ssp
