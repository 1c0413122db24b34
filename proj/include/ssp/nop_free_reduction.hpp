#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssp/classify.hpp"
#include "ssp/cm_formula.hpp"
#include "ssp/engine.hpp"
#include "ssp/nop_inp_reduction.hpp"

namespace ssp {

inline const BooleanType swap_free_type{Interaction::swap, Interaction::free};

// Identifier scheme of the nop-free construction. ℓ ranges over 0..7m-1,
// i over 0..m-1.
struct NopFreeNames {
    static std::string iota() { return "iota"; }
    static std::string top(int k) { return detail::idx("TOP", k); }
    static std::string bot(int k) { return detail::idx("BOT", k); }
    static std::string g(int l, int j, bool primed = false) { return detail::idx(primed ? "gp" : "g", l, j); }
    static std::string f(int l, int j, bool primed = false) { return detail::idx(primed ? "fp" : "f", l, j); }
    // T_{i,b} state j; b = 0 is the long path, b = 1 the short one.
    static std::string t(int i, int b, int j, bool primed = false) { return detail::idx(primed ? "tp" : "t", i, b, j); }

    static std::string v(int l, bool primed = false) { return detail::idx(primed ? "vp" : "v", l); }
    static std::string w(int l, bool primed = false) { return detail::idx(primed ? "wp" : "w", l); }
    static std::string k(int which) { return "k" + std::to_string(which); }
    static std::string otimes(int k) { return detail::idx("otimes", k); }
    static std::string oplus(int k) { return detail::idx("oplus", k); }
    static std::string odot(int k, bool primed = false) { return detail::idx(primed ? "odotp" : "odot", k); }
    static std::string ominus(int k, bool primed = false) { return detail::idx(primed ? "ominusp" : "ominus", k); }
    static std::string x(const CmFormula& f, int var, bool primed = false) {
        return f.name(var) + (primed ? "'" : "");
    }
};

namespace detail {

inline void add_both(RawTs& raw, const std::string& a, const std::string& e, const std::string& b) {
    raw.edges.push_back({a, e, b});
    raw.edges.push_back({b, e, a});
}

inline void add_path(RawTs& raw, const std::vector<std::string>& states, const std::vector<std::string>& events) {
    for (std::size_t i = 0; i < events.size(); ++i) add_both(raw, states[i], events[i], states[i + 1]);
}

} // namespace detail

// Bi-directed construction over φ and its primed copy φ'. Gadgets:
//   G_ℓ:  g_ℓ_0 -v_ℓ- g_ℓ_1 -w_ℓ- g_ℓ_2 -k0- g_ℓ_3 -k1- g_ℓ_4
//   F_ℓ:  same events, k1 before k0; G'_ℓ/F'_ℓ use vp_ℓ, wp_ℓ with the k's swapped
//   T_{i,0}: k0 v_7i v_7i+1 X_i0 v_7i+2 X_i1 v_7i+3 X_i2 v_7i+4 v_7i+5 k0
//   T_{i,1}: X_i0 v_7i+6 X_i2; primed T's use k1, vp and X'
// Spines iota -otimes_0- TOP_0 -otimes_1- ... TOP_{14m-1} and
// iota -oplus_0- BOT_0 ... BOT_{2m-1}. TOP_{2ℓ} carries G_ℓ (odot_{2ℓ}) and
// G'_ℓ (odotp_{2ℓ}); TOP_{2ℓ+1} carries F_ℓ and F'_ℓ. BOT_{2i} carries T_{i,0}
// (ominus_{2i}) and T'_{i,0} (ominusp_{2i}); BOT_{2i+1} carries T_{i,1} and T'_{i,1}.
inline GeneratedTs gen_nop_free(const CmFormula& f) {
    using N = NopFreeNames;
    const int m = f.m();
    const int L = 7 * m;
    std::set<std::string> gadget_events{"k0", "k1"};
    for (int l = 0; l < L; ++l)
        for (bool p : {false, true}) {
            gadget_events.insert(N::v(l, p));
            gadget_events.insert(N::w(l, p));
        }
    for (int k = 0; k < 14 * m; ++k) {
        gadget_events.insert(N::otimes(k));
        gadget_events.insert(N::odot(k));
        gadget_events.insert(N::odot(k, true));
    }
    for (int k = 0; k < 2 * m; ++k) {
        gadget_events.insert(N::oplus(k));
        gadget_events.insert(N::ominus(k));
        gadget_events.insert(N::ominus(k, true));
    }
    detail::require_fresh_variables(f, gadget_events);
    for (const auto& v : f.variables)
        if (gadget_events.count(v + "'") || f.find(v + "'"))
            throw InvalidIdentifier("primed copy of '" + v + "' clashes with another name");

    RawTs raw;
    raw.initial = N::iota();
    for (int k = 0; k < 14 * m; ++k)
        detail::add_both(raw, k == 0 ? N::iota() : N::top(k - 1), N::otimes(k), N::top(k));
    for (int k = 0; k < 2 * m; ++k)
        detail::add_both(raw, k == 0 ? N::iota() : N::bot(k - 1), N::oplus(k), N::bot(k));

    for (int l = 0; l < L; ++l)
        for (bool p : {false, true}) {
            const std::string first = p ? "k1" : "k0", second = p ? "k0" : "k1";
            std::vector<std::string> gs, fs;
            for (int j = 0; j < 5; ++j) {
                gs.push_back(N::g(l, j, p));
                fs.push_back(N::f(l, j, p));
            }
            detail::add_path(raw, gs, {N::v(l, p), N::w(l, p), first, second});
            detail::add_path(raw, fs, {N::v(l, p), N::w(l, p), second, first});
            detail::add_both(raw, N::top(2 * l), N::odot(2 * l, p), gs[0]);
            detail::add_both(raw, N::top(2 * l + 1), N::odot(2 * l + 1, p), fs[0]);
        }

    for (int i = 0; i < m; ++i)
        for (bool p : {false, true}) {
            const auto& c = f.clauses[static_cast<std::size_t>(i)];
            const std::string kk = p ? "k1" : "k0";
            auto X = [&](int b) { return N::x(f, c[static_cast<std::size_t>(b)], p); };
            auto V = [&](int j) { return N::v(7 * i + j, p); };
            std::vector<std::string> long_states, short_states;
            for (int j = 0; j < 12; ++j) long_states.push_back(N::t(i, 0, j, p));
            for (int j = 0; j < 4; ++j) short_states.push_back(N::t(i, 1, j, p));
            detail::add_path(raw, long_states, {kk, V(0), V(1), X(0), V(2), X(1), V(3), X(2), V(4), V(5), kk});
            detail::add_path(raw, short_states, {X(0), V(6), X(2)});
            detail::add_both(raw, N::bot(2 * i), N::ominus(2 * i, p), long_states[0]);
            detail::add_both(raw, N::bot(2 * i + 1), N::ominus(2 * i + 1, p), short_states[0]);
        }
    return {validate_ts(raw), {N::g(0, 2), N::g(0, 4)}};
}

namespace detail {

struct NopFreeEventSets {
    std::set<std::string> connectors;   // oplus, otimes, ominus, odot and primed
    std::set<std::string> attachments;  // ominus, odot and primed
    std::set<std::string> odot_all, V, Vp, W, Wp, X, Xp;
};

inline NopFreeEventSets nop_free_event_sets(const CmFormula& f) {
    using N = NopFreeNames;
    const int m = f.m();
    NopFreeEventSets s;
    for (int k = 0; k < 14 * m; ++k) {
        s.connectors.insert(N::otimes(k));
        for (bool p : {false, true}) {
            s.connectors.insert(N::odot(k, p));
            s.attachments.insert(N::odot(k, p));
            s.odot_all.insert(N::odot(k, p));
        }
    }
    for (int k = 0; k < 2 * m; ++k) {
        s.connectors.insert(N::oplus(k));
        for (bool p : {false, true}) {
            s.connectors.insert(N::ominus(k, p));
            s.attachments.insert(N::ominus(k, p));
        }
    }
    for (int l = 0; l < 7 * m; ++l) {
        s.V.insert(N::v(l));
        s.Vp.insert(N::v(l, true));
        s.W.insert(N::w(l));
        s.Wp.insert(N::w(l, true));
    }
    for (int x = 0; x < static_cast<int>(f.variables.size()); ++x) {
        s.X.insert(N::x(f, x));
        s.Xp.insert(N::x(f, x, true));
    }
    return s;
}

inline Region swap_free_region(const TransitionSystem& ts, const std::set<std::string>& swaps, const std::string& label) {
    return propagate_named(
        ts, swap_free_type, 0,
        [&](const std::string& e) { return swaps.count(e) ? Interaction::swap : Interaction::free; }, label);
}

inline void insert_all(std::set<std::string>& into, const std::set<std::string>& from) {
    into.insert(from.begin(), from.end());
}

} // namespace detail

// The model-dependent region solving (g_0_2, g_0_4) under {swap,free}:
// swap on k1, all v/w events, X minus the model, all X', odot_{2ℓ+1} and
// odotp_{2ℓ}; free elsewhere; sup(iota) = 0.
inline Region gen_nop_free_alpha_region(const CmFormula& f, const Model& model, const TransitionSystem& ts) {
    using N = NopFreeNames;
    require_model(f, model);
    auto s = detail::nop_free_event_sets(f);
    std::set<std::string> swaps{"k1"};
    for (const auto* part : {&s.V, &s.Vp, &s.W, &s.Wp, &s.Xp}) detail::insert_all(swaps, *part);
    for (int x = 0; x < static_cast<int>(f.variables.size()); ++x)
        if (!std::binary_search(model.begin(), model.end(), x)) swaps.insert(N::x(f, x));
    for (int l = 0; l < 7 * f.m(); ++l) {
        swaps.insert(N::odot(2 * l + 1));
        swaps.insert(N::odot(2 * l, true));
    }
    return detail::swap_free_region(ts, swaps, "R_g_2");
}

inline Region gen_nop_free_alpha_region(const CmFormula& f, const Model& model) {
    return gen_nop_free_alpha_region(f, model, gen_nop_free(f).ts);
}

// Moves a {swap,free}-region to one of the other three nop-free kernels:
// {swap,used} by flipping, {res,swap} by reading free as res, {set,swap} by
// flipping the latter.
inline Region transport_swap_free(const Region& r, BooleanType target) {
    const BooleanType res_swap{Interaction::res, Interaction::swap};
    if (target == swap_free_type) return r;
    if (target == flip_type(swap_free_type)) return flip_region(r);
    Region out = r;
    for (auto& i : out.sig)
        if (i == Interaction::free) i = Interaction::res;
    if (target == res_swap) return out;
    if (target == flip_type(res_swap)) return flip_region(out);
    throw WrongTypeFamily("no transport from {swap,free} to {" + target.to_string() + "}");
}

// A region of a bi-directed TS under {swap,free} whose support is 1 exactly
// on a set Q grown from q: events at Q become swap; every edge of a swap event
// with no endpoint in Q pulls in the endpoint that opens the fewest new event
// occurrences (lower id on ties). Absent if some swap edge ends up inside Q.
inline std::optional<Region> spike_region(const TransitionSystem& ts, StateId q) {
    const auto n = ts.num_states();
    std::vector<char> in_q(n, 0), swap(ts.num_events(), 0);
    std::deque<StateId> new_states{q};
    std::deque<EventId> new_events;
    in_q[q] = 1;
    auto cost = [&](StateId c, EventId via) {
        std::size_t total = 0;
        for (auto idx : ts.out_edges(c)) {
            auto e = ts.edges()[idx].event;
            if (e != via && !swap[e]) total += ts.edges_of(e).size();
        }
        return total;
    };
    while (!new_states.empty() || !new_events.empty()) {
        while (!new_states.empty()) {
            auto s = new_states.front();
            new_states.pop_front();
            for (auto idx : ts.out_edges(s)) {
                auto e = ts.edges()[idx].event;
                if (!swap[e]) {
                    swap[e] = 1;
                    new_events.push_back(e);
                }
            }
        }
        if (new_events.empty()) break;
        auto e = new_events.front();
        new_events.pop_front();
        for (auto idx : ts.edges_of(e)) {
            const auto& edge = ts.edges()[idx];
            if (edge.src > edge.dst) continue;
            if (in_q[edge.src] && in_q[edge.dst]) return std::nullopt;
            if (in_q[edge.src] || in_q[edge.dst]) continue;
            auto ca = cost(edge.src, e), cb = cost(edge.dst, e);
            StateId pick = cb < ca ? edge.dst : edge.src;
            in_q[pick] = 1;
            new_states.push_back(pick);
        }
    }
    Region r;
    r.sup.resize(n);
    r.sig.resize(ts.num_events());
    for (StateId s = 0; s < n; ++s) r.sup[s] = static_cast<Bit>(in_q[s]);
    for (EventId e = 0; e < ts.num_events(); ++e) r.sig[e] = swap[e] ? Interaction::swap : Interaction::free;
    if (!is_region(ts, swap_free_type, r)) return std::nullopt;
    return r;
}

namespace detail {

// Tracks which states are still indistinguishable under a growing region set.
class SeparationClasses {
public:
    explicit SeparationClasses(std::size_t n) : cls_(n, 0), size_(1, n) {}

    void add(const Region& r) {
        std::map<std::pair<std::uint32_t, Bit>, std::uint32_t> remap;
        for (std::size_t s = 0; s < cls_.size(); ++s) {
            auto key = std::make_pair(cls_[s], r.sup[s]);
            auto it = remap.try_emplace(key, static_cast<std::uint32_t>(remap.size())).first;
            cls_[s] = it->second;
        }
        size_.assign(remap.size(), 0);
        for (auto c : cls_) ++size_[c];
    }
    bool isolated(StateId s) const { return size_[cls_[s]] == 1; }
    bool complete() const { return size_.size() == cls_.size(); }

private:
    std::vector<std::uint32_t> cls_;
    std::vector<std::size_t> size_;
};

} // namespace detail

// Separating family for the nop-free construction under {swap,free}: the
// connector regions R_1 and R_2(a), the four gadget regions R_g_0..3 (R_g_2
// depends on the model), R_t_i_0_2 and its primed twin per clause, then spike
// regions for states that are still not told apart from every other state.
inline std::vector<NamedRegion> gen_nop_free_witness(const CmFormula& f, const Model& model, const TransitionSystem& ts) {
    using N = NopFreeNames;
    require_model(f, model);
    const int m = f.m();
    auto s = detail::nop_free_event_sets(f);
    std::vector<NamedRegion> out;
    detail::SeparationClasses classes(ts.num_states());
    auto push = [&](const std::string& label, Region r) {
        classes.add(r);
        out.push_back({label, std::move(r)});
    };
    auto add = [&](const std::string& label, const std::set<std::string>& swaps) {
        push(label, detail::swap_free_region(ts, swaps, label));
    };

    std::set<std::string> non_connectors;
    for (const auto& e : ts.event_names())
        if (!s.connectors.count(e)) non_connectors.insert(e);
    add("R_1", non_connectors);
    for (const auto& a : s.attachments) {
        auto swaps = non_connectors;
        swaps.insert(a);
        add("R_2_" + a, swaps);
    }
    {
        std::set<std::string> swaps{"k0", "k1"};
        for (int i = 0; i < m; ++i) {
            swaps.insert(N::ominus(2 * i));
            swaps.insert(N::ominus(2 * i, true));
        }
        add("R_g_3", swaps);
    }
    {
        std::set<std::string> swaps{"k0", "k1"};
        for (const auto* part : {&s.odot_all, &s.V, &s.Vp, &s.X, &s.Xp}) detail::insert_all(swaps, *part);
        add("R_g_0", swaps);
    }
    {
        std::set<std::string> swaps{"k0", "k1"};
        for (const auto* part : {&s.V, &s.Vp, &s.W, &s.Wp, &s.X, &s.Xp}) detail::insert_all(swaps, *part);
        add("R_g_1", swaps);
    }
    push("R_g_2", gen_nop_free_alpha_region(f, model, ts));
    for (int i = 0; i < m; ++i)
        for (bool p : {false, true}) {
            std::set<std::string> swaps{N::v(7 * i, p), N::w(7 * i, p), N::v(7 * i + 1, p), N::w(7 * i + 1, p)};
            add(std::string(p ? "R_tp_" : "R_t_") + std::to_string(i) + "_0_2", swaps);
        }
    for (StateId q = 0; q < ts.num_states() && !classes.complete(); ++q) {
        if (classes.isolated(q)) continue;
        if (auto r = spike_region(ts, q)) push("R_spike_" + ts.state_name(q), std::move(*r));
    }
    return out;
}

inline std::vector<NamedRegion> gen_nop_free_witness(const CmFormula& f, const Model& model) {
    return gen_nop_free_witness(f, model, gen_nop_free(f).ts);
}

// Runtime checks on a region solving (g_0_2, g_0_4): {sig(k0), sig(k1)} is one
// swap and one save interaction; all v/w events swap; and for the copy whose k
// is the save one, every long T-path has exactly one non-swap clause event.
struct GadgetFacts {
    bool solves_alpha = false;
    bool k_pair = false;
    bool vw_swap = false;
    bool one_per_clause = false;
    bool all() const { return solves_alpha && k_pair && vw_swap && one_per_clause; }
};

inline GadgetFacts check_gadget_facts(const CmFormula& f, const TransitionSystem& ts, const Region& r) {
    using N = NopFreeNames;
    GadgetFacts facts;
    facts.solves_alpha = r.sup[ts.state(N::g(0, 2))] != r.sup[ts.state(N::g(0, 4))];
    auto sig = [&](const std::string& e) { return r.sig[ts.event(e)]; };
    auto k0 = sig("k0"), k1 = sig("k1");
    auto is_save = [](Interaction i) { return groups::save.contains(i); };
    facts.k_pair = (k0 == Interaction::swap && is_save(k1)) || (k1 == Interaction::swap && is_save(k0));
    facts.vw_swap = true;
    for (int l = 0; l < 7 * f.m(); ++l)
        for (bool p : {false, true})
            if (sig(N::v(l, p)) != Interaction::swap || sig(N::w(l, p)) != Interaction::swap) facts.vw_swap = false;
    if (facts.k_pair) {
        const bool primed = k1 != Interaction::swap;
        facts.one_per_clause = true;
        for (const auto& c : f.clauses) {
            int non_swap = 0;
            for (int x : c)
                if (sig(N::x(f, x, primed)) != Interaction::swap) ++non_swap;
            if (non_swap != 1) facts.one_per_clause = false;
        }
    }
    return facts;
}

} // namespace ssp
