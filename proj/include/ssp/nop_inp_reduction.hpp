#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssp/cm_formula.hpp"
#include "ssp/engine.hpp"
#include "ssp/region.hpp"
#include "ssp/transition_system.hpp"

namespace ssp {

struct GeneratedTs {
    TransitionSystem ts;
    std::pair<std::string, std::string> key_atom;

    Atom alpha() const { return {ts.state(key_atom.first), ts.state(key_atom.second)}; }
};

struct NamedRegion {
    std::string name;
    Region region;
};

namespace detail {

inline std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }
inline std::string idx(const std::string& base, int i, int j) { return idx(idx(base, i), j); }
inline std::string idx(const std::string& base, int i, int j, int k) { return idx(idx(base, i, j), k); }

inline void require_fresh_variables(const CmFormula& f, const std::set<std::string>& generated_events) {
    for (const auto& v : f.variables) {
        if (!valid_identifier(v, true)) throw InvalidIdentifier("variable name '" + v + "' is not a plain identifier");
        if (generated_events.count(v))
            throw InvalidIdentifier("variable name '" + v + "' clashes with a gadget event");
    }
}

// Builds a region from sup(initial) and a signature given as a name predicate;
// a recipe that does not propagate is a construction bug.
template <class SigOf>
Region propagate_named(const TransitionSystem& ts, BooleanType tau, Bit sup_init, SigOf sig_of,
                       const std::string& label) {
    std::vector<Interaction> sig(ts.num_events());
    for (EventId e = 0; e < ts.num_events(); ++e) sig[e] = sig_of(ts.event_name(e));
    auto r = propagate_region(ts, tau, sup_init, sig);
    if (!r) throw std::logic_error("witness region " + label + " is inconsistent");
    return *r;
}

} // namespace detail

// Spine t_0_0 -w_0-> ... t_m_0 -k-> t_{m+1}_0 -v-> TOP; per clause i a path
// t_i_0 -X_i0-> t_i_1 -X_i1-> t_i_2 -X_i2-> t_i_3 -u_i-> TOP, and a path
// t_0_0 -y_i-> g_i_0 -u_i-> g_i_1 -k-> g_i_2.
inline GeneratedTs gen_nop_inp(const CmFormula& f) {
    using detail::idx;
    const int m = f.m();
    std::set<std::string> gadget_events{"k", "v"};
    for (int i = 0; i < m; ++i) {
        gadget_events.insert(idx("w", i));
        gadget_events.insert(idx("u", i));
        gadget_events.insert(idx("y", i));
    }
    detail::require_fresh_variables(f, gadget_events);

    RawTs raw;
    raw.initial = "t_0_0";
    for (int i = 0; i < m; ++i) raw.edges.push_back({idx("t", i, 0), idx("w", i), idx("t", i + 1, 0)});
    raw.edges.push_back({idx("t", m, 0), "k", idx("t", m + 1, 0)});
    raw.edges.push_back({idx("t", m + 1, 0), "v", "TOP"});
    for (int i = 0; i < m; ++i) {
        const auto& c = f.clauses[static_cast<std::size_t>(i)];
        for (int j = 0; j < 3; ++j) raw.edges.push_back({idx("t", i, j), f.name(c[static_cast<std::size_t>(j)]), idx("t", i, j + 1)});
        raw.edges.push_back({idx("t", i, 3), idx("u", i), "TOP"});
    }
    for (int i = 0; i < m; ++i) {
        raw.edges.push_back({"t_0_0", idx("y", i), idx("g", i, 0)});
        raw.edges.push_back({idx("g", i, 0), idx("u", i), idx("g", i, 1)});
        raw.edges.push_back({idx("g", i, 1), "k", idx("g", i, 2)});
    }
    return {validate_ts(raw), {idx("t", m, 0), idx("t", m + 1, 0)}};
}

// The separating families for the {nop,inp} reduction. All have sup(t_0_0)=1;
// the listed events get inp, every other event nop.
inline std::vector<NamedRegion> gen_nop_inp_witness(const CmFormula& f, const Model& model) {
    using detail::idx;
    require_model(f, model);
    const int m = f.m();
    const auto gen = gen_nop_inp(f);
    const auto& ts = gen.ts;
    const BooleanType tau{Interaction::nop, Interaction::inp};
    std::vector<NamedRegion> out;
    auto add = [&](const std::string& label, const std::set<std::string>& inp) {
        out.push_back({label, detail::propagate_named(
                                  ts, tau, 1,
                                  [&](const std::string& e) { return inp.count(e) ? Interaction::inp : Interaction::nop; },
                                  label)});
    };

    std::set<std::string> ys, us;
    for (int i = 0; i < m; ++i) {
        ys.insert(idx("y", i));
        us.insert(idx("u", i));
    }
    add("R_1", ys);
    for (int i = 0; i < m; ++i) {
        std::set<std::string> inp{idx("w", i)};
        for (int j = 0; j <= i; ++j) inp.insert(idx("u", j));
        for (int j = i + 1; j < m; ++j) inp.insert(idx("y", j));
        add(idx("R_T", i), inp);
    }
    {
        auto inp = us;
        inp.insert("v");
        add("R_2", inp);
    }
    {
        std::set<std::string> inp{"k"};
        for (int v : model) inp.insert(f.name(v));
        add("R_M", inp);
    }
    for (int i = 0; i + 1 < m; ++i) {
        std::set<std::string> inp;
        for (int j = i + 1; j < m; ++j) inp.insert(idx("y", j));
        add(idx("R_G", i), inp);
    }
    // One region per variable x: x, v and the u's of clauses not containing x.
    for (int x = 0; x < static_cast<int>(f.variables.size()); ++x) {
        std::set<std::string> inp{f.name(x), "v"};
        auto mine = f.clauses_of(x);
        for (int j = 0; j < m; ++j)
            if (std::find(mine.begin(), mine.end(), j) == mine.end()) inp.insert(idx("u", j));
        add("R_X_" + f.name(x), inp);
    }
    return out;
}

} // namespace ssp
