#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssp/classify.hpp"
#include "ssp/engine.hpp"
#include "ssp/nop_inp_reduction.hpp"

namespace ssp {

inline nlohmann::json atom_to_json(const TransitionSystem& ts, Atom a) {
    return nlohmann::json::array({ts.state_name(a.first), ts.state_name(a.second)});
}

inline nlohmann::json region_to_json(const TransitionSystem& ts, const Region& r) {
    nlohmann::json sup = nlohmann::json::object(), sig = nlohmann::json::object();
    for (StateId s = 0; s < ts.num_states(); ++s) sup[ts.state_name(s)] = static_cast<int>(r.sup[s]);
    for (EventId e = 0; e < ts.num_events(); ++e) sig[ts.event_name(e)] = std::string(name(r.sig[e]));
    return {{"sup", sup}, {"sig", sig}};
}

inline Region region_from_json(const TransitionSystem& ts, const nlohmann::json& j) {
    std::map<std::string, Bit> sup;
    std::map<std::string, Interaction> sig;
    try {
        for (const auto& [k, v] : j.at("sup").items()) sup[k] = static_cast<Bit>(v.get<int>());
        for (const auto& [k, v] : j.at("sig").items()) {
            auto i = interaction_from_name(v.get<std::string>());
            if (!i) throw UnknownInteractionName(v.get<std::string>());
            sig[k] = *i;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed region: ") + e.what());
    }
    return region_from_maps(ts, sup, sig);
}

inline nlohmann::json stats_to_json(const SearchStats& s) {
    return {{"atoms_checked", s.atoms_checked}, {"nodes_expanded", s.nodes_expanded}, {"wall_ms", s.wall_ms}};
}

// {decision, witness_atom, regions, stats}
inline nlohmann::json report_to_json(const TransitionSystem& ts, const SeparationReport& rep) {
    nlohmann::json regions = nlohmann::json::array();
    for (const auto& r : rep.regions) regions.push_back(region_to_json(ts, r));
    return {{"decision", to_string(rep.decision)},
            {"witness_atom", rep.witness_atom ? atom_to_json(ts, *rep.witness_atom) : nlohmann::json(nullptr)},
            {"regions", regions},
            {"stats", stats_to_json(rep.stats)}};
}

inline nlohmann::json classification_to_json(BooleanType tau, const Classification& c) {
    return {{"type", tau.to_string()},
            {"row", c.figure_row},
            {"complexity", c.complexity == Complexity::NPComplete ? "NP-complete" : "polynomial"},
            {"label", c.to_string()}};
}

inline nlohmann::json verdict_to_json(const TransitionSystem& ts, Atom a, const AtomVerdict& v) {
    return {{"atom", atom_to_json(ts, a)},
            {"status", to_string(v.status)},
            {"region", v.region ? region_to_json(ts, *v.region) : nlohmann::json(nullptr)},
            {"nodes", v.nodes}};
}

inline nlohmann::json named_regions_to_json(const TransitionSystem& ts, const std::vector<NamedRegion>& rs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& nr : rs) {
        auto j = region_to_json(ts, nr.region);
        j["name"] = nr.name;
        out.push_back(j);
    }
    return out;
}

} // namespace ssp
