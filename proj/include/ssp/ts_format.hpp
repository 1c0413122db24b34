#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssp/transition_system.hpp"

namespace ssp {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

inline void check_file_id(const std::string& id, int lineno) {
    if (!valid_identifier(id, true)) throw ParseError(lineno, "invalid identifier '" + id + "'");
}

} // namespace detail

// First content line `initial <state>`, then one `<src> <event> <dst>` per line.
inline TransitionSystem parse_ts(std::istream& in) {
    RawTs raw;
    bool have_initial = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
        auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        if (!have_initial) {
            if (tok.size() != 2 || tok[0] != "initial")
                throw ParseError(lineno, "expected 'initial <state>' before any edge");
            detail::check_file_id(tok[1], lineno);
            raw.initial = tok[1];
            have_initial = true;
            continue;
        }
        if (tok[0] == "initial") throw ParseError(lineno, "initial state declared twice");
        if (tok.size() != 3) throw ParseError(lineno, "expected '<src> <event> <dst>', found " + std::to_string(tok.size()) + " fields");
        for (const auto& t : tok) detail::check_file_id(t, lineno);
        raw.edges.push_back({tok[0], tok[1], tok[2]});
    }
    if (!have_initial) throw ParseError(0, "missing 'initial <state>' line");
    return validate_ts(raw);
}

inline TransitionSystem parse_ts(const std::string& text) {
    std::istringstream in(text);
    return parse_ts(in);
}

// Edges come out sorted by (src, event, dst) name.
inline std::string serialize_ts(const TransitionSystem& ts) {
    std::string out = "initial " + ts.state_name(ts.initial()) + "\n";
    for (const auto& e : ts.edges())
        out += ts.state_name(e.src) + " " + ts.event_name(e.event) + " " + ts.state_name(e.dst) + "\n";
    return out;
}

// {"initial": s, "edges": [[src, event, dst], ...]}
inline nlohmann::json ts_to_json(const TransitionSystem& ts) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : ts.edges())
        edges.push_back({ts.state_name(e.src), ts.event_name(e.event), ts.state_name(e.dst)});
    return {{"initial", ts.state_name(ts.initial())}, {"edges", edges}};
}

inline TransitionSystem ts_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("initial") || !j["initial"].is_string())
        throw ParseError(0, "JSON TS needs a string field 'initial'");
    RawTs raw;
    raw.initial = j["initial"].get<std::string>();
    detail::check_file_id(raw.initial, 0);
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError(0, "'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
                throw ParseError(0, "each edge must be [src, event, dst]");
            RawEdge r{e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()};
            for (const auto* t : {&r.src, &r.event, &r.dst}) detail::check_file_id(*t, 0);
            raw.edges.push_back(r);
        }
    }
    return validate_ts(raw);
}

inline TransitionSystem parse_ts_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    return ts_from_json(j);
}

inline std::string to_dot(const TransitionSystem& ts) {
    auto q = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::string out = "digraph ts {\n  __start [shape=point];\n  __start -> " + q(ts.state_name(ts.initial())) + ";\n";
    for (const auto& name : ts.state_names()) out += "  " + q(name) + ";\n";
    for (const auto& e : ts.edges())
        out += "  " + q(ts.state_name(e.src)) + " -> " + q(ts.state_name(e.dst)) + " [label=" + q(ts.event_name(e.event)) + "];\n";
    return out + "}\n";
}

} // namespace ssp
