#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ssp/error.hpp"

namespace ssp {

// Cubic monotone 1-in-3 3SAT instance. Variables are numbered 0..m-1 in
// natural order of their names (X2 before X10); clauses keep their input order.
struct CmFormula {
    std::vector<std::string> variables;
    std::vector<std::array<int, 3>> clauses;

    int m() const { return static_cast<int>(clauses.size()); }
    const std::string& name(int v) const { return variables.at(static_cast<std::size_t>(v)); }

    std::optional<int> find(const std::string& var) const {
        for (std::size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == var) return static_cast<int>(i);
        return std::nullopt;
    }

    // Indices of the clauses containing v, ascending.
    std::vector<int> clauses_of(int v) const {
        std::vector<int> out;
        for (int i = 0; i < m(); ++i)
            for (int x : clauses[static_cast<std::size_t>(i)])
                if (x == v) out.push_back(i);
        return out;
    }

    // The same formula over primed variable names.
    CmFormula renamed(const std::string& suffix = "'") const {
        CmFormula out = *this;
        for (auto& v : out.variables) v += suffix;
        return out;
    }
};

using Model = std::vector<int>;  // sorted variable indices

namespace detail {

// "X10" -> ("X", 10); names without a numeric tail compare as text.
inline bool natural_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t p = s.size();
        while (p > 0 && s[p - 1] >= '0' && s[p - 1] <= '9') --p;
        std::string head = s.substr(0, p);
        std::string digits = s.substr(p);
        return std::make_pair(head, digits);
    };
    auto [ha, da] = split(a);
    auto [hb, db] = split(b);
    if (ha != hb || da.empty() || db.empty()) return a < b;
    auto strip = [](const std::string& d) {
        auto p = d.find_first_not_of('0');
        return p == std::string::npos ? std::string("0") : d.substr(p);
    };
    auto na = strip(da), nb = strip(db);
    if (na.size() != nb.size()) return na.size() < nb.size();
    if (na != nb) return na < nb;
    return a < b;
}

} // namespace detail

inline CmFormula cm_validate(const std::vector<std::array<std::string, 3>>& raw) {
    std::map<std::string, int> occurrences;
    for (std::size_t c = 0; c < raw.size(); ++c) {
        const auto& cl = raw[c];
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            throw DuplicateClause("clause " + std::to_string(c) + " repeats a variable");
        for (const auto& v : cl) ++occurrences[v];
    }
    std::vector<std::string> names;
    for (const auto& [v, n] : occurrences) names.push_back(v);
    std::sort(names.begin(), names.end(), detail::natural_less);
    for (const auto& v : names)
        if (occurrences[v] != 3) throw OccurrenceNotThree(v, occurrences[v]);
    if (names.size() != raw.size())
        throw VariableCountMismatch(std::to_string(names.size()) + " variables for " + std::to_string(raw.size()) +
                                    " clauses");

    CmFormula f;
    f.variables = names;
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
    std::set<std::array<int, 3>> seen;
    for (std::size_t c = 0; c < raw.size(); ++c) {
        std::array<int, 3> cl{index[raw[c][0]], index[raw[c][1]], index[raw[c][2]]};
        auto key = cl;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            throw DuplicateClause("clause " + std::to_string(c) + " repeats an earlier clause");
        f.clauses.push_back(cl);
    }
    return f;
}

// Clauses over variables named X<i>.
inline CmFormula cm_validate(const std::vector<std::array<int, 3>>& raw) {
    std::vector<std::array<std::string, 3>> named;
    for (const auto& c : raw)
        named.push_back({"X" + std::to_string(c[0]), "X" + std::to_string(c[1]), "X" + std::to_string(c[2])});
    return cm_validate(named);
}

inline bool is_one_in_three(const CmFormula& f, const Model& model) {
    std::vector<char> in(f.variables.size(), 0);
    for (int v : model) {
        if (v < 0 || static_cast<std::size_t>(v) >= in.size()) return false;
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& c : f.clauses)
        if (in[static_cast<std::size_t>(c[0])] + in[static_cast<std::size_t>(c[1])] +
                in[static_cast<std::size_t>(c[2])] != 1)
            return false;
    return true;
}

inline void require_model(const CmFormula& f, const Model& model) {
    if (!is_one_in_three(f, model)) throw ModelNotOneInThree("the given set is not a one-in-three model");
}

inline constexpr int cm_oracle_cap = 24;

// Lexicographically least model (as a sorted index list), if any. Variables
// are decided in index order, true first; after each decision every clause
// with a true member forces its other members false and a clause with two
// false members forces the third true.
inline std::optional<Model> cm_oracle(const CmFormula& f) {
    if (f.m() > cm_oracle_cap)
        throw SizeCapExceeded("oracle handles m <= " + std::to_string(cm_oracle_cap) + ", got " +
                              std::to_string(f.m()));
    const int n = static_cast<int>(f.variables.size());
    std::vector<std::vector<int>> occ(static_cast<std::size_t>(n));
    for (int c = 0; c < f.m(); ++c)
        for (int v : f.clauses[static_cast<std::size_t>(c)]) occ[static_cast<std::size_t>(v)].push_back(c);

    std::vector<int> val(static_cast<std::size_t>(n), -1);
    std::vector<int> trail;

    auto assign = [&](int v, int b, auto& self) -> bool {
        auto& cur = val[static_cast<std::size_t>(v)];
        if (cur >= 0) return cur == b;
        cur = b;
        trail.push_back(v);
        for (int c : occ[static_cast<std::size_t>(v)]) {
            const auto& cl = f.clauses[static_cast<std::size_t>(c)];
            int trues = 0, falses = 0, open = -1;
            for (int x : cl) {
                int xv = val[static_cast<std::size_t>(x)];
                if (xv == 1) ++trues;
                else if (xv == 0) ++falses;
                else open = x;
            }
            if (trues > 1 || falses == 3) return false;
            if (trues == 1) {
                for (int x : cl)
                    if (val[static_cast<std::size_t>(x)] < 0 && !self(x, 0, self)) return false;
            } else if (falses == 2 && open >= 0) {
                if (!self(open, 1, self)) return false;
            }
        }
        return true;
    };
    auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
            val[static_cast<std::size_t>(trail.back())] = -1;
            trail.pop_back();
        }
    };
    auto search = [&](int v, auto& self) -> bool {
        while (v < n && val[static_cast<std::size_t>(v)] >= 0) ++v;
        if (v == n) return true;
        for (int b : {1, 0}) {
            auto mark = trail.size();
            if (assign(v, b, assign) && self(v + 1, self)) return true;
            undo(mark);
        }
        return false;
    };
    if (!search(0, search)) return std::nullopt;
    Model m;
    for (int v = 0; v < n; ++v)
        if (val[static_cast<std::size_t>(v)] == 1) m.push_back(v);
    return m;
}

// Comma- or whitespace-separated variable names, e.g. "X0,X4".
inline Model parse_model(const CmFormula& f, const std::string& text) {
    Model m;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        auto v = f.find(token);
        if (!v) throw ModelNotOneInThree("'" + token + "' is not a variable of the formula");
        m.push_back(*v);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n') flush();
        else token += c;
    }
    flush();
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

inline std::string model_to_string(const CmFormula& f, const Model& m, const std::string& sep = " ") {
    std::string out;
    for (int v : m) {
        if (!out.empty()) out += sep;
        out += f.name(v);
    }
    return out;
}

// One clause per line, three whitespace-separated names; '#' starts a comment.
inline CmFormula parse_formula(std::istream& in) {
    std::vector<std::array<std::string, 3>> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens.size() != 3)
            throw ParseError(lineno, "expected three variable names, found " + std::to_string(tokens.size()));
        raw.push_back({tokens[0], tokens[1], tokens[2]});
    }
    if (raw.empty()) throw ParseError(0, "formula has no clauses");
    return cm_validate(raw);
}

inline CmFormula parse_formula(const std::string& text) {
    std::istringstream in(text);
    return parse_formula(in);
}

inline std::string serialize_formula(const CmFormula& f) {
    std::string out;
    for (const auto& c : f.clauses) out += f.name(c[0]) + " " + f.name(c[1]) + " " + f.name(c[2]) + "\n";
    return out;
}

// Fixtures: the six-clause running example with model {X0,X4}, and the
// modelless formula made of all four 3-subsets of {X0,..,X3}.
inline CmFormula example1_formula() {
    return cm_validate(std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {2, 4, 5}, {1, 4, 5}, {3, 4, 5}});
}

inline CmFormula all_subsets_formula() {
    return cm_validate(std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

} // namespace ssp
