#pragma once

#include <array>
#include <string>
#include <vector>

#include "ssp/interaction.hpp"
#include "ssp/region.hpp"

namespace ssp {

enum class Complexity { Polynomial, NPComplete };

struct Classification {
    int figure_row = 0;
    Complexity complexity = Complexity::Polynomial;
    bool operator==(const Classification&) const = default;

    // e.g. "§6 NP-complete", "§10 polynomial"
    std::string to_string() const {
        return "§" + std::to_string(figure_row) +
               (complexity == Complexity::NPComplete ? " NP-complete" : " polynomial");
    }
};

inline constexpr Complexity row_complexity(int row) {
    switch (row) {
    case 1: case 2: case 3: case 5: case 6: case 9: return Complexity::NPComplete;
    default: return Complexity::Polynomial;
    }
}

inline constexpr Interaction flip(Interaction i) noexcept {
    switch (i) {
    case Interaction::inp: return Interaction::out;
    case Interaction::out: return Interaction::inp;
    case Interaction::res: return Interaction::set;
    case Interaction::set: return Interaction::res;
    case Interaction::used: return Interaction::free;
    case Interaction::free: return Interaction::used;
    default: return i;
    }
}

inline constexpr BooleanType flip_type(BooleanType tau) noexcept {
    BooleanType out;
    for (auto i : all_interactions)
        if (tau.contains(i)) out.insert(flip(i));
    return out;
}

// Transports a tau-region to a flip_type(tau)-region: complemented support, flipped signature.
inline Region flip_region(const Region& r) {
    Region out = r;
    for (auto& b : out.sup) b = static_cast<Bit>(1 - b);
    for (auto& i : out.sig) i = flip(i);
    return out;
}

// The TS is unchanged; only the region moves.
inline Region flip_ts(const TransitionSystem& ts, const Region& r) {
    check_total(ts, r);
    return flip_region(r);
}

// Checks that x -> 1-x maps the edges of tau's TS onto those of flip_type(tau).
inline bool flip_is_isomorphism(BooleanType tau) {
    auto other = flip_type(tau);
    auto a = type_edges(tau);
    auto b = type_edges(other);
    if (a.size() != b.size()) return false;
    for (const auto& e : a)
        if (!has_edge(other, static_cast<Bit>(1 - e.from), flip(e.label), static_cast<Bit>(1 - e.to))) return false;
    for (const auto& e : b)
        if (!has_edge(tau, static_cast<Bit>(1 - e.from), flip(e.label), static_cast<Bit>(1 - e.to))) return false;
    return true;
}

// One line of the complexity overview: base ∪ ω with ω ⊆ free_part,
// optionally requiring ω to meet must_meet.
struct RowPattern {
    int row;
    BooleanType base;
    BooleanType free_part;
    BooleanType must_meet;

    bool matches(BooleanType tau) const {
        if (!base.subset_of(tau)) return false;
        auto omega = tau - base;
        if (!omega.subset_of(free_part)) return false;
        return must_meet.empty() || omega.intersects(must_meet);
    }
};

inline const std::vector<RowPattern>& figure_rows() {
    using I = Interaction;
    static const std::vector<RowPattern> rows{
        {1, {I::nop, I::res, I::set, I::swap}, {I::inp, I::out, I::used, I::free}, {}},
        {2, {I::nop, I::res, I::swap}, {I::inp, I::out, I::used, I::free}, {}},
        {2, {I::nop, I::set, I::swap}, {I::inp, I::out, I::used, I::free}, {}},
        {3, {I::nop, I::res, I::set}, {I::inp, I::out, I::used, I::free}, {}},
        {3, {I::nop, I::out, I::res}, {I::inp, I::used, I::free}, {}},
        {3, {I::nop, I::inp, I::set}, {I::out, I::used, I::free}, {}},
        {4, {I::nop, I::res}, {I::inp, I::used, I::free}, {}},
        {4, {I::nop, I::set}, {I::out, I::used, I::free}, {}},
        {5, {I::nop, I::inp, I::out}, {}, {}},
        {5, {I::nop, I::inp, I::out, I::used}, {}, {}},
        {6, {I::nop, I::inp, I::out, I::free}, {}, {}},
        {6, {I::nop, I::inp, I::out, I::used, I::free}, {}, {}},
        {6, {I::nop, I::inp}, {I::used, I::free}, {}},
        {6, {I::nop, I::out}, {I::used, I::free}, {}},
        {7, {I::nop, I::swap}, {I::inp, I::out, I::used, I::free}, {}},
        {7, {I::nop}, {I::used, I::free}, {}},
        {8, {}, {I::inp, I::out, I::res, I::set, I::used, I::free}, {}},
        {9, {I::swap}, {I::inp, I::out, I::res, I::set, I::used, I::free}, {I::res, I::set, I::used, I::free}},
        {10, {I::swap}, {I::inp, I::out}, {}},
    };
    return rows;
}

// All rows whose pattern matches; exactly one for every type.
inline std::vector<int> matching_rows(BooleanType tau) {
    std::vector<int> out;
    for (const auto& p : figure_rows())
        if (p.matches(tau)) out.push_back(p.row);
    return out;
}

inline Classification classify_by_table(BooleanType tau) {
    auto rows = matching_rows(tau);
    if (rows.size() != 1) return {0, Complexity::Polynomial};
    return {rows.front(), row_complexity(rows.front())};
}

// Decision rules following the hardness theorems, with the remaining cases
// filled in from the polynomial rows.
inline Classification classify_by_rules(BooleanType tau) {
    using I = Interaction;
    auto has = [&](I i) { return tau.contains(i); };
    auto row = [](int r) { return Classification{r, row_complexity(r)}; };

    if (!has(I::nop)) {
        if (!has(I::swap)) return row(8);
        return row(tau.intersects(groups::save) ? 9 : 10);
    }
    const bool res = has(I::res), set = has(I::set), swap = has(I::swap);
    if (!res && !set) {
        if (swap) return row(7);
        if (!has(I::inp) && !has(I::out)) return row(7);
        if (has(I::inp) && has(I::out) && !has(I::free)) return row(5);
        return row(6);
    }
    if (res && set) return row(swap ? 1 : 3);
    if (res) {
        if (swap) return row(2);
        return row(has(I::out) ? 3 : 4);
    }
    if (swap) return row(2);
    return row(has(I::inp) ? 3 : 4);
}

inline Classification classify_type(BooleanType tau) { return classify_by_rules(tau); }

struct TypeEntry {
    BooleanType type;
    Classification classification;
};

inline std::vector<TypeEntry> enumerate_types() {
    std::vector<TypeEntry> out;
    out.reserve(256);
    for (unsigned m = 0; m < 256; ++m) {
        auto t = BooleanType::from_mask(static_cast<std::uint8_t>(m));
        out.push_back({t, classify_type(t)});
    }
    return out;
}

inline std::array<int, 11> row_counts() {
    std::array<int, 11> counts{};
    for (const auto& e : enumerate_types()) ++counts[static_cast<std::size_t>(e.classification.figure_row)];
    return counts;
}

} // namespace ssp
