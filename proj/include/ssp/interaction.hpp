#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssp/error.hpp"

namespace ssp {

using Bit = std::uint8_t;

// The eight Boolean interactions, in the fixed order used for enumeration and tie-breaking.
enum class Interaction : std::uint8_t { nop, inp, out, res, set, swap, used, free };

inline constexpr std::array<Interaction, 8> all_interactions{
    Interaction::nop, Interaction::inp, Interaction::out,  Interaction::res,
    Interaction::set, Interaction::swap, Interaction::used, Interaction::free};

// Partial function {0,1} -> {0,1}. Absent where the interaction is undefined:
// inp at 0, out at 1, used at 0, free at 1.
constexpr std::optional<Bit> apply(Interaction i, Bit x) noexcept {
    switch (i) {
    case Interaction::nop: return x;
    case Interaction::inp: return x == 1 ? std::optional<Bit>{0} : std::nullopt;
    case Interaction::out: return x == 0 ? std::optional<Bit>{1} : std::nullopt;
    case Interaction::res: return Bit{0};
    case Interaction::set: return Bit{1};
    case Interaction::swap: return static_cast<Bit>(1 - x);
    case Interaction::used: return x == 1 ? std::optional<Bit>{1} : std::nullopt;
    case Interaction::free: return x == 0 ? std::optional<Bit>{0} : std::nullopt;
    }
    return std::nullopt;
}

constexpr std::string_view name(Interaction i) noexcept {
    constexpr std::array<std::string_view, 8> names{"nop", "inp", "out",  "res",
                                                    "set", "swap", "used", "free"};
    return names[static_cast<std::size_t>(i)];
}

inline std::optional<Interaction> interaction_from_name(std::string_view text) {
    std::string lower(text);
    for (auto& c : lower) c = static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    for (auto i : all_interactions)
        if (name(i) == lower) return i;
    return std::nullopt;
}

// A Boolean type of net, identified with its set of interactions.
class BooleanType {
public:
    constexpr BooleanType() = default;
    constexpr BooleanType(std::initializer_list<Interaction> members) {
        for (auto i : members) bits_ |= bit(i);
    }
    static constexpr BooleanType from_mask(std::uint8_t mask) {
        BooleanType t;
        t.bits_ = mask;
        return t;
    }
    static constexpr BooleanType all() { return from_mask(0xFF); }

    constexpr std::uint8_t mask() const noexcept { return bits_; }
    constexpr bool contains(Interaction i) const noexcept { return (bits_ & bit(i)) != 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool intersects(BooleanType other) const noexcept { return (bits_ & other.bits_) != 0; }
    constexpr bool subset_of(BooleanType other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    constexpr BooleanType& insert(Interaction i) noexcept {
        bits_ |= bit(i);
        return *this;
    }
    constexpr BooleanType& erase(Interaction i) noexcept {
        bits_ &= static_cast<std::uint8_t>(~bit(i));
        return *this;
    }
    constexpr BooleanType operator|(BooleanType o) const noexcept { return from_mask(bits_ | o.bits_); }
    constexpr BooleanType operator&(BooleanType o) const noexcept { return from_mask(bits_ & o.bits_); }
    constexpr BooleanType operator-(BooleanType o) const noexcept {
        return from_mask(static_cast<std::uint8_t>(bits_ & ~o.bits_));
    }
    constexpr bool operator==(const BooleanType&) const = default;

    // Members in canonical interaction order.
    std::vector<Interaction> members() const {
        std::vector<Interaction> out;
        for (auto i : all_interactions)
            if (contains(i)) out.push_back(i);
        return out;
    }

    // Comma-separated member names, e.g. "nop,inp". Empty type renders as "".
    std::string to_string() const {
        std::string out;
        for (auto i : members()) {
            if (!out.empty()) out += ',';
            out += name(i);
        }
        return out;
    }

    // Parses a comma-separated list of interaction names (case-insensitive).
    // The empty string denotes the empty type; duplicates are rejected.
    static BooleanType parse(std::string_view spec) {
        BooleanType t;
        if (spec.empty()) return t;
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            auto comma = spec.find(',', pos);
            auto token = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
            auto i = interaction_from_name(token);
            if (!i) throw UnknownInteractionName(std::string(token));
            if (t.contains(*i)) throw InvalidTypeSpec("duplicate interaction '" + std::string(name(*i)) + "'");
            t.insert(*i);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return t;
    }

private:
    static constexpr std::uint8_t bit(Interaction i) noexcept {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(i));
    }
    std::uint8_t bits_ = 0;
};

// Interaction groups by their effect on the two states of a type.
namespace groups {
inline constexpr BooleanType exit{Interaction::inp, Interaction::res, Interaction::swap};
inline constexpr BooleanType enter{Interaction::out, Interaction::set, Interaction::swap};
inline constexpr BooleanType save1{Interaction::nop, Interaction::set, Interaction::used};
inline constexpr BooleanType save0{Interaction::nop, Interaction::res, Interaction::free};
inline constexpr BooleanType save = save1 | save0;
} // namespace groups

// Edge x -i-> y of the type's own two-state transition system.
struct TypeEdge {
    Bit from;
    Interaction label;
    Bit to;
    bool operator==(const TypeEdge&) const = default;
};

inline std::vector<TypeEdge> type_edges(BooleanType tau) {
    std::vector<TypeEdge> out;
    for (auto i : tau.members())
        for (Bit x : {Bit{0}, Bit{1}})
            if (auto y = apply(i, x)) out.push_back({x, i, *y});
    return out;
}

constexpr bool has_edge(BooleanType tau, Bit x, Interaction i, Bit y) noexcept {
    if (!tau.contains(i)) return false;
    auto r = apply(i, x);
    return r && *r == y;
}

} // namespace ssp
