#pragma once

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minorb {

/// Thrown on malformed type strings and on (family, rank) pairs outside the
/// simple-type ranges.
class InvalidTypeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

constexpr std::array<Family, 7> all_families = {Family::A, Family::B, Family::C, Family::D,
                                                Family::E, Family::F, Family::G};

inline char family_letter(Family f) { return static_cast<char>(f); }

/// Valid ranks per family. B1, C1 and D2, D3 are rejected rather than
/// aliased to their A-family isomorphs.
inline bool is_valid_lie_type(Family f, int rank) noexcept {
    switch (f) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 4;
        case Family::E: return rank == 6 || rank == 7 || rank == 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

inline std::string rank_range_message(Family f) {
    switch (f) {
        case Family::A: return "rank for A must be >= 1";
        case Family::B: return "rank for B must be >= 2 (B1 is isomorphic to A1)";
        case Family::C: return "rank for C must be >= 2 (C1 is isomorphic to A1)";
        case Family::D: return "rank for D must be >= 4 (D3 is isomorphic to A3, D2 to A1 x A1)";
        case Family::E: return "rank for E must be one of {6, 7, 8}";
        case Family::F: return "rank for F must be 4";
        case Family::G: return "rank for G must be 2";
    }
    return "unknown family";
}

/// A simple type: family letter plus rank, e.g. E8. Always valid once
/// constructed.
struct LieType {
    Family family;
    int rank;

    [[nodiscard]] std::string name() const {
        return std::string(1, family_letter(family)) + std::to_string(rank);
    }

    friend bool operator==(const LieType& a, const LieType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }
    friend bool operator<(const LieType& a, const LieType& b) {
        if (a.family != b.family) return family_letter(a.family) < family_letter(b.family);
        return a.rank < b.rank;
    }
};

inline LieType make_lie_type(Family f, int rank) {
    if (!is_valid_lie_type(f, rank)) {
        throw InvalidTypeError(rank_range_message(f));
    }
    return LieType{f, rank};
}

/// Parses "<letter><digits>" case-insensitively ("A5", "e8", "g2").
inline LieType parse_lie_type(std::string_view text) {
    if (text.empty()) {
        throw InvalidTypeError("malformed Lie type '': expected <letter><rank>, e.g. A5 or E8");
    }
    const char raw = text[0];
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
    if (letter < 'A' || letter > 'G') {
        throw InvalidTypeError(std::string("unknown family '") + raw +
                               "': expected one of A, B, C, D, E, F, G");
    }
    const std::string_view digits = text.substr(1);
    if (digits.empty() || digits.size() > 4) {
        throw InvalidTypeError("malformed Lie type '" + std::string(text) +
                               "': expected <letter><rank>, e.g. A5 or E8");
    }
    int rank = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InvalidTypeError("malformed Lie type '" + std::string(text) +
                                   "': expected <letter><rank>, e.g. A5 or E8");
        }
        rank = rank * 10 + (c - '0');
    }
    return make_lie_type(static_cast<Family>(letter), rank);
}

}  // namespace minorb
