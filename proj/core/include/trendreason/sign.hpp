#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>

namespace trendreason {

// Qualitative sign of a quantity or one of its time derivatives.
// The enumerator order fixes the canonical sort order used everywhere:
// plus < zero < minus, so that all-increasing scenarios sort first and
// all-decreasing scenarios last.
enum class Sign : std::uint8_t { Plus = 0, Zero = 1, Minus = 2 };

constexpr char to_char(Sign s) {
    switch (s) {
    case Sign::Plus: return '+';
    case Sign::Zero: return '0';
    case Sign::Minus: return '-';
    }
    return '?';
}

constexpr std::optional<Sign> sign_from_char(char c) {
    switch (c) {
    case '+': return Sign::Plus;
    case '0': return Sign::Zero;
    case '-': return Sign::Minus;
    default: return std::nullopt;
    }
}

// Sign of a product; zero absorbs.
constexpr Sign qmul(Sign a, Sign b) {
    if (a == Sign::Zero || b == Sign::Zero) return Sign::Zero;
    return a == b ? Sign::Plus : Sign::Minus;
}

// Sign of a squared quantity.
constexpr Sign qsq(Sign a) { return a == Sign::Zero ? Sign::Zero : Sign::Plus; }

constexpr Sign qneg(Sign a) {
    switch (a) {
    case Sign::Plus: return Sign::Minus;
    case Sign::Minus: return Sign::Plus;
    case Sign::Zero: return Sign::Zero;
    }
    return a;
}

// A subset of {plus, zero, minus}. The full set stands for the "anything"
// quantifier `*`: the sum of two opposite nonzero signs is indeterminate.
class SignSet {
public:
    constexpr SignSet() = default;
    constexpr SignSet(std::initializer_list<Sign> signs) {
        for (Sign s : signs) insert(s);
    }

    static constexpr SignSet all() { return SignSet{Sign::Plus, Sign::Zero, Sign::Minus}; }

    constexpr void insert(Sign s) { bits_ |= bit(s); }
    constexpr bool contains(Sign s) const { return (bits_ & bit(s)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool full() const { return bits_ == 0b111; }
    constexpr int size() const {
        return int(contains(Sign::Plus)) + int(contains(Sign::Zero)) + int(contains(Sign::Minus));
    }
    constexpr SignSet intersect(SignSet other) const {
        SignSet r;
        r.bits_ = bits_ & other.bits_;
        return r;
    }

    friend constexpr bool operator==(SignSet, SignSet) = default;

    // "*" for the full set, otherwise a bracketed list in canonical order,
    // e.g. "[+,0]".
    std::string to_string() const {
        if (full()) return "*";
        std::string out = "[";
        bool first = true;
        for (Sign s : {Sign::Plus, Sign::Zero, Sign::Minus}) {
            if (!contains(s)) continue;
            if (!first) out += ',';
            out += to_char(s);
            first = false;
        }
        out += ']';
        return out;
    }

private:
    static constexpr std::uint8_t bit(Sign s) { return std::uint8_t(1u << static_cast<std::uint8_t>(s)); }
    std::uint8_t bits_ = 0;
};

// Set-valued qualitative addition. Opposite nonzero signs cancel in an
// unknown way, so the result is the full set.
constexpr SignSet qsum(Sign a, Sign b) {
    if (b == Sign::Zero) return SignSet{a};
    if (a == Sign::Zero) return SignSet{b};
    if (a == b) return SignSet{a};
    return SignSet::all();
}

} // namespace trendreason
