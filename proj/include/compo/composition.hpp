// composition.hpp -- compositions of an integer and their containment order

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compo {

/// A composition: a finite word of positive integers.  The empty word is
/// the unique composition of 0.  Immutable after construction.
class Composition {
public:
    /// The empty composition.
    Composition() = default;

    /// Throws std::invalid_argument if any part is < 1.
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("composition parts must be >= 1");
    }

    Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_.at(i); }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Sum of the parts (the integer this composes).
    int sum() const noexcept
    {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }

    /// sum() - length(): the total excess of the parts over 1.
    int exceedance() const noexcept { return sum() - static_cast<int>(length()); }

    /// Total excess of the >=2 parts over 2.
    int second_exceedance() const noexcept
    {
        int total = 0;
        for (int p : parts_)
            if (p >= 2) total += p - 2;
        return total;
    }

    /// Number of parts equal to 1.
    int ones() const noexcept
    {
        int count = 0;
        for (int p : parts_)
            if (p == 1) ++count;
        return count;
    }

    /// True iff `inner` embeds into this composition: some subword of *this
    /// dominates inner entrywise.  Greedy leftmost matching, O(length());
    /// agrees with exhaustive search over embeddings (see the tests).
    bool contains(const Composition& inner) const noexcept
    {
        if (inner.parts_.size() > parts_.size()) return false;
        std::size_t j = 0;
        for (std::size_t i = 0; i < parts_.size() && j < inner.parts_.size(); ++i)
            if (parts_[i] >= inner.parts_[j]) ++j;
        return j == inner.parts_.size();
    }

    /// Canonical order: by length, then lexicographically by parts.
    std::strong_ordering operator<=>(const Composition& other) const noexcept
    {
        if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            parts_.begin(), parts_.end(),
            other.parts_.begin(), other.parts_.end());
    }

    bool operator==(const Composition& other) const noexcept = default;

private:
    std::vector<int> parts_;
};

/// Comma-separated decimal parts; the empty composition prints as "()".
inline std::string to_string(const Composition& w)
{
    if (w.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w.parts()[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Composition& w)
{
    return os << to_string(w);
}

/// Parses "5,1,2,2" or "()" (spaces around tokens tolerated).  Throws
/// std::invalid_argument with a 1-based column diagnostic.
inline Composition parse_composition(std::string_view text)
{
    auto fail = [](std::size_t column, const std::string& what) -> Composition {
        throw std::invalid_argument("column " + std::to_string(column) + ": " + what);
    };
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

    std::size_t i = 0;
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t end = text.size();
    while (end > i && is_space(text[end - 1])) --end;

    if (i == end)
        return fail(1, "empty composition text (the empty composition is written \"()\")");
    if (text.substr(i, end - i) == "()") return Composition();

    std::vector<int> parts;
    for (;;) {
        while (i < end && is_space(text[i])) ++i;
        if (i == end || !is_digit(text[i]))
            return fail(i + 1, "expected a digit");
        long value = 0;
        std::size_t start = i;
        while (i < end && is_digit(text[i])) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000000)
                return fail(start + 1, "part exceeds the supported range");
            ++i;
        }
        if (value < 1)
            return fail(start + 1, "parts must be >= 1");
        parts.push_back(static_cast<int>(value));
        while (i < end && is_space(text[i])) ++i;
        if (i == end) break;
        if (text[i] != ',')
            return fail(i + 1, "expected ',' between parts");
        ++i;
    }
    return Composition(std::move(parts));
}

} // namespace compo
