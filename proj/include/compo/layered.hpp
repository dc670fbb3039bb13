// layered.hpp -- the order-preserving bridge to layered permutations
//
// A composition (w1, ..., wm) corresponds to the layered permutation made
// of m descending runs, the i-th run using the next wi values.  Under this
// bijection, deck containment of compositions is classical pattern
// containment of the layered permutations.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "composition.hpp"

namespace compo {

/// A permutation of {1, ..., n} in one-line notation.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `entries` is a rearrangement of
    /// 1..n.
    explicit Permutation(std::vector<int> entries) : entries_(std::move(entries))
    {
        std::vector<bool> seen(entries_.size(), false);
        for (int e : entries_) {
            if (e < 1 || e > static_cast<int>(entries_.size()))
                throw std::invalid_argument("permutation entry " + std::to_string(e) +
                                            " out of range 1.." + std::to_string(entries_.size()));
            if (seen[static_cast<std::size_t>(e - 1)])
                throw std::invalid_argument("permutation entry " + std::to_string(e) + " repeats");
            seen[static_cast<std::size_t>(e - 1)] = true;
        }
    }

    Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const noexcept { return entries_; }
    int operator[](std::size_t i) const { return entries_.at(i); }
    std::size_t length() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    bool operator==(const Permutation& other) const noexcept = default;

private:
    std::vector<int> entries_;
};

/// Comma-separated one-line notation; the empty permutation prints as "()".
inline std::string to_string(const Permutation& p)
{
    if (p.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.entries()[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p)
{
    return os << to_string(p);
}

/// Parses "2,1,3" or "()"; same surface syntax as compositions plus the
/// rearrangement check.
inline Permutation parse_permutation(std::string_view text)
{
    Composition digits = parse_composition(text);
    return Permutation(digits.parts());
}

namespace detail {

/// Layer lengths of p if p is layered, otherwise nothing.  A layered
/// permutation is a direct sum of descending runs, so each layer must be
/// base+len, base+len-1, ..., base+1.
inline std::optional<std::vector<int>> try_layers(const Permutation& p)
{
    const std::vector<int>& e = p.entries();
    std::vector<int> layers;
    std::size_t i = 0;
    int base = 0;
    while (i < e.size()) {
        int len = e[i] - base;
        if (len < 1 || i + static_cast<std::size_t>(len) > e.size()) return std::nullopt;
        for (int j = 0; j < len; ++j)
            if (e[i + static_cast<std::size_t>(j)] != base + len - j) return std::nullopt;
        layers.push_back(len);
        base += len;
        i += static_cast<std::size_t>(len);
    }
    return layers;
}

} // namespace detail

/// The layered permutation with one descending run per part of w.
inline Permutation composition_to_layered(const Composition& w)
{
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(w.sum()));
    int base = 0;
    for (int part : w.parts()) {
        for (int j = 0; j < part; ++j)
            entries.push_back(base + part - j);
        base += part;
    }
    return Permutation(std::move(entries));
}

inline bool is_layered(const Permutation& p)
{
    return detail::try_layers(p).has_value();
}

/// Inverse of composition_to_layered.  Throws std::domain_error if p is
/// not layered.
inline Composition layered_to_composition(const Permutation& p)
{
    std::optional<std::vector<int>> layers = detail::try_layers(p);
    if (!layers)
        throw std::domain_error("permutation " + to_string(p) + " is not layered");
    return Composition(std::move(*layers));
}

/// Classical pattern containment: does some subsequence of `host` have the
/// same relative order as `pattern`?  Brute force over index subsequences
/// with pairwise pruning; guarded to |host| <= 12.
inline bool pattern_contains(const Permutation& pattern, const Permutation& host)
{
    constexpr std::size_t max_host = 12;
    if (host.length() > max_host)
        throw std::domain_error("pattern_contains: hosts longer than " +
                                std::to_string(max_host) + " are beyond the search guard");
    const std::vector<int>& s = pattern.entries();
    const std::vector<int>& h = host.entries();
    if (s.size() > h.size()) return false;
    std::vector<int> chosen;
    chosen.reserve(s.size());
    auto search = [&](auto&& self, std::size_t j, std::size_t start) -> bool {
        if (j == s.size()) return true;
        if (s.size() - j > h.size() - start) return false;
        for (std::size_t i = start; i < h.size(); ++i) {
            bool fits = true;
            for (std::size_t a = 0; a < j && fits; ++a)
                fits = (s[a] < s[j]) == (chosen[a] < h[i]);
            if (!fits) continue;
            chosen.push_back(h[i]);
            if (self(self, j + 1, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return search(search, 0, 0);
}

} // namespace compo
