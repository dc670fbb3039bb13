// deck.hpp -- deletion decks: finite sets of equal-sum compositions

#pragma once

#include <algorithm>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "composition.hpp"

namespace compo {

/// A deck: a nonempty set of pairwise distinct compositions of a common
/// sum, as produced by k-fold deletion.  Elements are kept sorted in
/// canonical order (shorter first, then lexicographic), so decks compare
/// as sets.
class Deck {
public:
    /// Sorts, deduplicates and validates.  Throws std::invalid_argument if
    /// `elements` is empty, std::domain_error if the sums disagree.
    static Deck from_elements(std::vector<Composition> elements)
    {
        if (elements.empty())
            throw std::invalid_argument("a deck must contain at least one composition");
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        int sum = elements.front().sum();
        for (const Composition& d : elements)
            if (d.sum() != sum)
                throw std::domain_error("deck elements must all have the same sum: found " +
                                        std::to_string(d.sum()) + " and " + std::to_string(sum));
        return Deck(std::move(elements), sum);
    }

    const std::vector<Composition>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// The common sum of the elements (n - k for the deck of a composition
    /// of n).
    int target_sum() const noexcept { return target_sum_; }

    /// Elements are sorted by length first, so these are O(1).
    std::size_t min_length() const noexcept { return elements_.front().length(); }
    std::size_t max_length() const noexcept { return elements_.back().length(); }

    /// Set membership.
    bool has_element(const Composition& d) const
    {
        return std::binary_search(elements_.begin(), elements_.end(), d);
    }

    /// True iff some element contains `probe`.  This is the only question
    /// the reconstruction procedures ever ask of a deck.
    bool contains_probe(const Composition& probe) const
    {
        for (const Composition& d : elements_)
            if (d.contains(probe)) return true;
        return false;
    }

    bool operator==(const Deck& other) const noexcept = default;

private:
    Deck(std::vector<Composition> sorted_unique, int sum)
      : elements_(std::move(sorted_unique)), target_sum_(sum) {}

    std::vector<Composition> elements_;
    int target_sum_ = 0;
};

namespace detail {

/// Appends all single-deletion moves of w to `out`, skipping the duplicate
/// removals inside a run of 1's.
inline void append_one_deletions(const Composition& w, std::vector<Composition>& out)
{
    const std::vector<int>& p = w.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= 2) {
            std::vector<int> q = p;
            q[i] -= 1;
            out.emplace_back(std::move(q));
        } else if (i == 0 || p[i - 1] != 1) {
            std::vector<int> q = p;
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
            out.emplace_back(std::move(q));
        }
    }
}

inline void sort_unique(std::vector<Composition>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

/// All single deletions of w: lower a part >= 2 by 1, or remove a part
/// equal to 1.  Sorted, deduplicated.  Throws std::domain_error on the
/// empty composition (nothing can be deleted).
inline std::vector<Composition> one_deletions(const Composition& w)
{
    if (w.empty())
        throw std::domain_error("the empty composition has no deletions");
    std::vector<Composition> out;
    out.reserve(w.length());
    detail::append_one_deletions(w, out);
    detail::sort_unique(out);
    return out;
}

/// The k-deletion deck of w: every composition reachable by k single
/// deletions, equivalently every composition of sum(w) - k contained in w.
/// Throws std::domain_error if k < 0 or k > sum(w).
inline Deck k_deletions(const Composition& w, int k)
{
    if (k < 0)
        throw std::domain_error("the number of deletions must be >= 0");
    if (k > w.sum())
        throw std::domain_error("cannot delete " + std::to_string(k) + " from a composition of " +
                                std::to_string(w.sum()));
    std::vector<Composition> level{w};
    for (int step = 0; step < k; ++step) {
        std::vector<Composition> next;
        next.reserve(level.size() * 2);
        for (const Composition& d : level)
            detail::append_one_deletions(d, next);
        detail::sort_unique(next);
        level = std::move(next);
    }
    return Deck::from_elements(std::move(level));
}

/// Reads a deck from a stream: one composition per line, '#' starts a
/// comment line, blank lines are skipped, duplicates merge.  Throws
/// std::invalid_argument with a "line N" diagnostic on malformed input,
/// std::domain_error if the sums disagree.
inline Deck load_deck(std::istream& in)
{
    std::vector<Composition> elements;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        try {
            elements.push_back(parse_composition(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ", " + e.what());
        }
    }
    if (elements.empty())
        throw std::invalid_argument("deck input contains no compositions");
    try {
        return Deck::from_elements(std::move(elements));
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string("deck input is not sum-homogeneous: ") + e.what());
    }
}

} // namespace compo
