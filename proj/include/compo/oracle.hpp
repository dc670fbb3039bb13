// oracle.hpp -- exhaustive enumeration and the brute-force reconstruction oracle

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deck.hpp"

namespace compo {

/// Ceiling on the sums the exhaustive paths will enumerate (2^21
/// compositions).  Keeps brute force answers in interactive time.
inline constexpr int max_enumeration_sum = 22;

namespace detail {

inline void check_enumerable(int n, const char* where)
{
    if (n < 0)
        throw std::domain_error(std::string(where) + ": the sum must be >= 0");
    if (n > max_enumeration_sum)
        throw std::domain_error(std::string(where) + ": sums above " +
                                std::to_string(max_enumeration_sum) +
                                " are beyond the enumeration ceiling");
}

} // namespace detail

/// Number of compositions of n: 2^(n-1) for n >= 1, one (the empty
/// composition) for n = 0.
inline std::uint64_t composition_count(int n)
{
    if (n < 0)
        throw std::domain_error("composition_count: the sum must be >= 0");
    if (n > 63)
        throw std::domain_error("composition_count: result would overflow");
    return n == 0 ? 1 : std::uint64_t{1} << (n - 1);
}

/// Visits every composition of n exactly once, in enumeration order:
/// lexicographic by parts, so 1,1,...,1 first and the single part n last.
/// The successor rule is O(1) amortized: bump the second-to-last part and
/// respread the rest as 1's.
template <class Fn>
void for_each_composition(int n, Fn&& fn)
{
    detail::check_enumerable(n, "for_each_composition");
    if (n == 0) {
        fn(Composition());
        return;
    }
    std::vector<int> parts(static_cast<std::size_t>(n), 1);
    for (;;) {
        fn(Composition(parts));
        if (parts.size() == 1) break;
        int spread = parts.back() - 1;
        parts.pop_back();
        parts.back() += 1;
        parts.insert(parts.end(), static_cast<std::size_t>(spread), 1);
    }
}

/// All compositions of n in enumeration order.
inline std::vector<Composition> enumerate_compositions(int n)
{
    std::vector<Composition> out;
    out.reserve(composition_count(n));
    for_each_composition(n, [&](const Composition& w) { out.push_back(w); });
    return out;
}

/// The index-th (0-based) composition of n in enumeration order, without
/// enumerating.  A composition of n is a bitmask of cuts after positions
/// 1..n-1 of the word 1^n; enumeration order is descending mask order.
inline Composition nth_composition(int n, std::uint64_t index)
{
    detail::check_enumerable(n, "nth_composition");
    std::uint64_t total = composition_count(n);
    if (index >= total)
        throw std::out_of_range("nth_composition: index " + std::to_string(index) +
                                " out of range for sum " + std::to_string(n));
    if (n == 0) return Composition();
    std::uint64_t mask = total - 1 - index;
    std::vector<int> parts;
    int run = 1;
    for (int cut = 1; cut <= n - 1; ++cut) {
        if ((mask >> (n - 1 - cut)) & 1) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

/// The k-deletion deck computed the slow way, as the set of all
/// compositions of sum(w) - k contained in w.  Cross-check for
/// k_deletions; requires sum(w) - k within the enumeration ceiling.
inline Deck k_deletions_by_containment(const Composition& w, int k)
{
    if (k < 0 || k > w.sum())
        throw std::domain_error("k_deletions_by_containment: k must lie in [0, sum]");
    std::vector<Composition> hits;
    for_each_composition(w.sum() - k, [&](const Composition& u) {
        if (w.contains(u)) hits.push_back(u);
    });
    return Deck::from_elements(std::move(hits));
}

/// Every composition whose k-deletion deck is exactly `deck`, in canonical
/// order.  Pure enumeration; independent of the constructive
/// reconstruction, so it can serve as its oracle.  Requires
/// target_sum + k within the enumeration ceiling.
inline std::vector<Composition> brute_force_preimages(const Deck& deck, int k)
{
    if (k < 0)
        throw std::domain_error("brute_force_preimages: k must be >= 0");
    int n = deck.target_sum() + k;
    detail::check_enumerable(n, "brute_force_preimages");
    std::vector<Composition> hits;
    for_each_composition(n, [&](const Composition& w) {
        if (k_deletions(w, k) == deck) hits.push_back(w);
    });
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace compo
