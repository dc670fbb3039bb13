// reconstruct.hpp -- rebuilding a composition from its k-deletion deck
//
// For n >= 3k+1 a composition of n is determined by its deck, and the
// procedures here recover it with O(n) containment probes.  Everything
// is driven by one question ("does some deck element contain this
// probe?"), split into three regimes by how the count of 1's in the
// hidden composition compares with k.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deck.hpp"
#include "oracle.hpp"

namespace compo {

/// How the number of parts equal to 1 in the hidden composition compares
/// with the number of deletions.
enum class OnesRegime { FewerThanK, ExactlyK, MoreThanK };

inline const char* to_string(OnesRegime r)
{
    switch (r) {
        case OnesRegime::FewerThanK: return "FewerThanK";
        case OnesRegime::ExactlyK:   return "ExactlyK";
        case OnesRegime::MoreThanK:  return "MoreThanK";
    }
    return "?";
}

/// Thrown by the per-regime procedures when the deck contradicts the
/// structure the regime guarantees.  reconstruct() converts it into a
/// NotADeck result; it never escapes the public entry point.
struct NotADeckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decides the regime of the hidden composition from the deck alone.
/// Requires n = target_sum + k >= 3k+1; throws std::domain_error below
/// that bound (the split is not sound there).
///
/// The tests: w has >= k ones iff 1^(n-k) is an element or the element
/// lengths spread by exactly k; given that, w has exactly k ones iff some
/// element has no 1's at all.
inline OnesRegime classify_ones(const Deck& deck, int k)
{
    if (k < 0)
        throw std::invalid_argument("classify_ones: k must be >= 0");
    int n = deck.target_sum() + k;
    if (n < 3 * k + 1)
        throw std::domain_error("classify_ones: requires n >= 3k+1 (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
    bool all_ones_element =
        deck.has_element(Composition(std::vector<int>(static_cast<std::size_t>(n - k), 1)));
    bool spread_is_k = deck.max_length() - deck.min_length() == static_cast<std::size_t>(k);
    if (!all_ones_element && !spread_is_k) return OnesRegime::FewerThanK;
    for (const Composition& d : deck.elements())
        if (d.ones() == 0) return OnesRegime::ExactlyK;
    return OnesRegime::MoreThanK;
}

namespace detail {

/// 1^(i-1) s 1^(m-i): the word of m ones with the i-th (1-based) raised
/// to s.
inline Composition ones_padded_probe(std::size_t m, std::size_t i, int s)
{
    std::vector<int> parts(m, 1);
    parts.at(i - 1) = s;
    return Composition(std::move(parts));
}

/// Largest s in [1, ceiling] whose probe the deck still contains, or 0 if
/// even s = 1 fails.  Containment of make(s) is monotone decreasing in s,
/// so the scan stops at the first failure.
template <class MakeProbe>
int max_probe_value(const Deck& deck, int ceiling, MakeProbe&& make)
{
    int best = 0;
    for (int s = 1; s <= ceiling; ++s) {
        if (!deck.contains_probe(make(s))) break;
        best = s;
    }
    return best;
}

/// The subsequence of parts >= 2, as a composition (possibly empty).
inline Composition big_parts(const Composition& w)
{
    std::vector<int> big;
    for (int p : w.parts())
        if (p >= 2) big.push_back(p);
    return Composition(std::move(big));
}

/// Shared finish for the two probe-and-sum regimes: the probed values are
/// entrywise floors min{true value, cap} of the true values, so either the
/// sums already match, or exactly one entry sits at the cap and absorbs
/// the missing amount.  For n >= 3k+1 two entries >= cap cannot occur when
/// something is missing; any other shape means the input was not a deck.
inline void absorb_remainder(std::vector<int>& values, const std::vector<bool>& at_cap,
                             int missing)
{
    if (missing == 0) return;
    if (missing < 0)
        throw NotADeckError("probed entries exceed the target sum");
    std::size_t saturated = values.size();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!at_cap[i]) continue;
        if (saturated != values.size())
            throw NotADeckError("two probed entries saturate; the remainder has no unique home");
        saturated = i;
    }
    if (saturated == values.size())
        throw NotADeckError("probed entries fall short of the target sum with none saturated");
    values[saturated] += missing;
}

} // namespace detail

/// Intermediates of the FewerThanK procedure, for inspection and tests.
struct FewOnesTrace {
    std::size_t length = 0;        ///< |w|, read off the longest elements
    int total_exceedance = 0;      ///< ex(w) = k + ex(longest element)
    int probe_cap = 0;             ///< t + 1 with t = ex(w) - k; probes saturate here
    std::vector<int> entry_floor;  ///< a(i) = min{w(i), t+1}
};

/// Intermediates of the ExactlyK procedure.
struct ExactlyKTrace {
    std::size_t length = 0;     ///< |w| = k + shortest element length
    Composition big_parts;      ///< the 1-free deck element, in order
    std::vector<bool> is_big;   ///< per position: does a single-2 probe fit here?
};

/// Intermediates of the MoreThanK procedure.
struct ManyOnesTrace {
    Composition big_parts;          ///< >=2 parts shared by the fewest-1's elements
    std::vector<bool> gap_is_zero;  ///< per gap between big parts: certified empty?
    std::vector<int> gap_floor;     ///< x(i) = min{gap size, probe cap}
    int probe_cap = 0;              ///< n - k - ||b_i||, equal for every probed gap
};

/// Regime FewerThanK: the longest deck elements have length |w|, each
/// entry is pinned by raising one position of the all-ones word until the
/// deck rejects it, and the probe values floor w entrywise at t+1.
inline Composition reconstruct_few_ones(const Deck& deck, int k, FewOnesTrace* trace = nullptr)
{
    int n = deck.target_sum() + k;
    std::size_t m = deck.max_length();
    int ex_w = n - static_cast<int>(m);     // k + exceedance of a longest element
    int cap = ex_w - k + 1;                 // t + 1
    if (cap < 1)
        throw NotADeckError("longest element leaves no room for the exceedance");
    std::vector<int> floor(m, 0);
    std::vector<bool> at_cap(m, false);
    for (std::size_t i = 1; i <= m; ++i) {
        floor[i - 1] = detail::max_probe_value(
            deck, n - k, [&](int s) { return detail::ones_padded_probe(m, i, s); });
        if (floor[i - 1] == 0)
            throw NotADeckError("position " + std::to_string(i) + " admits no entry at all");
        if (floor[i - 1] > cap)
            throw NotADeckError("position " + std::to_string(i) + " probes above the cap");
        at_cap[i - 1] = floor[i - 1] == cap;
    }
    if (trace) *trace = FewOnesTrace{m, ex_w, cap, floor};
    int probed = 0;
    for (int v : floor) probed += v;
    detail::absorb_remainder(floor, at_cap, n - probed);
    return Composition(std::move(floor));
}

/// Regime ExactlyK: the shortest elements are w with its k ones removed,
/// one element is exactly the 1-free core, and a single-2 probe per
/// position flags where the core entries sit.
inline Composition reconstruct_exactly_k(const Deck& deck, int k, ExactlyKTrace* trace = nullptr)
{
    std::size_t m = deck.min_length() + static_cast<std::size_t>(k);
    const Composition* core = nullptr;
    for (const Composition& d : deck.elements()) {
        if (d.ones() == 0) {
            core = &d;
            break;
        }
    }
    if (core == nullptr)
        throw NotADeckError("no deck element is free of 1's");
    std::vector<bool> is_big(m, false);
    std::size_t flagged = 0;
    for (std::size_t i = 1; i <= m; ++i) {
        is_big[i - 1] = deck.contains_probe(detail::ones_padded_probe(m, i, 2));
        if (is_big[i - 1]) ++flagged;
    }
    if (trace) *trace = ExactlyKTrace{m, *core, is_big};
    if (flagged != core->length())
        throw NotADeckError("flagged positions disagree with the 1-free element");
    if (m - flagged != static_cast<std::size_t>(k))
        throw NotADeckError("the count of 1-positions is not k");
    std::vector<int> parts(m, 1);
    std::size_t next_big = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (is_big[i]) parts[i] = (*core)[next_big++];
    return Composition(std::move(parts));
}

/// Regime MoreThanK: the fewest-1's elements agree on the >=2 parts v of
/// w; packed probes certify which of the gaps between them hold no 1's,
/// and padding probes size the rest, floored at the shared cap.
inline Composition reconstruct_many_ones(const Deck& deck, int k, ManyOnesTrace* trace = nullptr)
{
    int n = deck.target_sum() + k;
    int fewest = deck.elements().front().ones();
    for (const Composition& d : deck.elements())
        if (d.ones() < fewest) fewest = d.ones();
    Composition big;
    bool have_big = false;
    for (const Composition& d : deck.elements()) {
        if (d.ones() != fewest) continue;
        Composition b = detail::big_parts(d);
        if (!have_big) {
            big = std::move(b);
            have_big = true;
        } else if (b != big) {
            throw NotADeckError("fewest-1's elements disagree on the parts >= 2");
        }
    }
    std::size_t l = big.length();

    // Gap i of 1^(x1) v1 1^(x2) ... vl 1^(xl+1) is empty iff the packed
    // probe 2^(i-1) 1 2^(l+1-i) does not fit.
    std::vector<bool> gap_is_zero(l + 1, false);
    int holes = 0;
    for (std::size_t i = 1; i <= l + 1; ++i) {
        std::vector<int> probe(l + 1, 2);
        probe[i - 1] = 1;
        gap_is_zero[i - 1] = !deck.contains_probe(Composition(std::move(probe)));
        if (gap_is_zero[i - 1]) ++holes;
    }

    // For a nonempty gap i, pad 1^s into the i-th hole of the skeleton of
    // 2's and 1's matching the zero pattern; the largest s that fits is
    // min{gap size, cap} with the cap shared by every gap.
    int cap = n - k - 2 * static_cast<int>(l) + holes;
    std::vector<int> gap(l + 1, 0);
    std::vector<bool> at_cap(l + 1, false);
    for (std::size_t i = 1; i <= l + 1; ++i) {
        if (gap_is_zero[i - 1]) continue;
        if (cap < 1)
            throw NotADeckError("no room below the deck sum for any gap probe");
        std::vector<int> skeleton;
        skeleton.reserve(l);
        for (std::size_t j = 1; j <= l; ++j) {
            bool zero = j <= i - 1 ? gap_is_zero[j - 1] : gap_is_zero[j];
            skeleton.push_back(zero ? 1 : 2);
        }
        gap[i - 1] = detail::max_probe_value(deck, n - k, [&](int s) {
            std::vector<int> parts;
            parts.reserve(l + static_cast<std::size_t>(s));
            parts.insert(parts.end(), skeleton.begin(),
                         skeleton.begin() + static_cast<std::ptrdiff_t>(i - 1));
            parts.insert(parts.end(), static_cast<std::size_t>(s), 1);
            parts.insert(parts.end(), skeleton.begin() + static_cast<std::ptrdiff_t>(i - 1),
                         skeleton.end());
            return Composition(std::move(parts));
        });
        if (gap[i - 1] == 0)
            throw NotADeckError("gap " + std::to_string(i) + " rejects even a single 1");
        if (gap[i - 1] > cap)
            throw NotADeckError("gap " + std::to_string(i) + " probes above the cap");
        at_cap[i - 1] = gap[i - 1] == cap;
    }
    if (trace) *trace = ManyOnesTrace{big, gap_is_zero, gap, cap};
    int probed = big.sum();
    for (int v : gap) probed += v;
    detail::absorb_remainder(gap, at_cap, n - probed);

    std::vector<int> parts;
    parts.reserve(big.length() + static_cast<std::size_t>(n - big.sum()));
    for (std::size_t i = 0; i <= l; ++i) {
        parts.insert(parts.end(), static_cast<std::size_t>(gap[i]), 1);
        if (i < l) parts.push_back(big[i]);
    }
    return Composition(std::move(parts));
}

/// Outcome of reconstruct(): exactly one of the three shapes.
struct ReconstructionResult {
    enum class Kind { Unique, Ambiguous, NotADeck };

    Kind kind = Kind::NotADeck;
    Composition value;                                      ///< Unique only
    std::vector<Composition> candidates;                    ///< Ambiguous only, canonical order
    std::string diagnosis;                                  ///< NotADeck only

    static ReconstructionResult unique(Composition w)
    {
        ReconstructionResult r;
        r.kind = Kind::Unique;
        r.value = std::move(w);
        return r;
    }

    static ReconstructionResult ambiguous(std::vector<Composition> all)
    {
        ReconstructionResult r;
        r.kind = Kind::Ambiguous;
        r.candidates = std::move(all);
        return r;
    }

    static ReconstructionResult not_a_deck(std::string why)
    {
        ReconstructionResult r;
        r.kind = Kind::NotADeck;
        r.diagnosis = std::move(why);
        return r;
    }

    bool is_unique() const noexcept { return kind == Kind::Unique; }
    bool is_ambiguous() const noexcept { return kind == Kind::Ambiguous; }
    bool is_not_a_deck() const noexcept { return kind == Kind::NotADeck; }

    /// One-line human form: "UNIQUE 5,1,2,2", "AMBIGUOUS (3 candidates)",
    /// "NOT A DECK: ...".
    std::string describe() const
    {
        switch (kind) {
            case Kind::Unique:
                return "UNIQUE " + to_string(value);
            case Kind::Ambiguous:
                return "AMBIGUOUS (" + std::to_string(candidates.size()) + " candidates)";
            case Kind::NotADeck:
                return "NOT A DECK: " + diagnosis;
        }
        return {};
    }

    bool operator==(const ReconstructionResult& other) const = default;
};

/// Full pipeline.  For n = target_sum + k >= 3k+1: classify the regime,
/// run its procedure, then require the candidate to regenerate the deck
/// exactly (so corrupted inputs surface as NotADeck rather than as a wrong
/// answer).  Below the bound the answer may not be unique and the
/// brute-force oracle decides: Unique, Ambiguous, or NotADeck by preimage
/// count.  Throws std::invalid_argument only for k < 0, and
/// std::domain_error only when a sub-threshold deck exceeds the
/// enumeration ceiling.
inline ReconstructionResult reconstruct(const Deck& deck, int k)
{
    if (k < 0)
        throw std::invalid_argument("reconstruct: k must be >= 0");
    int n = deck.target_sum() + k;
    if (n >= 3 * k + 1) {
        Composition w;
        try {
            switch (classify_ones(deck, k)) {
                case OnesRegime::FewerThanK: w = reconstruct_few_ones(deck, k); break;
                case OnesRegime::ExactlyK:   w = reconstruct_exactly_k(deck, k); break;
                case OnesRegime::MoreThanK:  w = reconstruct_many_ones(deck, k); break;
            }
        } catch (const NotADeckError& e) {
            return ReconstructionResult::not_a_deck(e.what());
        }
        if (k_deletions(w, k) == deck)
            return ReconstructionResult::unique(std::move(w));
        return ReconstructionResult::not_a_deck("candidate " + to_string(w) +
                                                " does not regenerate the deck");
    }
    std::vector<Composition> preimages = brute_force_preimages(deck, k);
    if (preimages.empty())
        return ReconstructionResult::not_a_deck("no composition of " + std::to_string(n) +
                                                " has this " + std::to_string(k) +
                                                "-deletion deck");
    if (preimages.size() == 1)
        return ReconstructionResult::unique(std::move(preimages.front()));
    return ReconstructionResult::ambiguous(std::move(preimages));
}

} // namespace compo
