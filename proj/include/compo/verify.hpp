// verify.hpp -- exhaustive certification sweeps, sharpness witnesses, census

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "reconstruct.hpp"

namespace compo {

/// Result of an exhaustive round-trip sweep.  A failure is a composition
/// whose own deck does not reconstruct to it uniquely.
struct SweepReport {
    int k = 0;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t total_checked = 0;
    std::vector<std::pair<Composition, ReconstructionResult>> failures;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }

    std::string to_text() const
    {
        std::string out = "sweep k=" + std::to_string(k) + " n=[" + std::to_string(n_min) +
                          "," + std::to_string(n_max) + "]\n";
        out += "checked " + std::to_string(total_checked) + " compositions\n";
        out += "failures " + std::to_string(failures.size()) + "\n";
        for (const auto& [w, result] : failures)
            out += "  " + to_string(w) + " -> " + result.describe() + "\n";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", elapsed_seconds);
        out += "elapsed " + std::string(buf) + "s\n";
        return out;
    }

    /// Machine form is byte-stable across runs, so it omits the timing.
    std::string to_machine() const
    {
        std::string out;
        out += "k=" + std::to_string(k) + "\n";
        out += "n_min=" + std::to_string(n_min) + "\n";
        out += "n_max=" + std::to_string(n_max) + "\n";
        out += "checked=" + std::to_string(total_checked) + "\n";
        out += "failures=" + std::to_string(failures.size()) + "\n";
        for (const auto& [w, result] : failures)
            out += "failure=" + to_string(w) + "\n";
        return out;
    }
};

/// Round-trips every composition of every n in [n_min, n_max] through
/// k_deletions + reconstruct and records any that do not come back as
/// Unique(itself).  jobs > 1 stripes each n's index range across threads;
/// the report is deterministic regardless of jobs.  Requires k >= 1,
/// n_min >= 3k+1 and n_max within the enumeration ceiling.
inline SweepReport sweep(int k, int n_min, int n_max, int jobs = 1)
{
    if (k < 1)
        throw std::invalid_argument("sweep: k must be >= 1");
    if (jobs < 1)
        throw std::invalid_argument("sweep: jobs must be >= 1");
    if (n_min > n_max)
        throw std::invalid_argument("sweep: empty range");
    if (n_min < 3 * k + 1)
        throw std::domain_error("sweep: certifies only n >= 3k+1 (got n_min = " +
                                std::to_string(n_min) + " for k = " + std::to_string(k) + ")");
    detail::check_enumerable(n_max, "sweep");

    auto t0 = std::chrono::steady_clock::now();
    SweepReport report;
    report.k = k;
    report.n_min = n_min;
    report.n_max = n_max;

    using Failure = std::pair<std::uint64_t, std::pair<Composition, ReconstructionResult>>;
    for (int n = n_min; n <= n_max; ++n) {
        std::uint64_t total = composition_count(n);
        report.total_checked += total;
        auto worker = [&](int stripe, std::vector<Failure>& found) {
            for (std::uint64_t index = static_cast<std::uint64_t>(stripe); index < total;
                 index += static_cast<std::uint64_t>(jobs)) {
                Composition w = nth_composition(n, index);
                ReconstructionResult result = reconstruct(k_deletions(w, k), k);
                if (!(result.is_unique() && result.value == w))
                    found.emplace_back(index, std::make_pair(w, std::move(result)));
            }
        };
        std::vector<std::vector<Failure>> found(static_cast<std::size_t>(jobs));
        if (jobs == 1) {
            worker(0, found[0]);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(jobs));
            for (int stripe = 0; stripe < jobs; ++stripe)
                pool.emplace_back(worker, stripe, std::ref(found[static_cast<std::size_t>(stripe)]));
            for (std::thread& t : pool) t.join();
        }
        std::vector<Failure> merged;
        for (auto& part : found)
            for (auto& f : part) merged.push_back(std::move(f));
        std::sort(merged.begin(), merged.end(),
                  [](const Failure& a, const Failure& b) { return a.first < b.first; });
        for (auto& f : merged) report.failures.push_back(std::move(f.second));
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

/// The classical pair certifying that the n >= 3k+1 bound cannot be
/// weakened: the alternating compositions (1,2,1,2,...) and (2,1,2,1,...)
/// of 3k share their entire k-deletion deck.
struct TightnessWitness {
    Composition first;   ///< (1,2) repeated k times
    Composition second;  ///< (2,1) repeated k times
    Deck shared_deck;    ///< the common k-deletion deck
};

inline TightnessWitness tightness_witness(int k)
{
    if (k < 1)
        throw std::invalid_argument("tightness_witness: k must be >= 1");
    detail::check_enumerable(3 * k, "tightness_witness");
    std::vector<int> a, b;
    for (int i = 0; i < k; ++i) {
        a.push_back(1);
        a.push_back(2);
        b.push_back(2);
        b.push_back(1);
    }
    Composition first(std::move(a));
    Composition second(std::move(b));
    Deck deck = k_deletions(first, k);
    if (!(k_deletions(second, k) == deck))
        throw std::logic_error("tightness_witness: the alternating pair did not collide");
    return TightnessWitness{std::move(first), std::move(second), std::move(deck)};
}

/// Number of collision classes at (k, n): sets of two or more compositions
/// of n sharing one k-deletion deck.  Zero certifies deck-uniqueness for
/// that (k, n); n >= 3k+1 should always report zero.  Requires 1 <= k <= n
/// and n within the enumeration ceiling.
inline std::uint64_t ambiguity_census(int k, int n)
{
    if (k < 1)
        throw std::invalid_argument("ambiguity_census: k must be >= 1");
    detail::check_enumerable(n, "ambiguity_census");
    if (k > n)
        throw std::domain_error("ambiguity_census: k must be <= n");
    std::unordered_map<std::string, std::uint32_t> classes;
    for_each_composition(n, [&](const Composition& w) {
        Deck deck = k_deletions(w, k);
        std::string key;
        for (const Composition& d : deck.elements()) {
            key += to_string(d);
            key += '\n';
        }
        ++classes[key];
    });
    std::uint64_t collisions = 0;
    for (const auto& [key, members] : classes)
        if (members >= 2) ++collisions;
    return collisions;
}

} // namespace compo
