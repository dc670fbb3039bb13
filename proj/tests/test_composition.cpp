// test_composition.cpp -- statistics, parsing, containment, canonical order

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "compo/composition.hpp"
#include "compo/oracle.hpp"

using compo::Composition;

namespace {

/// Exhaustive containment: try every embedding of inner into outer.
bool brute_contains(const std::vector<int>& outer, const std::vector<int>& inner,
                    std::size_t oi = 0, std::size_t ii = 0)
{
    if (ii == inner.size()) return true;
    if (inner.size() - ii > outer.size() - oi) return false;
    for (std::size_t i = oi; i < outer.size(); ++i)
        if (outer[i] >= inner[ii] && brute_contains(outer, inner, i + 1, ii + 1))
            return true;
    return false;
}

std::vector<Composition> compositions_up_to(int max_sum)
{
    std::vector<Composition> all;
    for (int n = 0; n <= max_sum; ++n)
        for (const Composition& w : compo::enumerate_compositions(n)) all.push_back(w);
    return all;
}

} // namespace

TEST_CASE("construction validates parts")
{
    REQUIRE_NOTHROW(Composition{});
    REQUIRE_NOTHROW(Composition({5, 1, 2, 2}));
    REQUIRE_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Composition({-3}), std::invalid_argument);
}

TEST_CASE("statistics on fixed words")
{
    Composition w{2, 1, 3, 1, 2};
    REQUIRE(w.sum() == 9);
    REQUIRE(w.length() == 5);
    REQUIRE(w.exceedance() == 4);
    REQUIRE(w.second_exceedance() == 1);
    REQUIRE(w.ones() == 2);

    REQUIRE(Composition{1, 2, 1, 1}.sum() == 5);
    REQUIRE(Composition{3, 1, 2, 1}.exceedance() == 3);
    REQUIRE(Composition{3, 2, 1, 2, 1, 1}.ones() == 3);
    REQUIRE(Composition{3, 2, 2}.second_exceedance() == 1);
    REQUIRE(Composition{1, 1, 1, 2, 2, 1, 2}.second_exceedance() == 0);

    Composition empty;
    REQUIRE(empty.sum() == 0);
    REQUIRE(empty.length() == 0);
    REQUIRE(empty.exceedance() == 0);
    REQUIRE(empty.second_exceedance() == 0);
    REQUIRE(empty.ones() == 0);
}

TEST_CASE("statistic identities, exhaustively to sum 8")
{
    for (const Composition& w : compositions_up_to(8)) {
        int big = 0;
        for (int p : w.parts())
            if (p >= 2) ++big;
        REQUIRE(w.sum() == static_cast<int>(w.length()) + w.exceedance());
        REQUIRE(w.exceedance() == w.second_exceedance() + big);
        REQUIRE(w.ones() + big == static_cast<int>(w.length()));
    }
}

TEST_CASE("containment on fixed words")
{
    Composition w{2, 1, 3, 1, 2};
    REQUIRE(w.contains(Composition{1, 2, 1, 1}));
    REQUIRE(w.contains(w));
    REQUIRE(w.contains(Composition{}));
    REQUIRE_FALSE(Composition{1, 2, 1, 1}.contains(Composition{2, 2}));
    REQUIRE_FALSE(Composition{1, 1}.contains(Composition{2}));
    REQUIRE_FALSE(Composition{2}.contains(Composition{1, 1}));
}

TEST_CASE("greedy containment agrees with exhaustive embedding search")
{
    std::vector<Composition> all = compositions_up_to(8);
    for (const Composition& outer : all)
        for (const Composition& inner : all)
            REQUIRE(outer.contains(inner) == brute_contains(outer.parts(), inner.parts()));
}

TEST_CASE("containment is a partial order")
{
    std::vector<Composition> all = compositions_up_to(7);
    std::size_t count = all.size();
    std::vector<std::vector<bool>> le(count, std::vector<bool>(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) le[i][j] = all[j].contains(all[i]);

    for (std::size_t i = 0; i < count; ++i) REQUIRE(le[i][i]);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (le[i][j] && le[j][i]) REQUIRE(all[i] == all[j]);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (!le[i][j]) continue;
            for (std::size_t k = 0; k < count; ++k)
                if (le[j][k]) REQUIRE(le[i][k]);
        }
}

TEST_CASE("canonical order sorts by length then lexicographically")
{
    std::vector<Composition> sample{
        {1, 2}, {5, 2}, {2}, {}, {1, 1}, {5}, {1, 1, 1}, {2, 1}};
    std::sort(sample.begin(), sample.end());
    std::vector<Composition> expected{
        {}, {2}, {5}, {1, 1}, {1, 2}, {2, 1}, {5, 2}, {1, 1, 1}};
    REQUIRE(sample == expected);
}

TEST_CASE("formatting")
{
    REQUIRE(compo::to_string(Composition{5, 1, 2, 2}) == "5,1,2,2");
    REQUIRE(compo::to_string(Composition{12}) == "12");
    REQUIRE(compo::to_string(Composition{}) == "()");
}

TEST_CASE("parsing accepts the formats it emits")
{
    REQUIRE(compo::parse_composition("5,1,2,2") == Composition{5, 1, 2, 2});
    REQUIRE(compo::parse_composition("12") == Composition{12});
    REQUIRE(compo::parse_composition("()") == Composition{});
    REQUIRE(compo::parse_composition("  ()  ") == Composition{});
    REQUIRE(compo::parse_composition(" 5 , 1 ") == Composition{5, 1});
    for (const Composition& w : compositions_up_to(7))
        REQUIRE(compo::parse_composition(compo::to_string(w)) == w);
}

TEST_CASE("parse errors carry a column")
{
    using Catch::Matchers::ContainsSubstring;
    REQUIRE_THROWS_MATCHES(compo::parse_composition("1,,2"), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("column 3")));
    REQUIRE_THROWS_MATCHES(compo::parse_composition("a"), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("column 1")));
    REQUIRE_THROWS_MATCHES(compo::parse_composition("1,0"), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring(">= 1")));
    REQUIRE_THROWS_MATCHES(compo::parse_composition("1 2"), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("','")));
    REQUIRE_THROWS_MATCHES(compo::parse_composition("1,2,"), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("digit")));
    REQUIRE_THROWS_AS(compo::parse_composition(""), std::invalid_argument);
    REQUIRE_THROWS_AS(compo::parse_composition("   "), std::invalid_argument);
    REQUIRE_THROWS_AS(compo::parse_composition("99999999999"), std::invalid_argument);
}
