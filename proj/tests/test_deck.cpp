// test_deck.cpp -- deletion moves, deck construction, deck input

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "compo/deck.hpp"
#include "compo/oracle.hpp"

using compo::Composition;
using compo::Deck;

namespace {

Deck deck_of(std::initializer_list<Composition> elements)
{
    return Deck::from_elements(std::vector<Composition>(elements));
}

const Deck example_deck = deck_of({{5, 2},
                                   {3, 2, 2},
                                   {4, 1, 2},
                                   {4, 2, 1},
                                   {5, 1, 1},
                                   {2, 1, 2, 2},
                                   {3, 1, 1, 2},
                                   {3, 1, 2, 1},
                                   {4, 1, 1, 1}});

} // namespace

TEST_CASE("single deletions of fixed words")
{
    REQUIRE(compo::one_deletions(Composition{1, 2}) ==
            std::vector<Composition>{{2}, {1, 1}});
    REQUIRE(compo::one_deletions(Composition{2, 2}) ==
            std::vector<Composition>{{1, 2}, {2, 1}});
    REQUIRE(compo::one_deletions(Composition{1}) == std::vector<Composition>{{}});
    REQUIRE(compo::one_deletions(Composition{1, 1}) == std::vector<Composition>{{1}});
    REQUIRE(compo::one_deletions(Composition{5, 1, 2, 2}) ==
            std::vector<Composition>{{5, 2, 2}, {4, 1, 2, 2}, {5, 1, 1, 2}, {5, 1, 2, 1}});
    REQUIRE_THROWS_AS(compo::one_deletions(Composition{}), std::domain_error);
}

TEST_CASE("k-deletion decks of the worked examples")
{
    REQUIRE(compo::k_deletions(Composition{5, 1, 2, 2}, 3) == example_deck);

    Deck exactly_k = compo::k_deletions(Composition{3, 2, 1, 2, 1, 1}, 3);
    REQUIRE(exactly_k.size() == 15);
    REQUIRE(exactly_k ==
            deck_of({{3, 2, 2},
                     {2, 2, 1, 2}, {2, 2, 2, 1}, {3, 1, 1, 2}, {3, 1, 2, 1}, {3, 2, 1, 1},
                     {1, 2, 1, 2, 1}, {1, 2, 2, 1, 1}, {2, 1, 1, 2, 1}, {2, 1, 2, 1, 1},
                     {2, 2, 1, 1, 1}, {3, 1, 1, 1, 1},
                     {1, 1, 1, 2, 1, 1}, {1, 2, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1}}));

    Deck many_ones = compo::k_deletions(Composition{1, 1, 1, 2, 2, 1, 2}, 3);
    REQUIRE(many_ones.size() == 12);
    REQUIRE(many_ones ==
            deck_of({{1, 2, 2, 2}, {2, 2, 1, 2},
                     {1, 1, 1, 2, 2}, {1, 1, 2, 1, 2}, {1, 1, 2, 2, 1}, {1, 2, 1, 1, 2},
                     {1, 2, 2, 1, 1},
                     {1, 1, 1, 1, 1, 2}, {1, 1, 1, 1, 2, 1}, {1, 1, 1, 2, 1, 1},
                     {1, 1, 2, 1, 1, 1},
                     {1, 1, 1, 1, 1, 1, 1}}));
}

TEST_CASE("k-deletion edge cases")
{
    Composition w{2, 1, 3};
    REQUIRE(compo::k_deletions(w, 0) == deck_of({w}));
    REQUIRE(compo::k_deletions(Composition{3}, 3) == deck_of({Composition{}}));
    REQUIRE(compo::k_deletions(Composition{3}, 3).target_sum() == 0);
    REQUIRE(compo::k_deletions(Composition{2, 1, 3, 1, 2}, 4)
                .has_element(Composition{1, 2, 1, 1}));
    REQUIRE_THROWS_AS(compo::k_deletions(w, -1), std::domain_error);
    REQUIRE_THROWS_AS(compo::k_deletions(w, 7), std::domain_error);
}

TEST_CASE("deck elements all carry the reduced sum")
{
    for (int n = 0; n <= 9; ++n)
        compo::for_each_composition(n, [&](const Composition& w) {
            for (int k = 0; k <= n; ++k) {
                Deck deck = compo::k_deletions(w, k);
                REQUIRE(deck.target_sum() == n - k);
                for (const Composition& d : deck.elements()) REQUIRE(d.sum() == n - k);
            }
        });
}

TEST_CASE("padded probes are containment-monotone in the raised entry")
{
    for (int n = 4; n <= 9; ++n)
        compo::for_each_composition(n, [&](const Composition& w) {
            for (int k = 1; k <= 2; ++k) {
                Deck deck = compo::k_deletions(w, k);
                std::size_t m = deck.max_length();
                for (std::size_t i = 1; i <= m; ++i) {
                    bool previous = true;
                    for (int s = 1; s <= n - k; ++s) {
                        std::vector<int> parts(m, 1);
                        parts[i - 1] = s;
                        bool now = deck.contains_probe(Composition(std::move(parts)));
                        if (now) REQUIRE(previous);
                        previous = now;
                    }
                }
            }
        });
}

TEST_CASE("deck construction validates and canonicalizes")
{
    Deck deck = deck_of({{2, 1}, {1, 2}, {3}, {1, 2}});
    REQUIRE(deck.size() == 3);
    REQUIRE(deck.elements() == std::vector<Composition>{{3}, {1, 2}, {2, 1}});
    REQUIRE(deck.target_sum() == 3);
    REQUIRE(deck.min_length() == 1);
    REQUIRE(deck.max_length() == 2);

    REQUIRE_THROWS_AS(Deck::from_elements({}), std::invalid_argument);
    REQUIRE_THROWS_AS(deck_of({{1, 2}, {1}}), std::domain_error);
}

TEST_CASE("membership and probe containment")
{
    REQUIRE(example_deck.has_element(Composition{5, 2}));
    REQUIRE_FALSE(example_deck.has_element(Composition{2, 5}));
    REQUIRE(example_deck.contains_probe(Composition{4, 1, 1, 1}));
    REQUIRE_FALSE(example_deck.contains_probe(Composition{5, 1, 1, 1}));
    REQUIRE(example_deck.contains_probe(Composition{1, 1, 1, 1}));
    REQUIRE_FALSE(example_deck.contains_probe(Composition{1, 2, 1, 1}));
    REQUIRE(example_deck.contains_probe(Composition{}));
}

TEST_CASE("deck input accepts comments, blanks, duplicates")
{
    std::istringstream in(
        "# the 1-deletion deck of 1,2\n"
        "\n"
        "2\n"
        "  1,1  \n"
        "2\n");
    Deck deck = compo::load_deck(in);
    REQUIRE(deck == deck_of({{2}, {1, 1}}));
}

TEST_CASE("deck input reads the empty composition")
{
    std::istringstream in("()\n");
    REQUIRE(compo::load_deck(in) == deck_of({Composition{}}));
}

TEST_CASE("deck input diagnostics carry line numbers")
{
    using Catch::Matchers::ContainsSubstring;
    std::istringstream bad("2,1\n1,x\n");
    REQUIRE_THROWS_MATCHES(compo::load_deck(bad), std::invalid_argument,
                           Catch::Matchers::MessageMatches(ContainsSubstring("line 2")));

    std::istringstream mixed("2,1\n1,1,1,1\n");
    REQUIRE_THROWS_AS(compo::load_deck(mixed), std::domain_error);

    std::istringstream empty("# nothing here\n\n");
    REQUIRE_THROWS_AS(compo::load_deck(empty), std::invalid_argument);
}
