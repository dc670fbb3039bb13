// compo_cli.cpp -- command line front end for the deck toolkit

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compo/compo.hpp"

namespace {

/// Shared output switch: plain text for people, key=value lines for tools.
/// Machine output is byte-stable across runs.
struct Mode {
    bool machine = false;
};

void print_deck(const compo::Deck& deck, const Mode& mode)
{
    if (mode.machine) {
        std::cout << "sum=" << deck.target_sum() << "\n";
        std::cout << "count=" << deck.size() << "\n";
        for (const compo::Composition& d : deck.elements())
            std::cout << "element=" << d << "\n";
        return;
    }
    for (const compo::Composition& d : deck.elements())
        std::cout << d << "\n";
}

int print_result(const compo::ReconstructionResult& result, const Mode& mode)
{
    using Kind = compo::ReconstructionResult::Kind;
    if (mode.machine) {
        switch (result.kind) {
            case Kind::Unique:
                std::cout << "status=unique\n" << "value=" << result.value << "\n";
                break;
            case Kind::Ambiguous:
                std::cout << "status=ambiguous\n";
                std::cout << "count=" << result.candidates.size() << "\n";
                for (const compo::Composition& c : result.candidates)
                    std::cout << "candidate=" << c << "\n";
                break;
            case Kind::NotADeck:
                std::cout << "status=not_a_deck\n" << "reason=" << result.diagnosis << "\n";
                break;
        }
    } else {
        switch (result.kind) {
            case Kind::Unique:
                std::cout << "UNIQUE " << result.value << "\n";
                break;
            case Kind::Ambiguous:
                std::cout << "AMBIGUOUS\n";
                for (const compo::Composition& c : result.candidates)
                    std::cout << c << "\n";
                break;
            case Kind::NotADeck:
                std::cout << "NOT A DECK: " << result.diagnosis << "\n";
                break;
        }
    }
    return result.is_not_a_deck() ? 1 : 0;
}

compo::Deck read_deck(const std::string& path)
{
    if (path.empty()) return compo::load_deck(std::cin);
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open deck file: " + path);
    return compo::load_deck(in);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"deletion decks of integer compositions: build, reconstruct, certify"};
    app.require_subcommand(1);

    Mode mode;
    app.add_flag("--machine", mode.machine, "emit key=value lines instead of prose");

    int exit_code = 0;

    // deck -k K W
    auto* deck_cmd = app.add_subcommand("deck", "print the k-deletion deck of a composition");
    int deck_k = 0;
    std::string deck_w;
    deck_cmd->add_option("-k,--deletions", deck_k, "number of deletions")->required();
    deck_cmd->add_option("composition", deck_w, "composition, e.g. 5,1,2,2")->required();
    deck_cmd->callback([&] {
        print_deck(compo::k_deletions(compo::parse_composition(deck_w), deck_k), mode);
    });

    // reconstruct -k K [-f FILE]
    auto* rec_cmd =
        app.add_subcommand("reconstruct", "recover the composition behind a deck");
    int rec_k = 0;
    std::string rec_file;
    rec_cmd->add_option("-k,--deletions", rec_k, "number of deletions")->required();
    rec_cmd->add_option("-f,--file", rec_file,
                        "deck file, one composition per line ('#' comments); stdin if absent");
    rec_cmd->callback([&] {
        exit_code = print_result(compo::reconstruct(read_deck(rec_file), rec_k), mode);
    });

    // verify -k K --from N --to N [--jobs J]
    auto* verify_cmd = app.add_subcommand(
        "verify", "round-trip every composition of n in [from, to] through its deck");
    int verify_k = 0, verify_from = 0, verify_to = 0, verify_jobs = 1;
    verify_cmd->add_option("-k,--deletions", verify_k, "number of deletions")->required();
    verify_cmd->add_option("--from", verify_from, "first n (must be >= 3k+1)")->required();
    verify_cmd->add_option("--to", verify_to, "last n")->required();
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->callback([&] {
        compo::SweepReport report = compo::sweep(verify_k, verify_from, verify_to, verify_jobs);
        std::cout << (mode.machine ? report.to_machine() : report.to_text());
        exit_code = report.passed() ? 0 : 1;
    });

    // witness -k K
    auto* witness_cmd = app.add_subcommand(
        "witness", "two compositions of 3k sharing one k-deletion deck");
    int witness_k = 0;
    witness_cmd->add_option("-k,--deletions", witness_k, "number of deletions")->required();
    witness_cmd->callback([&] {
        compo::TightnessWitness witness = compo::tightness_witness(witness_k);
        if (mode.machine) {
            std::cout << "k=" << witness_k << "\n";
            std::cout << "first=" << witness.first << "\n";
            std::cout << "second=" << witness.second << "\n";
            std::cout << "count=" << witness.shared_deck.size() << "\n";
            for (const compo::Composition& d : witness.shared_deck.elements())
                std::cout << "element=" << d << "\n";
        } else {
            std::cout << "first  " << witness.first << "\n";
            std::cout << "second " << witness.second << "\n";
            std::cout << "shared " << witness.shared_deck.size() << "-element deck:\n";
            for (const compo::Composition& d : witness.shared_deck.elements())
                std::cout << "  " << d << "\n";
        }
    });

    // census -k K -n N
    auto* census_cmd = app.add_subcommand(
        "census", "count deck collisions among all compositions of n");
    int census_k = 0, census_n = 0;
    census_cmd->add_option("-k,--deletions", census_k, "number of deletions")->required();
    census_cmd->add_option("-n,--sum", census_n, "the integer being composed")->required();
    census_cmd->callback([&] {
        std::uint64_t collisions = compo::ambiguity_census(census_k, census_n);
        if (mode.machine) {
            std::cout << "k=" << census_k << "\n";
            std::cout << "n=" << census_n << "\n";
            std::cout << "collisions=" << collisions << "\n";
        } else {
            std::cout << "census k=" << census_k << " n=" << census_n << "\n";
            std::cout << "collision classes " << collisions << "\n";
        }
    });

    // stats W
    auto* stats_cmd = app.add_subcommand("stats", "basic statistics of a composition");
    std::string stats_w;
    stats_cmd->add_option("composition", stats_w, "composition, e.g. 2,1,3,1,2")->required();
    stats_cmd->callback([&] {
        compo::Composition w = compo::parse_composition(stats_w);
        const char* eq = mode.machine ? "=" : " ";
        if (mode.machine) std::cout << "composition=" << w << "\n";
        else std::cout << "composition " << w << "\n";
        std::cout << "sum" << eq << w.sum() << "\n";
        std::cout << "length" << eq << w.length() << "\n";
        std::cout << "exceedance" << eq << w.exceedance() << "\n";
        std::cout << "second_exceedance" << eq << w.second_exceedance() << "\n";
        std::cout << "ones" << eq << w.ones() << "\n";
    });

    // bridge {to-permutation|to-composition} V
    auto* bridge_cmd = app.add_subcommand(
        "bridge", "translate between compositions and layered permutations");
    std::string bridge_dir, bridge_value;
    bridge_cmd
        ->add_option("direction", bridge_dir, "to-permutation or to-composition")
        ->required()
        ->check(CLI::IsMember({"to-permutation", "to-composition"}));
    bridge_cmd->add_option("value", bridge_value, "composition or permutation")->required();
    bridge_cmd->callback([&] {
        if (bridge_dir == "to-permutation") {
            compo::Permutation p =
                compo::composition_to_layered(compo::parse_composition(bridge_value));
            if (mode.machine) std::cout << "permutation=" << p << "\n";
            else std::cout << p << "\n";
        } else {
            compo::Composition w =
                compo::layered_to_composition(compo::parse_permutation(bridge_value));
            if (mode.machine) std::cout << "composition=" << w << "\n";
            else std::cout << w << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int cli_exit = app.exit(e);
        return cli_exit == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
