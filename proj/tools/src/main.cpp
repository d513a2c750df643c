#include "commands.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <tuple>
#include <utility>

namespace {

#ifndef OLYMP_DEFAULT_DATA_DIR
#define OLYMP_DEFAULT_DATA_DIR "data"
#endif

int run(std::function<olymp::cli::RunReport()> command) {
    try {
        const auto start = std::chrono::steady_clock::now();
        olymp::cli::RunReport report = command();
        report.runtime_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        std::cout << report.to_json().dump(2) << "\n";
        std::cerr << report.summary();
        return report.exit_code();
    } catch (const olymp::cli::UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "runtime error: " << err.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification and exploration laboratory for six olympiad problems"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for all subcommands");

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for all randomized subcommands")
        ->envname("OLYMP_SEED")
        ->capture_default_str();
    std::string data_dir = OLYMP_DEFAULT_DATA_DIR;
    app.add_option("--data-dir", data_dir, "Directory with bundled layout files")
        ->capture_default_str();

    std::function<olymp::cli::RunReport()> command;

    // Let --seed / --data-dir be written after the subcommand, where users
    // expect them.
    const auto enable_fallthrough = [](CLI::App* node) {
        node->fallthrough();
        return node;
    };

    // ---- park --------------------------------------------------------------
    auto* park = enable_fallthrough(app.add_subcommand("park", "Alternating-turn walks in cubic parks"));
    park->require_subcommand(1);
    {
        auto* simulate = enable_fallthrough(park->add_subcommand("simulate", "Walk one configuration of a layout"));
        auto state = std::make_shared<std::tuple<std::string, int, int, std::string>>(
            "", 0, 0, "L");
        simulate->add_option("--layout", std::get<0>(*state), "Layout JSON file");
        simulate->add_option("--start", std::get<1>(*state), "Starting junction")
            ->capture_default_str();
        simulate->add_option("--first-trail", std::get<2>(*state), "First trail to walk")
            ->capture_default_str();
        simulate->add_option("--first-turn", std::get<3>(*state), "First turn: L or R")
            ->check(CLI::IsMember({"L", "R"}))
            ->capture_default_str();
        simulate->callback([state, &command, &data_dir] {
            command = [state, &data_dir] {
                auto [layout, start, trail, turn] = *state;
                if (layout.empty()) layout = data_dir + "/park_prism.json";
                return olymp::cli::park_simulate(layout, start, trail, turn == "R");
            };
        });

        auto* verify = enable_fallthrough(park->add_subcommand("verify", "Validate a layout and walk all configurations"));
        auto layout_file = std::make_shared<std::string>();
        verify->add_option("--layout", *layout_file, "Layout JSON file");
        verify->callback([layout_file, &command, &data_dir] {
            command = [layout_file, &data_dir] {
                const std::string path =
                    layout_file->empty() ? data_dir + "/park_prism.json" : *layout_file;
                return olymp::cli::park_verify(path);
            };
        });

        auto* search = enable_fallthrough(park->add_subcommand("search", "Search random layouts for extremal walks"));
        auto params = std::make_shared<std::pair<int, int>>(10, 200);
        search->add_option("--max-junctions", params->first, "Largest layout size (even)")
            ->capture_default_str();
        search->add_option("--samples", params->second, "Number of random layouts")
            ->capture_default_str();
        search->callback([params, &command, &seed] {
            command = [params, &seed] {
                return olymp::cli::park_search(params->first, params->second, seed);
            };
        });
    }

    // ---- tromino -------------------------------------------------------------
    auto* tromino = enable_fallthrough(app.add_subcommand("tromino", "Stone placements and line clears on an n-by-n board"));
    tromino->require_subcommand(1);
    {
        auto* construct = enable_fallthrough(tromino->add_subcommand("construct", "Build the explicit clearing schedule"));
        auto params = std::make_shared<std::pair<int, std::string>>(3, "");
        construct->add_option("--n", params->first, "Board size (multiple of 3)")
            ->capture_default_str();
        construct->add_option("--out", params->second, "Write the move sequence to this file");
        construct->callback([params, &command] {
            command = [params] {
                return olymp::cli::tromino_construct(params->first, params->second);
            };
        });

        auto* search = enable_fallthrough(tromino->add_subcommand("search", "Exhaustive shortest-sequence search"));
        auto params2 = std::make_shared<std::tuple<int, std::uint64_t, int>>(3, 10'000'000ULL, 1);
        search->add_option("--n", std::get<0>(*params2), "Board size (n*n <= 64)")
            ->capture_default_str();
        search->add_option("--max-states", std::get<1>(*params2), "State budget")
            ->capture_default_str();
        search->add_option("--threads", std::get<2>(*params2), "Worker threads")
            ->capture_default_str();
        search->callback([params2, &command] {
            command = [params2] {
                auto [n, max_states, threads] = *params2;
                return olymp::cli::tromino_search(n, max_states, threads);
            };
        });

        auto* certify = enable_fallthrough(tromino->add_subcommand("certify", "Certify a clearing sequence"));
        auto params3 = std::make_shared<std::pair<int, std::string>>(3, "");
        certify->add_option("--n", params3->first, "Board size")->capture_default_str();
        certify->add_option("--moves", params3->second,
                            "Move sequence JSON file (default: constructed schedule)");
        certify->callback([params3, &command] {
            command = [params3] {
                return olymp::cli::tromino_certify(params3->first, params3->second);
            };
        });
    }

    // ---- gcdset --------------------------------------------------------------
    auto* gcdset = enable_fallthrough(app.add_subcommand("gcdset", "Sets on which gcd is a divisor bijection"));
    gcdset->require_subcommand(1);
    {
        auto* verify = enable_fallthrough(gcdset->add_subcommand("verify", "Check the property for a set file"));
        auto set_file = std::make_shared<std::string>();
        verify->add_option("--set", *set_file, "Set JSON file")->required();
        verify->callback([set_file, &command] {
            command = [set_file] { return olymp::cli::gcdset_verify(*set_file); };
        });

        auto* construct = enable_fallthrough(gcdset->add_subcommand("construct", "Build a satisfying set from prime pairs"));
        auto params = std::make_shared<std::pair<int, std::string>>(1, "2 3");
        construct->add_option("--k", params->first, "Number of prime pairs")
            ->capture_default_str();
        construct->add_option("--primes", params->second,
                              "2k primes, alternating pair members: \"p1 q1 p2 q2 ...\"")
            ->capture_default_str();
        construct->callback([params, &command] {
            command = [params] {
                return olymp::cli::gcdset_construct(params->first, params->second);
            };
        });

        auto* search = enable_fallthrough(gcdset->add_subcommand("search", "Find achievable set sizes by backtracking"));
        auto params2 = std::make_shared<std::tuple<long long, int, std::string>>(
            200, 4, "divisor-count");
        search->add_option("--max-element", std::get<0>(*params2), "Largest allowed element")
            ->capture_default_str();
        search->add_option("--max-size", std::get<1>(*params2), "Largest size to try")
            ->capture_default_str();
        search->add_option("--prune", std::get<2>(*params2), "Pruning mode")
            ->check(CLI::IsMember({"divisor-count", "none"}))
            ->capture_default_str();
        search->callback([params2, &command] {
            command = [params2] {
                auto [max_element, max_size, prune] = *params2;
                return olymp::cli::gcdset_search(max_element, max_size,
                                                 prune == "divisor-count");
            };
        });
    }

    // ---- cyclic --------------------------------------------------------------
    auto* cyclic = enable_fallthrough(app.add_subcommand("cyclic", "Cyclic reciprocal-sum system"));
    cyclic->require_subcommand(1);
    {
        auto* solve = enable_fallthrough(cyclic->add_subcommand("solve", "Newton-solve from canonical and random starts"));
        auto params = std::make_shared<std::tuple<int, int, double>>(8, 100, 1e-12);
        solve->add_option("--n", std::get<0>(*params), "Number of odd/even pairs (>= 4)")
            ->capture_default_str();
        solve->add_option("--starts", std::get<1>(*params), "Random initial assignments")
            ->capture_default_str();
        solve->add_option("--tol", std::get<2>(*params), "Convergence tolerance")
            ->capture_default_str();
        solve->callback([params, &command, &seed] {
            command = [params, &seed] {
                auto [n, starts, tol] = *params;
                return olymp::cli::cyclic_solve(n, starts, tol, seed);
            };
        });
    }

    // ---- geom ----------------------------------------------------------------
    auto* geom = enable_fallthrough(app.add_subcommand("geom", "Plane-geometry verifications"));
    geom->require_subcommand(1);
    {
        auto* p1 = enable_fallthrough(geom->add_subcommand("p1", "Rectangle concurrency on random acute triangles"));
        auto params = std::make_shared<std::pair<int, double>>(1000, 0.0);
        p1->add_option("--trials", params->first, "Number of random configurations")
            ->capture_default_str();
        p1->add_option("--perturb", params->second,
                       "Also check that this relative height error is detected")
            ->capture_default_str();
        p1->callback([params, &command, &seed] {
            command = [params, &seed] {
                return olymp::cli::geom_p1(params->first, seed, params->second);
            };
        });

        auto* p6 = enable_fallthrough(geom->add_subcommand("p6", "Hexagon midpoint/collinearity verification"));
        auto trials = std::make_shared<int>(1000);
        p6->add_option("--trials", *trials, "Number of random hexagons")
            ->capture_default_str();
        p6->callback([trials, &command, &seed] {
            command = [trials, &seed] { return olymp::cli::geom_p6(*trials, seed); };
        });
    }

    // ---- run-all ---------------------------------------------------------------
    auto* all = enable_fallthrough(app.add_subcommand("run-all", "Run every module's workload twice and compare"));
    all->callback([&command, &seed, &data_dir] {
        command = [&seed, &data_dir] { return olymp::cli::run_all(seed, data_dir); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // any invocation problem exits 2
    }
    return run(command);
}
