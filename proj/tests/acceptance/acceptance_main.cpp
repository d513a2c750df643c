// Acceptance harness: nine end-to-end checks, one line of output each.
//
// Every check pins the tolerances and budgets it must meet and fails loudly
// when either the mathematics or the runtime budget is violated.  Run with
// no arguments for all nine, or with a single number to run one.

#include <olymp/cyclic/solver.hpp>
#include <olymp/cyclic/system.hpp>
#include <olymp/gcdsets/gcd_sets.hpp>
#include <olymp/geom/hexagon.hpp>
#include <olymp/geom/rectangles.hpp>
#include <olymp/park/layout.hpp>
#include <olymp/park/search.hpp>
#include <olymp/park/walk.hpp>
#include <olymp/rng.hpp>
#include <olymp/tromino/board.hpp>
#include <olymp/tromino/certificate.hpp>
#include <olymp/tromino/game.hpp>

#include <nlohmann/json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

#ifndef OLYMP_ACCEPT_DATA_DIR
#error "OLYMP_ACCEPT_DATA_DIR must point at the bundled layout files"
#endif
#ifndef OLYMP_ACCEPT_CLI
#error "OLYMP_ACCEPT_CLI must point at the command-line binary"
#endif

struct Result {
    bool pass = false;
    std::string detail;
};

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        throw std::runtime_error("cannot open " + path);
    }
    return nlohmann::json::parse(in);
}

std::string format_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

// ---- 1: walks on the bundled and fuzzed park layouts ----------------------

Result check_park_bounds() {
    const std::string dir = OLYMP_ACCEPT_DATA_DIR;
    const auto layout = olymp::park::layout_from_json(load_json_file(dir + "/park_extremal.json"));
    const auto validation = olymp::park::validate_layout(layout);
    if (!validation.valid) {
        return {false, "bundled layout is invalid"};
    }

    const nlohmann::json witness = load_json_file(dir + "/park_extremal_witness.json");
    const auto turn = witness.at("first_turn").get<std::string>() == "L"
                          ? olymp::park::Turn::kLeft
                          : olymp::park::Turn::kRight;
    const auto walk = olymp::park::simulate(layout, witness.at("start").get<int>(),
                                            witness.at("first_trail").get<int>(), turn);
    const auto [junction, peak] = olymp::park::max_visits(walk);
    (void)junction;

    const auto fuzz = olymp::park::fuzz_walks(/*layouts=*/1000, /*max_junctions=*/14, /*seed=*/42);

    std::ostringstream detail;
    detail << "bundled walk peaks at " << peak << " visits; fuzz: " << fuzz.layouts
           << " layouts, " << fuzz.walks << " walks, max visits " << fuzz.max_visit_count
           << " (bound 3), max traversals " << fuzz.max_trail_traversals << " (bound 2)";
    const bool pass = peak == 3 && fuzz.layouts == 1000 && fuzz.visit_bound_holds &&
                      fuzz.traversal_bound_holds;
    return {pass, detail.str()};
}

// ---- 2: constructive clearing schedules ------------------------------------

Result check_constructive() {
    std::ostringstream detail;
    bool pass = true;
    for (const int n : {3, 6, 9, 12}) {
        const auto moves = olymp::tromino::constructive_clear(n);
        const int m = n / 3;
        const int expected = 3 * m * m + n;
        bool empty = false;
        try {
            empty = olymp::tromino::replay(n, moves).empty();
        } catch (const std::exception&) {
            empty = false;
        }
        const bool ok = empty && static_cast<int>(moves.size()) == expected;
        pass = pass && ok;
        detail << "n=" << n << ": " << moves.size() << " moves (expected " << expected << ", "
               << (ok ? "clean" : "BROKEN") << ") ";
    }
    return {pass, detail.str()};
}

// ---- 3: exhaustive search on small boards ----------------------------------

Result check_search() {
    using olymp::tromino::SearchStatus;
    const auto two = olymp::tromino::exhaustive_search(2, /*max_states=*/16);
    const auto four = olymp::tromino::exhaustive_search(4, /*max_states=*/65'536);
    const auto three = olymp::tromino::exhaustive_search(3, /*max_states=*/65'536);

    const bool two_ok = two.status == SearchStatus::kProvenAbsent && two.states_explored <= 16;
    const bool four_ok =
        four.status == SearchStatus::kProvenAbsent && four.states_explored <= 65'536;
    const bool three_ok =
        three.status == SearchStatus::kWitnessFound && three.witness.size() <= 6;

    std::ostringstream detail;
    detail << "n=2: " << (two_ok ? "no sequence" : "BROKEN") << " (" << two.states_explored
           << "/16 states); n=4: " << (four_ok ? "no sequence" : "BROKEN") << " ("
           << four.states_explored << "/65536 states); n=3: witness of length "
           << three.witness.size() << " (limit 6)";
    return {two_ok && four_ok && three_ok, detail.str()};
}

// ---- 4: exact certificates for every produced sequence ---------------------

Result check_certificates() {
    namespace tr = olymp::tromino;
    bool pass = true;
    std::ostringstream detail;

    std::vector<std::pair<int, std::vector<tr::Move>>> sequences;
    for (const int n : {3, 6, 9, 12}) {
        sequences.emplace_back(n, tr::constructive_clear(n));
    }
    const auto found = tr::exhaustive_search(3);
    if (found.status != tr::SearchStatus::kWitnessFound) {
        return {false, "3x3 search failed to provide a witness"};
    }
    sequences.emplace_back(3, found.witness);

    for (const auto& [n, moves] : sequences) {
        const auto report = tr::tally_and_certify(n, moves);
        bool ok = report.identity_holds && report.invariant_zero_every_prefix &&
                  report.divisibility_certified;
        if (n == 3) {
            // The nonroot pair must live in the exact ring and kill
            // 1 + a1 + a2 with integer arithmetic, no tolerance.
            ok = ok && report.nonroot_exact && report.corner_sum_zero &&
                 report.has_nonroot() && report.nonroot_a1->order == 3 &&
                 report.nonroot_a2->order == 3;
        }
        pass = pass && ok;
        detail << "n=" << n << (ok ? " certified " : " BROKEN ");
    }
    return {pass, detail.str()};
}

// ---- 5: gcd-bijection sets -------------------------------------------------

Result check_gcd_sets() {
    namespace gs = olymp::gcdsets;
    bool pass = true;
    std::ostringstream detail;

    const std::vector<gs::Element> p{2, 5, 11, 17};
    const std::vector<gs::Element> q{3, 7, 13, 19};
    for (const int k : {1, 2, 3, 4}) {
        const gs::GcdSet set =
            gs::construct(k, {p.begin(), p.begin() + k}, {q.begin(), q.begin() + k});
        const bool ok = set.size() == (1 << k) && gs::verify_property(set).holds;
        pass = pass && ok;
        detail << "2^" << k << (ok ? " ok; " : " BROKEN; ");
    }

    const auto search = gs::search_sizes(200, 4, gs::PruneMode::kDivisorCount);
    const bool sizes_ok = search.sizes() == std::vector<int>{1, 2, 4};
    bool witnesses_ok = true;
    for (const auto& achieved : search.achievable) {
        witnesses_ok = witnesses_ok && gs::verify_property(achieved.witness).holds;
    }
    detail << "sizes up to 200: {";
    for (const int s : search.sizes()) {
        detail << " " << s;
    }
    detail << " } (expected { 1 2 4 }); ";

    // Size 3 would need members with exactly three divisors, i.e. squares of
    // primes; enumerate them all and refute every triple directly.
    std::vector<gs::Element> squares;
    for (gs::Element e = 1; e <= 200; ++e) {
        if (gs::divisor_count(e) == 3) {
            squares.push_back(e);
        }
    }
    const std::vector<gs::Element> expected_squares{4, 9, 25, 49, 121, 169};
    bool refuted = squares == expected_squares;
    int triples = 0;
    for (std::size_t a = 0; a < squares.size() && refuted; ++a) {
        for (std::size_t b = a + 1; b < squares.size() && refuted; ++b) {
            for (std::size_t c = b + 1; c < squares.size() && refuted; ++c) {
                refuted = !gs::verify_property(gs::make_set({squares[a], squares[b], squares[c]}))
                               .holds;
                ++triples;
            }
        }
    }
    detail << "size 3 refuted over " << triples << " prime-square triples";
    pass = pass && sizes_ok && witnesses_ok && refuted;
    return {pass, detail.str()};
}

// ---- 6: Newton basin of the cyclic system ----------------------------------

Result check_cyclic() {
    namespace cy = olymp::cyclic;

    double worst_canonical = 0.0;
    for (int n = 4; n <= 64; ++n) {
        worst_canonical = std::max(worst_canonical, cy::residual_sup_norm(cy::canonical(n)));
    }
    const bool canonical_ok = worst_canonical < 1e-14;

    const olymp::Rng root = olymp::Rng(42).split("acceptance-cyclic");
    int converged = 0;
    int total = 0;
    int landings_elsewhere = 0;
    double worst_deviation = 0.0;
    double worst_gap = 0.0;
    bool identities_ok = true;
    for (int n = 4; n <= 10; ++n) {
        const cy::Assignment target = cy::canonical(n);
        for (int run = 0; run < 100; ++run) {
            olymp::Rng rng = root.split(static_cast<std::uint64_t>(n)).split(
                static_cast<std::uint64_t>(run));
            std::vector<double> values(static_cast<std::size_t>(2 * n));
            for (auto& v : values) {
                v = rng.uniform(0.5, 3.0);
            }
            ++total;
            const auto result = cy::solve(n, cy::Assignment(n, std::move(values)));
            if (result.residual >= 1e-9) {
                continue;  // not converged; only converged runs are judged
            }
            ++converged;
            double deviation = 0.0;
            for (int i = 1; i <= 2 * n; ++i) {
                deviation = std::max(deviation, std::abs(result.solution.at(i) - target.at(i)));
            }
            worst_deviation = std::max(worst_deviation, deviation);
            if (deviation >= 1e-6) {
                ++landings_elsewhere;
                continue;
            }
            const auto identities = cy::check_identities(result.solution, 1e-9);
            worst_gap = std::max(worst_gap,
                                 std::max(identities.even_balance_gap, identities.square_sum_gap));
            identities_ok = identities_ok && identities.all_pass(1e-8) &&
                            identities.even_balance_gap < 1e-8 &&
                            identities.square_sum_gap < 1e-8;
        }
    }

    std::ostringstream detail;
    detail.precision(3);
    detail << std::scientific << "canonical residual max " << worst_canonical
           << " (< 1e-14); " << converged << "/" << total
           << " runs converged below 1e-9, worst deviation " << worst_deviation
           << " (< 1e-6), " << landings_elsewhere
           << " landings elsewhere (must be 0); worst balance gap " << worst_gap << " (< 1e-8)";
    const bool pass =
        canonical_ok && landings_elsewhere == 0 && identities_ok && converged > 0;
    return {pass, detail.str()};
}

// ---- 7: concurrency of the rectangle corner lines --------------------------

Result check_rectangles() {
    namespace ge = olymp::geom;
    const olymp::Rng root = olymp::Rng(42).split("acceptance-rectangles");
    const double tol = 1e-7;

    double worst_spread = 0.0;
    double worst_circle = 0.0;
    double smallest_break = std::numeric_limits<double>::infinity();
    bool pass = true;
    for (int trial = 0; trial < 1000; ++trial) {
        olymp::Rng rng = root.split(static_cast<std::uint64_t>(trial));
        const ge::RectConfig cfg = ge::sample_config(rng);
        const auto report = ge::verify_concurrency(cfg, tol);
        worst_spread = std::max(worst_spread, report.spread / report.scale);
        worst_circle = std::max(worst_circle, report.circle_deviation / report.scale);
        pass = pass && report.concurrent && report.on_circles && report.foot_matches;

        // Negative control: stretching one height by 5% must visibly break
        // the concurrency.
        const ge::RectConfig bent =
            ge::make_config_unchecked(cfg.A, cfg.B, cfg.C, cfg.ha, cfg.hb, cfg.hc * 1.05);
        const auto broken = ge::verify_concurrency(bent, tol);
        smallest_break = std::min(smallest_break, broken.spread / broken.scale);
        pass = pass && broken.spread >= 1e-3 * broken.scale;
    }

    std::ostringstream detail;
    detail.precision(3);
    detail << std::scientific << "1000 configurations: worst spread " << worst_spread
           << ", worst circle deviation " << worst_circle << " (both < 1e-7); "
           << "perturbed control breaks by >= " << smallest_break << " (>= 1e-3)";
    return {pass, detail.str()};
}

// ---- 8: hexagon orthocenter bisection ---------------------------------------

Result check_hexagons() {
    namespace ge = olymp::geom;
    const olymp::Rng root = olymp::Rng(42).split("acceptance-hexagons");
    const double tol = 1e-7;

    double worst_midpoint = 0.0;
    double worst_translate = 0.0;
    double worst_power = 0.0;
    bool pass = true;
    for (int trial = 0; trial < 1000; ++trial) {
        olymp::Rng rng = root.split(static_cast<std::uint64_t>(trial));
        const ge::Hexagon hex = ge::sample_hexagon(rng);
        const auto report = ge::verify_hexagon(hex, tol);
        worst_midpoint = std::max(worst_midpoint, report.midpoint_deviation / report.scale);
        worst_translate = std::max(worst_translate, report.translate_deviation / report.scale);
        worst_power = std::max(worst_power,
                               std::max(report.power_deviation, report.product_deviation));
        pass = pass && report.midpoint_ok && report.collinear_ok && report.translate_ok &&
               report.power_ok;
    }

    std::ostringstream detail;
    detail.precision(3);
    detail << std::scientific << "1000 hexagons: worst midpoint deviation " << worst_midpoint
           << " (< 1e-7), worst translate deviation " << worst_translate
           << " (< 1e-9), worst power deviation " << worst_power << " (< 1e-8)";
    return {pass, detail.str()};
}

// ---- 9: the command-line binary is deterministic ----------------------------

nlohmann::json strip_runtime(nlohmann::json doc) {
    if (doc.is_object()) {
        doc.erase("runtime_ms");
        for (auto& [key, value] : doc.items()) {
            (void)key;
            value = strip_runtime(value);
        }
    } else if (doc.is_array()) {
        for (auto& value : doc) {
            value = strip_runtime(value);
        }
    }
    return doc;
}

Result check_cli_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string tag = std::to_string(static_cast<long>(::getpid()));

    std::vector<nlohmann::json> reports;
    for (int round = 0; round < 2; ++round) {
        const fs::path out = dir / ("acceptance_cli_" + tag + "_" + std::to_string(round) + ".json");
        const std::string cmd = std::string("\"") + OLYMP_ACCEPT_CLI +
                                "\" run-all --seed 42 > \"" + out.string() + "\" 2>/dev/null";
        const int status = std::system(cmd.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
            return {false, "run " + std::to_string(round) + " exited with status " +
                               std::to_string(status)};
        }
        reports.push_back(strip_runtime(load_json_file(out.string())));
        fs::remove(out);
    }

    const bool identical = reports[0] == reports[1];
    std::ostringstream detail;
    detail << "two seeded runs " << (identical ? "agree" : "DIFFER")
           << " after removing timing fields (" << reports[0].at("claims").size()
           << " claims each)";
    return {identical, detail.str()};
}

// ---- harness ----------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    Result (*run)();
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "park-walk-bounds", 30.0, check_park_bounds},
        {2, "tromino-constructive", 1.0, check_constructive},
        {3, "tromino-search", 60.0, check_search},
        {4, "tromino-certificates", 5.0, check_certificates},
        {5, "gcd-set-sizes", 60.0, check_gcd_sets},
        {6, "cyclic-newton-basin", 60.0, check_cyclic},
        {7, "rectangle-concurrency", 10.0, check_rectangles},
        {8, "hexagon-midpoint", 10.0, check_hexagons},
        {9, "cli-determinism", 60.0, check_cli_determinism},
    };
    return all;
}

bool run_criterion(const Criterion& criterion) {
    const auto start = std::chrono::steady_clock::now();
    Result result;
    try {
        result = criterion.run();
    } catch (const std::exception& error) {
        result = {false, std::string("exception: ") + error.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < criterion.budget_seconds;
    const bool pass = result.pass && in_budget;

    std::cout << (pass ? "[PASS] " : "[FAIL] ") << criterion.id << " " << criterion.name << "  "
              << format_seconds(elapsed) << "/" << format_seconds(criterion.budget_seconds)
              << "  " << result.detail;
    if (!in_budget) {
        std::cout << "  [over budget]";
    }
    std::cout << "\n";
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 2) {
        std::cerr << "usage: " << argv[0] << " [criterion 1-9]\n";
        return 2;
    }
    if (argc == 2) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 9) {
            std::cerr << "usage: " << argv[0] << " [criterion 1-9]\n";
            return 2;
        }
    }

    int failures = 0;
    int executed = 0;
    for (const auto& criterion : criteria()) {
        if (selected != 0 && criterion.id != selected) {
            continue;
        }
        ++executed;
        if (!run_criterion(criterion)) {
            ++failures;
        }
    }
    std::cout << (executed - failures) << "/" << executed << " checks passed\n";
    return failures == 0 ? 0 : 1;
}
