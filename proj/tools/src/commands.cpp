#include "commands.hpp"

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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

namespace olymp::cli {
namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& err) {
        throw UsageError("cannot parse " + path + ": " + err.what());
    }
    return doc;
}

void write_json(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write file: " + path);
    out << doc.dump(2) << "\n";
}

park::ParkLayout load_layout(const std::string& path) {
    try {
        return park::layout_from_json(load_json(path));
    } catch (const std::invalid_argument& err) {
        throw UsageError(path + ": " + err.what());
    }
}

const char* turn_name(park::Turn turn) {
    return turn == park::Turn::kLeft ? "L" : "R";
}

struct WalkBounds {
    int max_visits = 0;
    int max_traversals = 0;
    bool returned_to_start = false;
};

WalkBounds walk_bounds(const park::Walk& walk) {
    WalkBounds bounds;
    bounds.max_visits = *std::max_element(walk.visit_counts.begin(), walk.visit_counts.end());
    for (const auto& [trail, count] : park::trail_traversal_counts(walk)) {
        (void)trail;
        bounds.max_traversals = std::max(bounds.max_traversals, count);
    }
    bounds.returned_to_start = !walk.steps.empty() && walk.steps.back().to == walk.start;
    return bounds;
}

const char* status_name(tromino::SearchStatus status) {
    switch (status) {
        case tromino::SearchStatus::kWitnessFound: return "witness_found";
        case tromino::SearchStatus::kProvenAbsent: return "proven_absent";
        case tromino::SearchStatus::kInconclusive: return "inconclusive";
    }
    return "unknown";
}

nlohmann::json certificate_to_json(const tromino::CertificateReport& cert) {
    nlohmann::json doc{{"n", cert.n},
                       {"sequence_length", cert.sequence_length},
                       {"placement_count", cert.placement_count},
                       {"clear_count", cert.clear_count},
                       {"identity_holds", cert.identity_holds},
                       {"corner_sum_zero", cert.corner_sum_zero},
                       {"divisibility_certified", cert.divisibility_certified},
                       {"invariant_zero_every_prefix", cert.invariant_zero_every_prefix}};
    if (cert.has_nonroot()) {
        doc["nonroot"] = {{"a1", {{"order", cert.nonroot_a1->order},
                                  {"exponent", cert.nonroot_a1->exponent}}},
                          {"a2", {{"order", cert.nonroot_a2->order},
                                  {"exponent", cert.nonroot_a2->exponent}}},
                          {"exact", cert.nonroot_exact},
                          {"value_re", cert.nonroot_value.real()},
                          {"value_im", cert.nonroot_value.imag()}};
    }
    return doc;
}

}  // namespace

// ---- park ------------------------------------------------------------------

RunReport park_simulate(const std::string& layout_file, int start, int first_trail,
                        bool first_turn_right) {
    RunReport report;
    report.command = "park simulate";

    const park::ParkLayout layout = load_layout(layout_file);
    const auto validation = park::validate_layout(layout);
    report.add("layout_valid", validation.valid, {{"violations", validation.violations}});
    if (!validation.valid) return report;

    if (start < 0 || start >= layout.junction_count || !layout.incident(first_trail, start)) {
        throw UsageError("start junction and first trail must be incident");
    }
    const park::Turn turn = first_turn_right ? park::Turn::kRight : park::Turn::kLeft;
    const park::Walk walk = park::simulate(layout, start, first_trail, turn);
    const WalkBounds bounds = walk_bounds(walk);

    report.add("walk_returned_to_start", bounds.returned_to_start);
    report.add("visits_within_bound", bounds.max_visits <= 3,
               {{"max_visits", bounds.max_visits}, {"bound", 3}});
    report.add("trails_within_bound", bounds.max_traversals <= 2,
               {{"max_traversals", bounds.max_traversals}, {"bound", 2}});

    const auto [busiest, count] = park::max_visits(walk);
    report.output = {{"walk", park::walk_to_json(walk)},
                     {"steps", walk.steps.size()},
                     {"busiest_junction", busiest},
                     {"busiest_count", count},
                     {"first_turn", turn_name(turn)}};
    return report;
}

RunReport park_verify(const std::string& layout_file) {
    RunReport report;
    report.command = "park verify";

    const park::ParkLayout layout = load_layout(layout_file);
    const auto validation = park::validate_layout(layout);
    report.add("layout_valid", validation.valid,
               {{"violations", validation.violations},
                {"faces", validation.face_count},
                {"components", validation.component_count},
                {"euler_genus", validation.euler_genus}});
    if (!validation.valid) return report;

    int walks = 0;
    int max_visits_seen = 0;
    int max_traversals_seen = 0;
    bool all_returned = true;
    for (int start = 0; start < layout.junction_count; ++start) {
        for (int slot = 0; slot < 3; ++slot) {
            const int trail = layout.rotation[static_cast<std::size_t>(start)]
                                             [static_cast<std::size_t>(slot)];
            for (park::Turn turn : {park::Turn::kLeft, park::Turn::kRight}) {
                const park::Walk walk = park::simulate(layout, start, trail, turn);
                const WalkBounds bounds = walk_bounds(walk);
                ++walks;
                max_visits_seen = std::max(max_visits_seen, bounds.max_visits);
                max_traversals_seen = std::max(max_traversals_seen, bounds.max_traversals);
                all_returned = all_returned && bounds.returned_to_start;
            }
        }
    }
    report.add("all_walks_return_to_start", all_returned, {{"walks", walks}});
    report.add("visits_within_bound", max_visits_seen <= 3,
               {{"max_visits", max_visits_seen}, {"bound", 3}});
    report.add("trails_within_bound", max_traversals_seen <= 2,
               {{"max_traversals", max_traversals_seen}, {"bound", 2}});

    report.output = {{"junctions", layout.junction_count},
                     {"trails", layout.trail_count()},
                     {"faces", validation.face_count},
                     {"components", validation.component_count},
                     {"euler_genus", validation.euler_genus},
                     {"walks", walks},
                     {"max_visits", max_visits_seen},
                     {"max_traversals", max_traversals_seen}};
    return report;
}

RunReport park_search(int max_junctions, int samples, std::uint64_t seed) {
    if (max_junctions < 4) throw UsageError("--max-junctions must be at least 4");
    if (samples < 1) throw UsageError("--samples must be positive");

    RunReport report;
    report.command = "park search";
    report.seed = seed;
    report.seeded = true;

    const park::ExtremalResult best = park::search_extremal(max_junctions, samples, seed);
    const park::FuzzReport fuzz = park::fuzz_walks(samples, max_junctions, seed);

    report.add("visit_bound_holds", best.best_count <= 3 && fuzz.visit_bound_holds,
               {{"extremal_count", best.best_count},
                {"fuzz_max", fuzz.max_visit_count},
                {"bound", 3}});
    report.add("traversal_bound_holds", fuzz.traversal_bound_holds,
               {{"fuzz_max", fuzz.max_trail_traversals}, {"bound", 2}});

    // Re-walking the reported configuration must reproduce the count.
    const park::Walk replay =
        park::simulate(best.layout, best.start, best.first_trail, best.first_turn);
    const auto [junction, count] = park::max_visits(replay);
    report.add("extremal_walk_reproducible",
               junction == best.best_junction && count == best.best_count);

    report.output = {{"layout", park::layout_to_json(best.layout)},
                     {"start", best.start},
                     {"first_trail", best.first_trail},
                     {"first_turn", turn_name(best.first_turn)},
                     {"best_junction", best.best_junction},
                     {"best_count", best.best_count},
                     {"walk", park::walk_to_json(best.walk)},
                     {"layouts_examined", best.layouts_examined},
                     {"walks_examined", best.walks_examined}};
    return report;
}

// ---- tromino -----------------------------------------------------------------

RunReport tromino_construct(int n, const std::string& out_file) {
    if (n < 3 || n % 3 != 0) throw UsageError("--n must be a positive multiple of 3");

    RunReport report;
    report.command = "tromino construct";

    const std::vector<tromino::Move> moves = tromino::constructive_clear(n);
    const tromino::Board final_board = tromino::replay(n, moves);

    const std::size_t expected = static_cast<std::size_t>(3 * (n / 3) * (n / 3) + n);
    report.add("length_matches_formula", moves.size() == expected,
               {{"length", moves.size()}, {"expected", expected}});
    report.add("replays_to_empty_board", final_board.empty());

    report.output = {{"n", n}, {"moves", tromino::moves_to_json(moves)},
                     {"length", moves.size()}};
    if (!out_file.empty()) {
        write_json(out_file, tromino::moves_to_json(moves));
        report.output["witness_file"] = out_file;
    }
    return report;
}

RunReport tromino_search(int n, std::uint64_t max_states, int threads) {
    if (n < 2 || n * n > 64) throw UsageError("--n must satisfy 2 <= n and n*n <= 64");
    if (threads < 1) throw UsageError("--threads must be positive");

    RunReport report;
    report.command = "tromino search";

    const tromino::SearchOutcome outcome = tromino::exhaustive_search(n, max_states, threads);
    report.add("search_conclusive", outcome.status != tromino::SearchStatus::kInconclusive,
               {{"status", status_name(outcome.status)},
                {"states_explored", outcome.states_explored}});

    report.output = {{"n", n},
                     {"status", status_name(outcome.status)},
                     {"states_explored", outcome.states_explored}};
    if (outcome.status == tromino::SearchStatus::kWitnessFound) {
        report.add("witness_replays_to_empty", tromino::replay(n, outcome.witness).empty(),
                   {{"length", outcome.witness.size()}});
        report.output["witness"] = tromino::moves_to_json(outcome.witness);
        report.output["witness_length"] = outcome.witness.size();
    }
    return report;
}

RunReport tromino_certify(int n, const std::string& moves_file) {
    if (n < 2) throw UsageError("--n must be at least 2");

    RunReport report;
    report.command = "tromino certify";

    std::vector<tromino::Move> moves;
    if (moves_file.empty()) {
        if (n % 3 != 0) {
            throw UsageError("without --moves, --n must be a multiple of 3 (constructed schedule)");
        }
        moves = tromino::constructive_clear(n);
    } else {
        try {
            moves = tromino::moves_from_json(load_json(moves_file));
        } catch (const std::invalid_argument& err) {
            throw UsageError(moves_file + ": " + err.what());
        }
    }

    tromino::CertificateReport cert;
    try {
        cert = tromino::tally_and_certify(n, moves);
    } catch (const std::invalid_argument& err) {
        report.add("sequence_replays_to_empty", false, {{"error", err.what()}});
        return report;
    }
    report.add("sequence_replays_to_empty", true, {{"length", cert.sequence_length}});
    report.add("identity_holds", cert.identity_holds);
    report.add("nonroot_found", cert.has_nonroot());
    report.add("corner_sum_zero", cert.corner_sum_zero);
    report.add("divisibility_certified", cert.divisibility_certified);
    report.add("invariant_zero_every_prefix", cert.invariant_zero_every_prefix);

    report.output = certificate_to_json(cert);
    return report;
}

// ---- gcdset ------------------------------------------------------------------

namespace {

nlohmann::json violations_to_json(const std::vector<gcdsets::Violation>& violations,
                                  std::size_t limit = 16) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < violations.size() && i < limit; ++i) {
        arr.push_back({{"s", violations[i].s}, {"d", violations[i].d},
                       {"count", violations[i].count}});
    }
    return arr;
}

nlohmann::json structure_to_json(const gcdsets::StructuralReport& s) {
    return {{"divisor_count_matches", s.divisor_count_matches},
            {"all_squarefree", s.all_squarefree},
            {"uniform_prime_count", s.uniform_prime_count},
            {"prime_count", s.prime_count},
            {"size_power_of_two", s.size_power_of_two}};
}

}  // namespace

RunReport gcdset_verify(const std::string& set_file) {
    RunReport report;
    report.command = "gcdset verify";

    gcdsets::GcdSet set;
    try {
        set = gcdsets::set_from_json(load_json(set_file));
    } catch (const std::invalid_argument& err) {
        throw UsageError(set_file + ": " + err.what());
    }

    const auto property = gcdsets::verify_property(set);
    report.add("property_holds", property.holds,
               {{"violation_count", property.violations.size()},
                {"violations", violations_to_json(property.violations)}});

    const auto structure = gcdsets::structural_checks(set);
    report.add("structure_consistent", set.elements.empty() || structure.all_hold(),
               structure_to_json(structure));

    report.output = {{"set", gcdsets::set_to_json(set)}, {"size", set.size()}};
    return report;
}

RunReport gcdset_construct(int k, const std::string& primes) {
    if (k < 0) throw UsageError("--k must be nonnegative");

    std::vector<gcdsets::Element> p, q;
    std::istringstream in(primes);
    gcdsets::Element value = 0;
    while (in >> value) {
        (p.size() == q.size() ? p : q).push_back(value);
    }
    if (!in.eof()) throw UsageError("--primes must contain integers only");
    if (static_cast<int>(p.size()) != k || static_cast<int>(q.size()) != k) {
        throw UsageError("--primes must list exactly 2k primes, alternating between pairs");
    }

    RunReport report;
    report.command = "gcdset construct";

    gcdsets::GcdSet set;
    try {
        set = gcdsets::construct(k, p, q);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }

    report.add("property_holds", gcdsets::verify_property(set).holds);
    report.add("size_is_two_to_k", set.size() == (1 << k),
               {{"size", set.size()}, {"k", k}});

    report.output = {{"set", gcdsets::set_to_json(set)}, {"k", k}};
    return report;
}

RunReport gcdset_search(long long max_element, int max_size, bool prune_by_divisor_count) {
    if (max_element < 1) throw UsageError("--max-element must be positive");
    if (max_size < 1) throw UsageError("--max-size must be positive");

    RunReport report;
    report.command = "gcdset search";

    const auto mode = prune_by_divisor_count ? gcdsets::PruneMode::kDivisorCount
                                             : gcdsets::PruneMode::kNone;
    const auto result = gcdsets::search_sizes(max_element, max_size, mode);

    bool witnesses_ok = true;
    bool powers_only = true;
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& entry : result.achievable) {
        witnesses_ok = witnesses_ok && gcdsets::verify_property(entry.witness).holds;
        const auto size = static_cast<unsigned long long>(entry.size);
        powers_only = powers_only && (size & (size - 1)) == 0;
        witnesses.push_back({{"size", entry.size},
                             {"witness", gcdsets::set_to_json(entry.witness)}});
    }
    report.add("witnesses_satisfy_property", witnesses_ok);
    report.add("achievable_sizes_are_powers_of_two", powers_only,
               {{"sizes", result.sizes()}});

    report.output = {{"max_element", max_element},
                     {"max_size", max_size},
                     {"mode", prune_by_divisor_count ? "divisor-count" : "none"},
                     {"achievable_sizes", result.sizes()},
                     {"witnesses", witnesses},
                     {"nodes_explored", result.nodes_explored}};
    return report;
}

// ---- cyclic ------------------------------------------------------------------

RunReport cyclic_solve(int n, int starts, double tol, std::uint64_t seed) {
    if (n < 4) throw UsageError("--n must be at least 4");
    if (starts < 0) throw UsageError("--starts must be nonnegative");
    if (tol <= 0.0) throw UsageError("--tol must be positive");

    RunReport report;
    report.command = "cyclic solve";
    report.seed = seed;
    report.seeded = true;

    const cyclic::Assignment exact = cyclic::canonical(n);
    const auto canonical_run = cyclic::solve(n, exact, tol);
    report.add("canonical_residual_below_tol",
               canonical_run.converged && canonical_run.residual < tol,
               {{"residual", canonical_run.residual}, {"tol", tol}});
    report.add("canonical_zero_iterations", canonical_run.iterations == 0,
               {{"iterations", canonical_run.iterations}});

    Rng rng = Rng(seed).split("cyclic-starts");
    int converged_count = 0;
    double max_deviation = 0.0;
    double max_even_balance_gap = 0.0;
    double max_square_sum_gap = 0.0;
    bool identities_ok = true;
    bool minmax_ok = true;
    for (int run = 0; run < starts; ++run) {
        Rng local = rng.split(static_cast<std::uint64_t>(run));
        std::vector<double> values(static_cast<std::size_t>(2 * n));
        for (double& v : values) v = local.uniform(0.5, 4.0);
        const cyclic::Assignment initial(n, values);

        const auto run_result = cyclic::solve(n, initial, tol);
        if (!run_result.converged) continue;
        ++converged_count;

        double deviation = 0.0;
        for (int k = 1; k <= 2 * n; ++k) {
            deviation = std::max(deviation,
                                 std::abs(run_result.solution.at(k) - exact.at(k)));
        }
        max_deviation = std::max(max_deviation, deviation);

        const auto identities = cyclic::check_identities(run_result.solution, tol * 10.0);
        max_even_balance_gap = std::max(max_even_balance_gap, identities.even_balance_gap);
        max_square_sum_gap = std::max(max_square_sum_gap, identities.square_sum_gap);
        identities_ok = identities_ok && identities.all_pass(1e-8);

        const auto minmax = cyclic::minmax_check(run_result.solution, 1e-9);
        minmax_ok = minmax_ok && minmax.all_pass();
    }

    report.add("converged_runs_near_canonical", max_deviation < 1e-6,
               {{"max_deviation", max_deviation},
                {"bound", 1e-6},
                {"converged", converged_count},
                {"starts", starts}});
    report.add("converged_runs_identities_hold", identities_ok,
               {{"max_even_balance_gap", max_even_balance_gap},
                {"max_square_sum_gap", max_square_sum_gap},
                {"bound", 1e-8}});
    report.add("converged_runs_minmax_certified", minmax_ok);

    report.output = {{"n", n},
                     {"starts", starts},
                     {"converged", converged_count},
                     {"tol", tol},
                     {"max_deviation_from_canonical", max_deviation}};
    return report;
}

// ---- geom --------------------------------------------------------------------

RunReport geom_p1(int trials, std::uint64_t seed, double perturb) {
    if (trials < 1) throw UsageError("--trials must be positive");
    if (perturb < 0.0) throw UsageError("--perturb must be nonnegative");

    RunReport report;
    report.command = "geom p1";
    report.seed = seed;
    report.seeded = true;

    Rng rng = Rng(seed).split("geom-p1");
    constexpr double kTol = 1e-7;
    double max_spread = 0.0;
    double max_circle = 0.0;
    double max_foot = 0.0;
    double min_perturbed_spread = std::numeric_limits<double>::infinity();
    bool all_pass = true;
    for (int trial = 0; trial < trials; ++trial) {
        const geom::RectConfig cfg = geom::sample_config(rng);
        const auto result = geom::verify_concurrency(cfg, kTol);
        max_spread = std::max(max_spread, result.spread / result.scale);
        max_circle = std::max(max_circle, result.circle_deviation / result.scale);
        max_foot = std::max(max_foot, result.foot_deviation / result.scale);
        all_pass = all_pass && result.all_pass();

        if (perturb > 0.0) {
            const geom::RectConfig broken = geom::make_config_unchecked(
                cfg.A, cfg.B, cfg.C, cfg.ha, cfg.hb, cfg.hc * (1.0 + perturb));
            const auto broken_result = geom::verify_concurrency(broken, kTol);
            min_perturbed_spread =
                std::min(min_perturbed_spread, broken_result.spread / broken_result.scale);
        }
    }

    report.add("concurrent_within_tolerance", all_pass && max_spread < kTol,
               {{"max_relative_spread", max_spread}, {"tol", kTol}});
    report.add("point_on_rectangle_circles", max_circle < kTol,
               {{"max_relative_deviation", max_circle}, {"tol", kTol}});
    report.add("foot_of_perpendicular_matches", max_foot < kTol,
               {{"max_relative_deviation", max_foot}, {"tol", kTol}});
    if (perturb > 0.0) {
        report.add("perturbation_detected", min_perturbed_spread >= 1e-3,
                   {{"min_relative_spread", min_perturbed_spread},
                    {"threshold", 1e-3},
                    {"perturb", perturb}});
    }

    report.output = {{"trials", trials},
                     {"max_relative_spread", max_spread},
                     {"max_relative_circle_deviation", max_circle},
                     {"max_relative_foot_deviation", max_foot}};
    if (perturb > 0.0) report.output["min_perturbed_relative_spread"] = min_perturbed_spread;
    return report;
}

RunReport geom_p6(int trials, std::uint64_t seed) {
    if (trials < 1) throw UsageError("--trials must be positive");

    RunReport report;
    report.command = "geom p6";
    report.seed = seed;
    report.seeded = true;

    Rng rng = Rng(seed).split("geom-p6");
    constexpr double kTol = 1e-7;
    double max_midpoint = 0.0;
    double max_area = 0.0;
    double max_translate = 0.0;
    double max_power = 0.0;
    bool all_pass = true;
    for (int trial = 0; trial < trials; ++trial) {
        const geom::Hexagon hex = geom::sample_hexagon(rng);
        const auto result = geom::verify_hexagon(hex, kTol);
        max_midpoint = std::max(max_midpoint, result.midpoint_deviation / result.scale);
        max_area = std::max(max_area,
                            result.collinearity_area / (result.scale * result.scale));
        max_translate = std::max(max_translate, result.translate_deviation / result.scale);
        max_power = std::max(max_power,
                             std::max(result.power_deviation, result.product_deviation));
        all_pass = all_pass && result.all_pass();
    }

    report.add("orthocenter_at_circumcenter_midpoint", all_pass && max_midpoint < kTol,
               {{"max_relative_deviation", max_midpoint}, {"tol", kTol}});
    report.add("centers_collinear", max_area < 1e-9,
               {{"max_relative_area", max_area}, {"tol", 1e-9}});
    report.add("parallelogram_translate_identity", max_translate < 1e-9,
               {{"max_relative_deviation", max_translate}, {"tol", 1e-9}});
    report.add("power_products_match", max_power < 1e-8,
               {{"max_relative_deviation", max_power}, {"tol", 1e-8}});

    report.output = {{"trials", trials},
                     {"max_relative_midpoint_deviation", max_midpoint},
                     {"max_relative_collinearity_area", max_area},
                     {"max_relative_translate_deviation", max_translate},
                     {"max_relative_power_deviation", max_power}};
    return report;
}

// ---- aggregate -----------------------------------------------------------------

RunReport run_all(std::uint64_t seed, const std::string& data_dir) {
    RunReport report;
    report.command = "run-all";
    report.seed = seed;
    report.seeded = true;

    Rng root(seed);
    const std::uint64_t park_seed = root.split("park").next_u64();
    const std::uint64_t cyclic_seed = root.split("cyclic").next_u64();
    const std::uint64_t p1_seed = root.split("geom-p1").next_u64();
    const std::uint64_t p6_seed = root.split("geom-p6").next_u64();
    const std::string prism = data_dir + "/park_prism.json";
    const std::string extremal = data_dir + "/park_extremal.json";

    struct Item {
        std::string label;
        std::function<RunReport()> run;
    };
    const std::vector<Item> items = {
        {"park_verify_prism", [&] { return park_verify(prism); }},
        {"park_verify_extremal", [&] { return park_verify(extremal); }},
        {"park_simulate_prism", [&] { return park_simulate(prism, 0, 0, false); }},
        {"park_search", [&] { return park_search(10, 60, park_seed); }},
        {"tromino_construct_n3", [&] { return tromino_construct(3, ""); }},
        {"tromino_construct_n6", [&] { return tromino_construct(6, ""); }},
        {"tromino_construct_n9", [&] { return tromino_construct(9, ""); }},
        {"tromino_construct_n12", [&] { return tromino_construct(12, ""); }},
        {"tromino_search_n2", [&] { return tromino_search(2, 10'000'000, 1); }},
        {"tromino_search_n3", [&] { return tromino_search(3, 10'000'000, 1); }},
        {"tromino_search_n4", [&] { return tromino_search(4, 10'000'000, 1); }},
        {"tromino_certify_n3", [&] { return tromino_certify(3, ""); }},
        {"tromino_certify_n6", [&] { return tromino_certify(6, ""); }},
        {"gcdset_construct_k2", [&] { return gcdset_construct(2, "2 3 5 7"); }},
        {"gcdset_search", [&] { return gcdset_search(200, 4, true); }},
        {"cyclic_solve_n4", [&] { return cyclic_solve(4, 25, 1e-12, cyclic_seed); }},
        {"cyclic_solve_n7", [&] { return cyclic_solve(7, 25, 1e-12, cyclic_seed); }},
        {"cyclic_solve_n10", [&] { return cyclic_solve(10, 25, 1e-12, cyclic_seed); }},
        {"geom_p1", [&] { return geom_p1(150, p1_seed, 0.05); }},
        {"geom_p6", [&] { return geom_p6(150, p6_seed); }},
    };

    auto run_pass = [&items] {
        std::vector<RunReport> results;
        results.reserve(items.size());
        for (const Item& item : items) {
            const auto start = std::chrono::steady_clock::now();
            RunReport sub = item.run();
            sub.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            results.push_back(std::move(sub));
        }
        return results;
    };

    const std::vector<RunReport> first = run_pass();
    const std::vector<RunReport> second = run_pass();

    bool deterministic = true;
    nlohmann::json reports = nlohmann::json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const nlohmann::json a = strip_timing(first[i].to_json());
        const nlohmann::json b = strip_timing(second[i].to_json());
        deterministic = deterministic && a == b;
        report.add(items[i].label + "/all_claims_pass", first[i].all_pass());
        nlohmann::json entry = first[i].to_json();
        entry["label"] = items[i].label;
        reports.push_back(std::move(entry));
    }
    report.add("deterministic_replay", deterministic,
               {{"passes", 2}, {"compared_without", "runtime_ms"}});

    report.output = {{"reports", std::move(reports)}};
    return report;
}

}  // namespace olymp::cli
