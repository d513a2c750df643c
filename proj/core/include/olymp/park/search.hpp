#pragma once

#include <olymp/park/layout.hpp>
#include <olymp/park/walk.hpp>
#include <olymp/rng.hpp>

#include <cstdint>

namespace olymp::park {

/**
 * Random simple cubic graph on `junctions` vertices (even, >= 4) with a
 * random rotation at every junction: three stubs per junction are paired
 * uniformly and the pairing is rejected while it contains loops or repeated
 * pairs.  Deterministic for a given generator state.
 */
ParkLayout random_cubic_layout(int junctions, Rng& rng);

struct ExtremalResult {
    ParkLayout layout;
    int start = 0;
    int first_trail = 0;
    Turn first_turn = Turn::kLeft;
    Walk walk;
    int best_junction = 0;
    int best_count = 0;
    int layouts_examined = 0;
    std::int64_t walks_examined = 0;
};

/**
 * Sample `samples` random layouts with 4..max_junctions junctions (even
 * sizes), walk every (start, incident trail, first turn) configuration of
 * each, and return the configuration maximizing the junction arrival count.
 * Ties break lexicographically on (junction count, layout serialization,
 * start, trail, turn), so the result is independent of evaluation order.
 */
ExtremalResult search_extremal(int max_junctions, int samples, std::uint64_t seed);

struct FuzzReport {
    int layouts = 0;
    std::int64_t walks = 0;
    int max_visit_count = 0;      // largest junction arrival count seen
    int max_trail_traversals = 0; // largest per-trail traversal count seen
    bool visit_bound_holds = false;      // every count <= 3
    bool traversal_bound_holds = false;  // every count <= 2
};

/**
 * Walk every configuration of `layouts` random layouts (each with an even
 * junction count between 4 and max_junctions) and record the extreme visit
 * and traversal counts against the bounds (3 and 2 respectively).
 */
FuzzReport fuzz_walks(int layouts, int max_junctions, std::uint64_t seed);

}  // namespace olymp::park
