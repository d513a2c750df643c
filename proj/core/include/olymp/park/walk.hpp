#pragma once

#include <olymp/park/layout.hpp>

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace olymp::park {

enum class Turn { kLeft, kRight };

Turn opposite(Turn turn);

/**
 * The visitor's state between junctions: she is on `trail` moving toward
 * `head`, and will turn `next_turn` there.  The turn directions strictly
 * alternate, so the state space has 4 * trail_count elements and the step
 * map is a bijection on it.
 */
struct WalkState {
    int trail;
    int head;
    Turn next_turn;

    friend bool operator==(const WalkState& lhs, const WalkState& rhs) {
        return lhs.trail == rhs.trail && lhs.head == rhs.head &&
               lhs.next_turn == rhs.next_turn;
    }
};

/**
 * Advance one junction: entering `head` via `trail`, a Left turn exits along
 * the CCW-successor of `trail` in the junction's rotation, a Right turn along
 * the CCW-predecessor; the turn direction flips.
 */
WalkState step(const ParkLayout& layout, const WalkState& state);

/** Inverse of step; step_back(step(s)) == s for every state. */
WalkState step_back(const ParkLayout& layout, const WalkState& state);

/**
 * Time reversal: same trail, opposite heading, same pending turn direction.
 * Satisfies step(reversed(step(s))) == reversed(s) — walking the reversed
 * trail replays the original walk backwards, which is the bijectivity
 * argument behind the visit bound.
 */
WalkState reversed(const ParkLayout& layout, const WalkState& state);

struct WalkStep {
    int trail;
    int from;
    int to;
    std::optional<Turn> turn_at_end;  // empty on the final, terminating step
};

struct Walk {
    int start = 0;
    std::vector<WalkStep> steps;
    std::vector<int> visit_counts;  // arrivals per junction, final arrival included
};

/**
 * Walk from `start` along `first_trail` (which must be incident), turning
 * `first_turn` at the first junction and alternating thereafter, until the
 * first arrival back at `start`.  A guard of 4 * trail_count + 2 steps throws
 * std::logic_error if exceeded, which the finite bijective state space makes
 * impossible for valid layouts.
 */
Walk simulate(const ParkLayout& layout, int start, int first_trail, Turn first_turn);

/** Junction with the most arrivals and that count; smallest junction id on ties. */
std::pair<int, int> max_visits(const Walk& walk);

/** How often each trail was traversed; trails not walked are absent. */
std::map<int, int> trail_traversal_counts(const Walk& walk);

// JSON form: {"start": s, "steps": [[trail, from, to, "L"|"R"|null], ...],
//             "visit_counts": [...]}
nlohmann::json walk_to_json(const Walk& walk);

}  // namespace olymp::park
