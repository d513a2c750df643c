#include <olymp/park/walk.hpp>

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace olymp::park {

Turn opposite(Turn turn) { return turn == Turn::kLeft ? Turn::kRight : Turn::kLeft; }

namespace {

int rotation_index(const ParkLayout& layout, int junction, int trail) {
    const auto& rot = layout.rotation.at(static_cast<std::size_t>(junction));
    for (int k = 0; k < 3; ++k) {
        if (rot[static_cast<std::size_t>(k)] == trail) {
            return k;
        }
    }
    throw std::invalid_argument("walk: trail " + std::to_string(trail) +
                                " does not appear in the rotation of junction " +
                                std::to_string(junction));
}

}  // namespace

WalkState step(const ParkLayout& layout, const WalkState& state) {
    const int pos = rotation_index(layout, state.head, state.trail);
    const auto& rot = layout.rotation[static_cast<std::size_t>(state.head)];
    const int offset = state.next_turn == Turn::kLeft ? 1 : 2;  // CCW successor / predecessor
    const int exit_trail = rot[static_cast<std::size_t>((pos + offset) % 3)];
    return {exit_trail, layout.other_end(exit_trail, state.head), opposite(state.next_turn)};
}

WalkState step_back(const ParkLayout& layout, const WalkState& state) {
    // Undo: the previous junction is the tail of the current trail, the
    // previous turn is the opposite direction, and the entry trail is the
    // rotation neighbor on the other side.
    const int junction = layout.other_end(state.trail, state.head);
    const Turn prev_turn = opposite(state.next_turn);
    const int pos = rotation_index(layout, junction, state.trail);
    const auto& rot = layout.rotation[static_cast<std::size_t>(junction)];
    const int offset = prev_turn == Turn::kLeft ? 2 : 1;  // inverse of step's exit choice
    const int entry_trail = rot[static_cast<std::size_t>((pos + offset) % 3)];
    return {entry_trail, junction, prev_turn};
}

WalkState reversed(const ParkLayout& layout, const WalkState& state) {
    return {state.trail, layout.other_end(state.trail, state.head), state.next_turn};
}

Walk simulate(const ParkLayout& layout, int start, int first_trail, Turn first_turn) {
    if (start < 0 || start >= layout.junction_count) {
        throw std::invalid_argument("simulate: start junction " + std::to_string(start) +
                                    " out of range");
    }
    if (first_trail < 0 || first_trail >= layout.trail_count() ||
        !layout.incident(first_trail, start)) {
        throw std::invalid_argument("simulate: trail " + std::to_string(first_trail) +
                                    " is not incident to start junction " +
                                    std::to_string(start));
    }

    Walk walk;
    walk.start = start;
    walk.visit_counts.assign(static_cast<std::size_t>(layout.junction_count), 0);

    const std::size_t guard = 4 * static_cast<std::size_t>(layout.trail_count()) + 2;
    WalkState state{first_trail, layout.other_end(first_trail, start), first_turn};
    int from = start;
    while (true) {
        const int arrival = state.head;
        ++walk.visit_counts[static_cast<std::size_t>(arrival)];
        if (arrival == start) {
            walk.steps.push_back({state.trail, from, arrival, std::nullopt});
            break;
        }
        walk.steps.push_back({state.trail, from, arrival, state.next_turn});
        from = arrival;
        state = step(layout, state);
        if (walk.steps.size() > guard) {
            // The step map is a bijection on 4 * trails states, so a walk that
            // fails to return within the guard exposes a broken layout/step.
            throw std::logic_error("simulate: step guard exceeded, walk does not return");
        }
    }
    return walk;
}

std::pair<int, int> max_visits(const Walk& walk) {
    if (walk.visit_counts.empty()) {
        throw std::invalid_argument("max_visits: empty walk");
    }
    const auto best = std::max_element(walk.visit_counts.begin(), walk.visit_counts.end());
    return {static_cast<int>(best - walk.visit_counts.begin()), *best};
}

std::map<int, int> trail_traversal_counts(const Walk& walk) {
    std::map<int, int> counts;
    for (const WalkStep& s : walk.steps) {
        ++counts[s.trail];
    }
    return counts;
}

nlohmann::json walk_to_json(const Walk& walk) {
    nlohmann::json steps = nlohmann::json::array();
    for (const WalkStep& s : walk.steps) {
        nlohmann::json turn;
        if (s.turn_at_end.has_value()) {
            turn = *s.turn_at_end == Turn::kLeft ? "L" : "R";
        }
        steps.push_back({s.trail, s.from, s.to, turn});
    }
    return {{"start", walk.start}, {"steps", steps}, {"visit_counts", walk.visit_counts}};
}

}  // namespace olymp::park
