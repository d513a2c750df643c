#include <olymp/park/search.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace olymp::park {
namespace {

// One pairing attempt of the 3*junctions stubs; empty result on rejection.
std::vector<std::pair<int, int>> try_pairing(int junctions, Rng& rng) {
    std::vector<int> stubs;
    stubs.reserve(3 * static_cast<std::size_t>(junctions));
    for (int v = 0; v < junctions; ++v) {
        stubs.push_back(v);
        stubs.push_back(v);
        stubs.push_back(v);
    }
    rng.shuffle(stubs);

    std::vector<std::pair<int, int>> trails;
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
        const int u = stubs[k];
        const int v = stubs[k + 1];
        if (u == v) return {};  // loop
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) return {};  // parallel trail
        trails.emplace_back(u, v);
    }
    return trails;
}

}  // namespace

ParkLayout random_cubic_layout(int junctions, Rng& rng) {
    if (junctions < 4 || junctions % 2 != 0) {
        throw std::invalid_argument(
            "random_cubic_layout: junction count must be even and at least 4");
    }
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        auto trails = try_pairing(junctions, rng);
        if (trails.empty()) continue;

        ParkLayout layout;
        layout.junction_count = junctions;
        layout.trails = std::move(trails);
        layout.rotation.assign(static_cast<std::size_t>(junctions), {0, 0, 0});

        std::vector<std::vector<int>> incident(static_cast<std::size_t>(junctions));
        for (int t = 0; t < layout.trail_count(); ++t) {
            incident[static_cast<std::size_t>(layout.trails[static_cast<std::size_t>(t)].first)]
                .push_back(t);
            incident[static_cast<std::size_t>(layout.trails[static_cast<std::size_t>(t)].second)]
                .push_back(t);
        }
        for (int v = 0; v < junctions; ++v) {
            auto& inc = incident[static_cast<std::size_t>(v)];
            rng.shuffle(inc);
            layout.rotation[static_cast<std::size_t>(v)] = {inc[0], inc[1], inc[2]};
        }
        return layout;
    }
    throw std::runtime_error("random_cubic_layout: pairing rejection budget exhausted");
}

namespace {

// Deterministic serialization used only for tie-breaking between layouts.
std::string layout_key(const ParkLayout& layout) {
    return layout_to_json(layout).dump();
}

struct Candidate {
    int count = -1;
    int junctions = 0;
    std::string key;
    int start = 0;
    int trail = 0;
    Turn turn = Turn::kLeft;

    // "Better" = more visits; ties prefer lexicographically smaller
    // (junctions, key, start, trail, turn).
    bool beats(const Candidate& other) const {
        if (count != other.count) return count > other.count;
        auto tie = [](const Candidate& c) {
            return std::make_tuple(c.junctions, std::cref(c.key), c.start, c.trail,
                                   c.turn == Turn::kLeft ? 0 : 1);
        };
        return tie(*this) < tie(other);
    }
};

template <typename Visit>
void for_each_configuration(const ParkLayout& layout, Visit&& visit) {
    for (int start = 0; start < layout.junction_count; ++start) {
        const auto rot = layout.rotation[static_cast<std::size_t>(start)];
        for (int slot = 0; slot < 3; ++slot) {
            for (Turn turn : {Turn::kLeft, Turn::kRight}) {
                visit(start, rot[static_cast<std::size_t>(slot)], turn);
            }
        }
    }
}

int pick_junction_count(int max_junctions, Rng& rng) {
    const int sizes = (max_junctions - 4) / 2 + 1;  // 4, 6, ..., max
    return 4 + 2 * rng.uniform_int(0, sizes - 1);
}

}  // namespace

ExtremalResult search_extremal(int max_junctions, int samples, std::uint64_t seed) {
    if (max_junctions < 4) {
        throw std::invalid_argument("search_extremal: max_junctions must be at least 4");
    }
    Rng root(seed);

    ExtremalResult best;
    Candidate best_candidate;
    bool have_best = false;

    for (int sample = 0; sample < samples; ++sample) {
        Rng rng = root.split(static_cast<std::uint64_t>(sample));
        const int junctions = pick_junction_count(max_junctions, rng);
        ParkLayout layout = random_cubic_layout(junctions, rng);
        ++best.layouts_examined;

        std::string key;  // computed lazily: only needed to break ties
        for_each_configuration(layout, [&](int start, int trail, Turn turn) {
            Walk walk = simulate(layout, start, trail, turn);
            ++best.walks_examined;
            auto [junction, count] = max_visits(walk);

            Candidate cand;
            cand.count = count;
            cand.junctions = junctions;
            if (key.empty()) key = layout_key(layout);
            cand.key = key;
            cand.start = start;
            cand.trail = trail;
            cand.turn = turn;
            if (!have_best || cand.beats(best_candidate)) {
                have_best = true;
                best_candidate = cand;
                best.layout = layout;
                best.start = start;
                best.first_trail = trail;
                best.first_turn = turn;
                best.walk = std::move(walk);
                best.best_junction = junction;
                best.best_count = count;
            }
        });
    }
    return best;
}

FuzzReport fuzz_walks(int layouts, int max_junctions, std::uint64_t seed) {
    if (max_junctions < 4) {
        throw std::invalid_argument("fuzz_walks: max_junctions must be at least 4");
    }
    Rng root(seed);
    FuzzReport report;
    report.visit_bound_holds = true;
    report.traversal_bound_holds = true;

    for (int i = 0; i < layouts; ++i) {
        Rng rng = root.split(static_cast<std::uint64_t>(i));
        const int junctions = pick_junction_count(max_junctions, rng);
        ParkLayout layout = random_cubic_layout(junctions, rng);
        ++report.layouts;

        for_each_configuration(layout, [&](int start, int trail, Turn turn) {
            Walk walk = simulate(layout, start, trail, turn);
            ++report.walks;
            auto [junction, count] = max_visits(walk);
            (void)junction;
            report.max_visit_count = std::max(report.max_visit_count, count);
            if (count > 3) report.visit_bound_holds = false;
            for (const auto& [t, c] : trail_traversal_counts(walk)) {
                (void)t;
                report.max_trail_traversals = std::max(report.max_trail_traversals, c);
                if (c > 2) report.traversal_bound_holds = false;
            }
        });
    }
    return report;
}

}  // namespace olymp::park
