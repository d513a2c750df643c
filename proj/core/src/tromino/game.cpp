#include <olymp/tromino/game.hpp>

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace olymp::tromino {

std::vector<Move> constructive_clear(int n) {
    if (n <= 0 || n % 3 != 0) {
        throw std::invalid_argument(
            "constructive_clear: n must be a positive multiple of 3, got " + std::to_string(n));
    }
    const int m = n / 3;
    std::vector<Move> moves;
    moves.reserve(static_cast<std::size_t>(3 * m * m + n));

    // Phase 1: per column group k, fill the middle column c = 3k-1 and clear it.
    for (int k = 1; k <= m; ++k) {
        const int c = 3 * k - 1;
        for (int t = 0; t < m; ++t) {
            moves.push_back(Move::place(c - 1, 3 * t + 1));
            moves.push_back(Move::place(c, 3 * t + 2));
        }
        moves.push_back(Move::clear_column(c));
    }

    // Phase 2: per row band t, one piece per group completes rows 3t+1 and
    // 3t+2; clear both.
    for (int t = 0; t < m; ++t) {
        for (int k = 1; k <= m; ++k) {
            moves.push_back(Move::place(3 * k - 1, 3 * t + 1));
        }
        moves.push_back(Move::clear_row(3 * t + 1));
        moves.push_back(Move::clear_row(3 * t + 2));
    }
    return moves;
}

namespace {

// Compact move table over single-word bitboards, valid while n*n <= 64.
struct MoveTable {
    struct Entry {
        Move move;
        std::uint64_t mask;
        bool is_place;
    };
    std::vector<Entry> entries;

    explicit MoveTable(int n) {
        const auto bit = [n](int col, int row) {
            return std::uint64_t{1} << ((row - 1) * n + (col - 1));
        };
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                entries.push_back(
                    {Move::place(i, j), bit(i, j) | bit(i + 1, j) | bit(i, j + 1), true});
            }
        }
        for (int i = 1; i <= n; ++i) {
            std::uint64_t mask = 0;
            for (int row = 1; row <= n; ++row) {
                mask |= bit(i, row);
            }
            entries.push_back({Move::clear_column(i), mask, false});
        }
        for (int j = 1; j <= n; ++j) {
            std::uint64_t mask = 0;
            for (int col = 1; col <= n; ++col) {
                mask |= bit(col, j);
            }
            entries.push_back({Move::clear_row(j), mask, false});
        }
    }
};

struct Parent {
    std::uint64_t state;
    int move_index;
};

struct LevelCandidate {
    std::uint64_t next;
    std::uint64_t from;
    int move_index;
};

void expand_range(const MoveTable& table,
                  const std::vector<std::uint64_t>& frontier,
                  std::size_t begin, std::size_t end,
                  const std::unordered_map<std::uint64_t, Parent>& visited,
                  std::vector<LevelCandidate>& out) {
    for (std::size_t s = begin; s < end; ++s) {
        const std::uint64_t state = frontier[s];
        for (std::size_t k = 0; k < table.entries.size(); ++k) {
            const auto& entry = table.entries[k];
            std::uint64_t next;
            if (entry.is_place) {
                if ((state & entry.mask) != 0) {
                    continue;
                }
                next = state | entry.mask;
            } else {
                if ((state & entry.mask) != entry.mask) {
                    continue;
                }
                next = state & ~entry.mask;
            }
            if (next != 0 && visited.contains(next)) {
                continue;
            }
            out.push_back({next, state, static_cast<int>(k)});
        }
    }
}

}  // namespace

SearchOutcome exhaustive_search(int n, std::uint64_t max_states, int threads) {
    if (n < 2) {
        throw std::invalid_argument("exhaustive_search: board side must be at least 2");
    }
    if (n * n > 64) {
        throw std::invalid_argument(
            "exhaustive_search: boards beyond 8x8 do not fit the bitboard state");
    }
    if (threads < 1) {
        throw std::invalid_argument("exhaustive_search: thread count must be positive");
    }

    const MoveTable table(n);
    std::unordered_map<std::uint64_t, Parent> visited;  // nonempty states only
    std::vector<std::uint64_t> frontier{0};             // start on the empty board

    SearchOutcome outcome;
    std::vector<LevelCandidate> merged;

    while (!frontier.empty()) {
        merged.clear();
        if (threads == 1 || frontier.size() < 64) {
            expand_range(table, frontier, 0, frontier.size(), visited, merged);
        } else {
            // Workers only read `visited`; results merge in chunk order below,
            // so the parent assignment matches the single-threaded scan.
            const std::size_t parts = std::min<std::size_t>(threads, frontier.size());
            std::vector<std::vector<LevelCandidate>> results(parts);
            std::vector<std::thread> workers;
            workers.reserve(parts);
            const std::size_t chunk = (frontier.size() + parts - 1) / parts;
            for (std::size_t p = 0; p < parts; ++p) {
                const std::size_t begin = p * chunk;
                const std::size_t end = std::min(frontier.size(), begin + chunk);
                workers.emplace_back([&, begin, end, p] {
                    expand_range(table, frontier, begin, end, visited, results[p]);
                });
            }
            for (auto& worker : workers) {
                worker.join();
            }
            for (auto& part : results) {
                merged.insert(merged.end(), part.begin(), part.end());
            }
        }

        std::vector<std::uint64_t> next_frontier;
        for (const LevelCandidate& cand : merged) {
            if (cand.next == 0) {
                // Back at the empty board: reconstruct the move list.
                std::vector<Move> witness{table.entries[static_cast<std::size_t>(cand.move_index)].move};
                std::uint64_t cursor = cand.from;
                while (cursor != 0) {
                    const Parent& parent = visited.at(cursor);
                    witness.push_back(table.entries[static_cast<std::size_t>(parent.move_index)].move);
                    cursor = parent.state;
                }
                std::reverse(witness.begin(), witness.end());
                outcome.status = SearchStatus::kWitnessFound;
                outcome.witness = std::move(witness);
                outcome.states_explored = visited.size();
                return outcome;
            }
            if (visited.emplace(cand.next, Parent{cand.from, cand.move_index}).second) {
                next_frontier.push_back(cand.next);
                if (visited.size() > max_states) {
                    outcome.status = SearchStatus::kInconclusive;
                    outcome.states_explored = visited.size();
                    return outcome;
                }
            }
        }
        frontier = std::move(next_frontier);
    }

    outcome.status = SearchStatus::kProvenAbsent;
    outcome.states_explored = visited.size();
    return outcome;
}

}  // namespace olymp::tromino
