#include <doctest.h>

#include <olymp/tromino/board.hpp>
#include <olymp/tromino/game.hpp>

#include <stdexcept>
#include <vector>

using olymp::tromino::Board;
using olymp::tromino::constructive_clear;
using olymp::tromino::exhaustive_search;
using olymp::tromino::Move;
using olymp::tromino::replay;
using olymp::tromino::SearchStatus;

TEST_SUITE_BEGIN("tromino");

TEST_CASE("constructive schedule replays to empty with the closed-form length") {
    for (int n : {3, 6, 9, 12, 15}) {
        CAPTURE(n);
        const std::vector<Move> moves = constructive_clear(n);
        const int m = n / 3;
        CHECK_EQ(static_cast<int>(moves.size()), 3 * m * m + n);
        const Board final_board = replay(n, moves);  // throws on any illegal move
        CHECK(final_board.empty());
    }
}

TEST_CASE("constructive schedule rejects sides not divisible by three") {
    CHECK_THROWS_AS(constructive_clear(4), std::invalid_argument);
    CHECK_THROWS_AS(constructive_clear(0), std::invalid_argument);
    CHECK_THROWS_AS(constructive_clear(-3), std::invalid_argument);
}

TEST_CASE("the shortest 3x3 sequence is found and matches the construction") {
    const auto outcome = exhaustive_search(3);
    REQUIRE_EQ(outcome.status, SearchStatus::kWitnessFound);
    CHECK_EQ(outcome.states_explored, 13);

    const std::vector<Move> expected{Move::place(1, 1), Move::place(2, 2),
                                     Move::clear_column(2), Move::place(2, 1),
                                     Move::clear_row(1),   Move::clear_row(2)};
    CHECK_EQ(outcome.witness, expected);
    CHECK_EQ(outcome.witness, constructive_clear(3));
}

TEST_CASE("2x2 boards admit no clearing sequence") {
    const auto outcome = exhaustive_search(2);
    CHECK_EQ(outcome.status, SearchStatus::kProvenAbsent);
    CHECK(outcome.witness.empty());
    CHECK_EQ(outcome.states_explored, 3);
}

TEST_CASE("4x4 boards admit no clearing sequence") {
    const auto outcome = exhaustive_search(4);
    CHECK_EQ(outcome.status, SearchStatus::kProvenAbsent);
    CHECK_EQ(outcome.states_explored, 513);
}

TEST_CASE("a tight state budget is reported as inconclusive, not absence") {
    const auto outcome = exhaustive_search(4, /*max_states=*/10);
    CHECK_EQ(outcome.status, SearchStatus::kInconclusive);
}

TEST_CASE("extra worker threads change nothing about the outcome") {
    const auto solo = exhaustive_search(3, 10'000'000, 1);
    const auto multi = exhaustive_search(3, 10'000'000, 4);
    CHECK_EQ(solo.status, multi.status);
    CHECK_EQ(solo.witness, multi.witness);
    CHECK_EQ(solo.states_explored, multi.states_explored);

    const auto solo4 = exhaustive_search(4, 10'000'000, 1);
    const auto multi4 = exhaustive_search(4, 10'000'000, 3);
    CHECK_EQ(solo4.status, multi4.status);
    CHECK_EQ(solo4.states_explored, multi4.states_explored);
}

TEST_CASE("search rejects boards that do not fit the state representation") {
    CHECK_THROWS_AS(exhaustive_search(1), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_search(9), std::invalid_argument);  // 81 cells > 64 bits
}

TEST_SUITE_END();
