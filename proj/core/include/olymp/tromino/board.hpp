#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace olymp::tromino {

/**
 * Square board of side n with one stone per cell at most.
 *
 * Cells are addressed (column, row), both 1-based, column growing rightward
 * and row growing upward.  The three legal moves:
 *
 *   - place(i, j):  drop an L-piece on the empty cells (i, j), (i+1, j),
 *                   (i, j+1); requires 1 <= i, j <= n-1.
 *   - clear_column(i): remove all n stones of a full column i.
 *   - clear_row(j):    remove all n stones of a full row j.
 */
class Board {
public:
    explicit Board(int n);

    int side() const { return n_; }
    bool occupied(int col, int row) const;
    bool empty() const { return stones_ == 0; }
    int stone_count() const { return stones_; }
    bool column_full(int col) const;
    bool row_full(int row) const;

    void add_stone(int col, int row);
    void remove_stone(int col, int row);

    friend bool operator==(const Board& lhs, const Board& rhs) {
        return lhs.n_ == rhs.n_ && lhs.bits_ == rhs.bits_;
    }

private:
    std::size_t bit_index(int col, int row) const {
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(col - 1);
    }
    void check_cell(int col, int row, const char* who) const;

    int n_;
    int stones_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class MoveKind { kPlace, kClearColumn, kClearRow };

struct Move {
    MoveKind kind;
    int i = 0;  // column of the piece corner, or the cleared column
    int j = 0;  // row of the piece corner, or the cleared row

    static Move place(int i, int j) { return {MoveKind::kPlace, i, j}; }
    static Move clear_column(int i) { return {MoveKind::kClearColumn, i, 0}; }
    static Move clear_row(int j) { return {MoveKind::kClearRow, 0, j}; }

    friend bool operator==(const Move& lhs, const Move& rhs) {
        return lhs.kind == rhs.kind && lhs.i == rhs.i && lhs.j == rhs.j;
    }
};

enum class MoveErrorKind {
    kOutOfRange,    // move coordinates leave the board
    kCellOccupied,  // a placement cell already holds a stone
    kLineNotFull,   // a clear names a column/row with an empty cell
};

class MoveError : public std::runtime_error {
public:
    MoveError(MoveErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    MoveErrorKind kind() const { return kind_; }

private:
    MoveErrorKind kind_;
};

/** Apply one move in place; throws MoveError and leaves the board unchanged on failure. */
void apply(Board& board, const Move& move);

/** Pure variant returning the successor board. */
Board applied(const Board& board, const Move& move);

/** Replay a whole sequence from the empty board; index of a bad move is in the error text. */
Board replay(int n, const std::vector<Move>& moves);

// JSON form: [{"op":"place","i":..,"j":..}, {"op":"clear_col","i":..}, {"op":"clear_row","j":..}]
nlohmann::json moves_to_json(const std::vector<Move>& moves);
std::vector<Move> moves_from_json(const nlohmann::json& doc);

}  // namespace olymp::tromino
