#include <olymp/tromino/board.hpp>

#include <nlohmann/json.hpp>

namespace olymp::tromino {

Board::Board(int n) : n_(n) {
    if (n < 2) {
        throw std::invalid_argument("Board: side must be at least 2");
    }
    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    bits_.assign((cells + 63) / 64, 0);
}

void Board::check_cell(int col, int row, const char* who) const {
    if (col < 1 || col > n_ || row < 1 || row > n_) {
        throw MoveError(MoveErrorKind::kOutOfRange,
                        std::string(who) + ": cell (" + std::to_string(col) + ", " +
                            std::to_string(row) + ") is outside a board of side " +
                            std::to_string(n_));
    }
}

bool Board::occupied(int col, int row) const {
    check_cell(col, row, "Board::occupied");
    const std::size_t b = bit_index(col, row);
    return (bits_[b / 64] >> (b % 64)) & 1U;
}

bool Board::column_full(int col) const {
    check_cell(col, 1, "Board::column_full");
    for (int row = 1; row <= n_; ++row) {
        if (!occupied(col, row)) {
            return false;
        }
    }
    return true;
}

bool Board::row_full(int row) const {
    check_cell(1, row, "Board::row_full");
    for (int col = 1; col <= n_; ++col) {
        if (!occupied(col, row)) {
            return false;
        }
    }
    return true;
}

void Board::add_stone(int col, int row) {
    check_cell(col, row, "Board::add_stone");
    if (occupied(col, row)) {
        throw MoveError(MoveErrorKind::kCellOccupied,
                        "Board::add_stone: cell (" + std::to_string(col) + ", " +
                            std::to_string(row) + ") already holds a stone");
    }
    const std::size_t b = bit_index(col, row);
    bits_[b / 64] |= std::uint64_t{1} << (b % 64);
    ++stones_;
}

void Board::remove_stone(int col, int row) {
    if (!occupied(col, row)) {
        throw std::logic_error("Board::remove_stone: cell (" + std::to_string(col) + ", " +
                               std::to_string(row) + ") is empty");
    }
    const std::size_t b = bit_index(col, row);
    bits_[b / 64] &= ~(std::uint64_t{1} << (b % 64));
    --stones_;
}

void apply(Board& board, const Move& move) {
    const int n = board.side();
    switch (move.kind) {
        case MoveKind::kPlace: {
            if (move.i < 1 || move.i > n - 1 || move.j < 1 || move.j > n - 1) {
                throw MoveError(MoveErrorKind::kOutOfRange,
                                "apply: piece corner (" + std::to_string(move.i) + ", " +
                                    std::to_string(move.j) + ") must lie in [1, " +
                                    std::to_string(n - 1) + "]^2");
            }
            const int cells[3][2] = {
                {move.i, move.j}, {move.i + 1, move.j}, {move.i, move.j + 1}};
            for (const auto& cell : cells) {
                if (board.occupied(cell[0], cell[1])) {
                    throw MoveError(MoveErrorKind::kCellOccupied,
                                    "apply: cell (" + std::to_string(cell[0]) + ", " +
                                        std::to_string(cell[1]) + ") already holds a stone");
                }
            }
            for (const auto& cell : cells) {
                board.add_stone(cell[0], cell[1]);
            }
            return;
        }
        case MoveKind::kClearColumn: {
            if (move.i < 1 || move.i > n) {
                throw MoveError(MoveErrorKind::kOutOfRange,
                                "apply: column " + std::to_string(move.i) + " is outside [1, " +
                                    std::to_string(n) + "]");
            }
            if (!board.column_full(move.i)) {
                throw MoveError(MoveErrorKind::kLineNotFull,
                                "apply: column " + std::to_string(move.i) +
                                    " is not full, cannot clear it");
            }
            for (int row = 1; row <= n; ++row) {
                board.remove_stone(move.i, row);
            }
            return;
        }
        case MoveKind::kClearRow: {
            if (move.j < 1 || move.j > n) {
                throw MoveError(MoveErrorKind::kOutOfRange,
                                "apply: row " + std::to_string(move.j) + " is outside [1, " +
                                    std::to_string(n) + "]");
            }
            if (!board.row_full(move.j)) {
                throw MoveError(MoveErrorKind::kLineNotFull,
                                "apply: row " + std::to_string(move.j) +
                                    " is not full, cannot clear it");
            }
            for (int col = 1; col <= n; ++col) {
                board.remove_stone(col, move.j);
            }
            return;
        }
    }
    throw std::logic_error("apply: unknown move kind");
}

Board applied(const Board& board, const Move& move) {
    Board next = board;
    apply(next, move);
    return next;
}

Board replay(int n, const std::vector<Move>& moves) {
    Board board(n);
    for (std::size_t k = 0; k < moves.size(); ++k) {
        try {
            apply(board, moves[k]);
        } catch (const MoveError& err) {
            throw MoveError(err.kind(), "replay: move " + std::to_string(k) + " failed: " +
                                            err.what());
        }
    }
    return board;
}

nlohmann::json moves_to_json(const std::vector<Move>& moves) {
    nlohmann::json doc = nlohmann::json::array();
    for (const Move& m : moves) {
        switch (m.kind) {
            case MoveKind::kPlace:
                doc.push_back({{"op", "place"}, {"i", m.i}, {"j", m.j}});
                break;
            case MoveKind::kClearColumn:
                doc.push_back({{"op", "clear_col"}, {"i", m.i}});
                break;
            case MoveKind::kClearRow:
                doc.push_back({{"op", "clear_row"}, {"j", m.j}});
                break;
        }
    }
    return doc;
}

std::vector<Move> moves_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) {
        throw std::invalid_argument("moves_from_json: expected a JSON array of moves");
    }
    std::vector<Move> moves;
    moves.reserve(doc.size());
    for (std::size_t k = 0; k < doc.size(); ++k) {
        const nlohmann::json& entry = doc[k];
        try {
            const std::string op = entry.at("op").get<std::string>();
            if (op == "place") {
                moves.push_back(Move::place(entry.at("i").get<int>(), entry.at("j").get<int>()));
            } else if (op == "clear_col") {
                moves.push_back(Move::clear_column(entry.at("i").get<int>()));
            } else if (op == "clear_row") {
                moves.push_back(Move::clear_row(entry.at("j").get<int>()));
            } else {
                throw std::invalid_argument("unknown op \"" + op + "\"");
            }
        } catch (const nlohmann::json::exception& err) {
            throw std::invalid_argument("moves_from_json: move " + std::to_string(k) + ": " +
                                        err.what());
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument("moves_from_json: move " + std::to_string(k) + ": " +
                                        err.what());
        }
    }
    return moves;
}

}  // namespace olymp::tromino
