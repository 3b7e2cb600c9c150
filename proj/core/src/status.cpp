#include "variantlab/status.hpp"

#include <algorithm>

#include "variantlab/movegen.hpp"

namespace vlab {

std::string_view gameStateName(GameState s) {
    switch (s) {
        case GameState::Ongoing: return "ongoing";
        case GameState::WhiteWins: return "1-0";
        case GameState::BlackWins: return "0-1";
        case GameState::Draw: return "1/2-1/2";
    }
    return "ongoing";
}

std::string_view gameReasonName(GameReason r) {
    switch (r) {
        case GameReason::None: return "none";
        case GameReason::Checkmate: return "checkmate";
        case GameReason::Stalemate: return "stalemate";
        case GameReason::FiftyMove: return "fifty-move";
        case GameReason::ThreefoldRepetition: return "threefold";
    }
    return "none";
}

GameStatus status(const Position& p, std::span<const std::uint64_t> history) {
    if (!hasLegalMove(p)) {
        GameState loserLoses =
            p.sideToMove == Color::White ? GameState::BlackWins : GameState::WhiteWins;
        if (inCheck(p, p.sideToMove)) return {loserLoses, GameReason::Checkmate};
        if (p.variant.stalemateIsWin) return {loserLoses, GameReason::Stalemate};
        return {GameState::Draw, GameReason::Stalemate};
    }
    if (p.halfmoveClock >= 100) return {GameState::Draw, GameReason::FiftyMove};
    if (!history.empty()) {
        std::uint64_t key = repetitionKey(p);
        auto prior = std::count(history.begin(), history.end(), key);
        if (prior + 1 >= 3) return {GameState::Draw, GameReason::ThreefoldRepetition};
    }
    return {GameState::Ongoing, GameReason::None};
}

}  // namespace vlab
