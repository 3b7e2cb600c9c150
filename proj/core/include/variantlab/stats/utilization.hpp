#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "variantlab/game_record.hpp"

namespace vlab::stats {

struct FlagStats {
    std::int64_t gamesWithMove = 0;
    std::int64_t moveCount = 0;
    double gameFraction = 0.0;  // games containing at least one such move
    double moveFraction = 0.0;  // share of all plies
};

struct UtilizationReport {
    std::int64_t games = 0;
    std::int64_t plies = 0;
    FlagStats torpedo;           // double push from a non-home rank
    FlagStats backward;
    FlagStats lateral;
    FlagStats selfCapture;
    FlagStats enPassant;
    FlagStats torpedoPromotion;  // double push arriving on the final rank
    // Decisive-game breakdown (meaningful for StalemateWin sets).
    std::int64_t decisiveGames = 0;
    std::int64_t stalemateWins = 0;
    double stalemateWinShare = 0.0;  // of decisive games
};

UtilizationReport specialMoveUtilization(std::span<const GameRecord> games);

}  // namespace vlab::stats
