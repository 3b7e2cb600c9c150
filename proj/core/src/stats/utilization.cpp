#include "variantlab/stats/utilization.hpp"

#include "variantlab/fen.hpp"

namespace vlab::stats {

namespace {

struct FlagTally {
    std::int64_t games = 0, moves = 0;
    bool seenThisGame = false;

    void nextGame() { seenThisGame = false; }
    void hit() {
        ++moves;
        if (!seenThisGame) {
            seenThisGame = true;
            ++games;
        }
    }
    FlagStats stats(std::int64_t totalGames, std::int64_t totalPlies) const {
        FlagStats s;
        s.gamesWithMove = games;
        s.moveCount = moves;
        s.gameFraction = totalGames ? static_cast<double>(games) / totalGames : 0.0;
        s.moveFraction = totalPlies ? static_cast<double>(moves) / totalPlies : 0.0;
        return s;
    }
};

}  // namespace

UtilizationReport specialMoveUtilization(std::span<const GameRecord> games) {
    UtilizationReport report;
    FlagTally torpedo, backward, lateral, selfCapture, enPassant, torpedoPromotion;

    for (const GameRecord& g : games) {
        ++report.games;
        torpedo.nextGame();
        backward.nextGame();
        lateral.nextGame();
        selfCapture.nextGame();
        enPassant.nextGame();
        torpedoPromotion.nextGame();

        Position start = parseFen(g.startFen, g.variant.id);
        Color mover = start.sideToMove;
        for (const Move& m : g.moves) {
            ++report.plies;
            int homeRank = mover == Color::White ? 1 : 6;
            if (m.is(moveflag::DoublePush) && m.from.rank != homeRank) {
                torpedo.hit();
                if (m.promotion) torpedoPromotion.hit();
            }
            if (m.is(moveflag::Backward)) backward.hit();
            if (m.is(moveflag::Lateral)) lateral.hit();
            if (m.is(moveflag::SelfCapture)) selfCapture.hit();
            if (m.is(moveflag::EnPassant)) enPassant.hit();
            mover = opponent(mover);
        }

        if (g.result.state == GameState::WhiteWins || g.result.state == GameState::BlackWins) {
            ++report.decisiveGames;
            if (g.result.reason == GameReason::Stalemate) ++report.stalemateWins;
        }
    }

    report.torpedo = torpedo.stats(report.games, report.plies);
    report.backward = backward.stats(report.games, report.plies);
    report.lateral = lateral.stats(report.games, report.plies);
    report.selfCapture = selfCapture.stats(report.games, report.plies);
    report.enPassant = enPassant.stats(report.games, report.plies);
    report.torpedoPromotion = torpedoPromotion.stats(report.games, report.plies);
    report.stalemateWinShare = report.decisiveGames
                                   ? static_cast<double>(report.stalemateWins) / report.decisiveGames
                                   : 0.0;
    return report;
}

}  // namespace vlab::stats
