#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "variantlab/position.hpp"

namespace vlab {

enum class GameState : std::uint8_t { Ongoing, WhiteWins, BlackWins, Draw };
enum class GameReason : std::uint8_t {
    None,
    Checkmate,
    Stalemate,
    FiftyMove,
    ThreefoldRepetition,
};

struct GameStatus {
    GameState state = GameState::Ongoing;
    GameReason reason = GameReason::None;

    bool ongoing() const { return state == GameState::Ongoing; }
    bool decisive() const {
        return state == GameState::WhiteWins || state == GameState::BlackWins;
    }

    friend bool operator==(const GameStatus&, const GameStatus&) = default;
};

std::string_view gameStateName(GameState s);   // "ongoing", "1-0", "0-1", "1/2-1/2"
std::string_view gameReasonName(GameReason r);

// `history` holds the repetition keys of all prior positions of the game
// (not including p itself). Mate and stalemate take precedence over the
// counting rules. Insufficient material is never adjudicated.
GameStatus status(const Position& p, std::span<const std::uint64_t> history = {});

}  // namespace vlab
