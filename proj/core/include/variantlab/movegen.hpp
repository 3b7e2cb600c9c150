#pragma once

#include <cstdint>
#include <vector>

#include "variantlab/position.hpp"
#include "variantlab/types.hpp"

namespace vlab {

using MoveList = std::vector<Move>;

// True if `sq` is attacked by a piece of color `by`. Capture geometry is the
// same in every variant (lateral/backward pawn moves are never captures).
bool isSquareAttacked(const Position& p, Square sq, Color by);

bool inCheck(const Position& p, Color c);

// Exactly the legal moves of p under its variant, in canonical order.
MoveList legalMoves(const Position& p);

bool hasLegalMove(const Position& p);

// Precondition: m came from legalMoves(p). No validation.
Position applyMoveUnchecked(const Position& p, const Move& m);

// Validates m against legalMoves(p); throws Error(Errc::IllegalMove) otherwise.
Position applyMove(const Position& p, const Move& m);

std::uint64_t perft(const Position& p, int depth);

}  // namespace vlab
