#pragma once

#include <string>
#include <string_view>

#include "variantlab/movegen.hpp"
#include "variantlab/position.hpp"

namespace vlab {

// Long algebraic notation: from square + to square + optional promotion
// letter, e.g. "e2e4", "b7b8q". Castling is written as the king move
// ("e1g1"). Flags are carried by the position, not the text.
std::string serializeLan(const Move& m);

// Resolves the text against legalMoves(p). Throws Errc::Syntax for malformed
// text and Errc::IllegalMove when no legal move matches.
Move parseLan(std::string_view text, const Position& p);

}  // namespace vlab
