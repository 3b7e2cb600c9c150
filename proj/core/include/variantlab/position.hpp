#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "variantlab/types.hpp"
#include "variantlab/variant.hpp"

namespace vlab {

namespace castling {
constexpr std::uint8_t WhiteShort = 1u << 0;
constexpr std::uint8_t WhiteLong  = 1u << 1;
constexpr std::uint8_t BlackShort = 1u << 2;
constexpr std::uint8_t BlackLong  = 1u << 3;
constexpr std::uint8_t All = WhiteShort | WhiteLong | BlackShort | BlackLong;
}  // namespace castling

// Immutable after construction by the public API; applyMove returns a new value.
struct Position {
    // 0 = empty, otherwise 1 + kind + 8 * color.
    std::array<std::uint8_t, 64> board{};
    Color sideToMove = Color::White;
    std::uint8_t castlingRights = castling::All;
    std::optional<Square> epTarget;  // the skipped square of the preceding double push
    int halfmoveClock = 0;
    int fullmoveNumber = 1;
    VariantConfig variant;

    std::optional<Piece> at(Square sq) const {
        std::uint8_t c = board[sq.index()];
        if (c == 0) return std::nullopt;
        return Piece{c >= 9 ? Color::Black : Color::White,
                     static_cast<PieceKind>((c - 1) & 7)};
    }

    bool empty(Square sq) const { return board[sq.index()] == 0; }

    void set(Square sq, std::optional<Piece> p) {
        board[sq.index()] =
            p ? static_cast<std::uint8_t>(1 + static_cast<int>(p->kind) +
                                          8 * static_cast<int>(p->color))
              : 0;
    }

    Square kingSquare(Color c) const {
        std::uint8_t code = static_cast<std::uint8_t>(1 + static_cast<int>(PieceKind::King) +
                                                      8 * static_cast<int>(c));
        for (int i = 0; i < 64; ++i)
            if (board[i] == code) return Square::fromIndex(i);
        return Square(-1, -1);
    }

    // Half-moves played since the start of the game, derived from the move counters.
    int pliesPlayed() const {
        return 2 * (fullmoveNumber - 1) + (sideToMove == Color::Black ? 1 : 0);
    }

    bool castlingCurrentlyAllowed() const {
        return variant.castlingAllowed && pliesPlayed() >= variant.castlingBanPlies;
    }

    friend bool operator==(const Position& a, const Position& b) {
        return a.board == b.board && a.sideToMove == b.sideToMove &&
               a.castlingRights == b.castlingRights && a.epTarget == b.epTarget &&
               a.halfmoveClock == b.halfmoveClock && a.fullmoveNumber == b.fullmoveNumber &&
               a.variant.id == b.variant.id;
    }
};

Position initialPosition(const VariantConfig& variant);
Position initialPosition(VariantId id);

// Zobrist key over board, side to move, effective castling rights and epTarget.
// Counters are excluded so repeated positions compare equal.
std::uint64_t repetitionKey(const Position& p);

}  // namespace vlab
