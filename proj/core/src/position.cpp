#include "variantlab/position.hpp"

#include <array>

namespace vlab {

namespace {

constexpr std::array<PieceKind, 8> kBackRank = {
    PieceKind::Rook, PieceKind::Knight, PieceKind::Bishop, PieceKind::Queen,
    PieceKind::King, PieceKind::Bishop, PieceKind::Knight, PieceKind::Rook};

constexpr std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct ZobristTable {
    std::uint64_t pieceSquare[12][64];
    std::uint64_t blackToMove;
    std::uint64_t castlingRights[16];
    std::uint64_t epSquare[64];
    std::uint64_t castlingBanActive;

    ZobristTable() {
        std::uint64_t state = 0x5eedc0de5eedc0deull;
        for (auto& piece : pieceSquare)
            for (auto& sq : piece) sq = splitmix64(state);
        blackToMove = splitmix64(state);
        for (auto& r : castlingRights) r = splitmix64(state);
        for (auto& e : epSquare) e = splitmix64(state);
        castlingBanActive = splitmix64(state);
    }
};

const ZobristTable& zobrist() {
    static const ZobristTable table;
    return table;
}

}  // namespace

Position initialPosition(const VariantConfig& variant) {
    Position p;
    p.variant = variant;
    for (int f = 0; f < 8; ++f) {
        p.set(Square(f, 0), Piece{Color::White, kBackRank[f]});
        p.set(Square(f, 1), Piece{Color::White, PieceKind::Pawn});
        p.set(Square(f, 6), Piece{Color::Black, PieceKind::Pawn});
        p.set(Square(f, 7), Piece{Color::Black, kBackRank[f]});
    }
    return p;
}

Position initialPosition(VariantId id) { return initialPosition(VariantConfig::make(id)); }

std::uint64_t repetitionKey(const Position& p) {
    const ZobristTable& z = zobrist();
    std::uint64_t key = 0;
    for (int i = 0; i < 64; ++i) {
        std::uint8_t c = p.board[i];
        if (c == 0) continue;
        int pieceIdx = ((c - 1) & 7) + (c >= 9 ? 6 : 0);
        key ^= z.pieceSquare[pieceIdx][i];
    }
    if (p.sideToMove == Color::Black) key ^= z.blackToMove;
    std::uint8_t effective = p.variant.castlingAllowed ? p.castlingRights : 0;
    key ^= z.castlingRights[effective];
    // Positions on either side of the NoCastling10 ban boundary have different
    // legal moves even when all other fields match.
    if (p.variant.castlingAllowed && !p.castlingCurrentlyAllowed()) key ^= z.castlingBanActive;
    if (p.epTarget) key ^= z.epSquare[p.epTarget->index()];
    return key;
}

}  // namespace vlab
