#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>

namespace vlab {

enum class Color : std::uint8_t { White = 0, Black = 1 };

constexpr Color opponent(Color c) {
    return c == Color::White ? Color::Black : Color::White;
}

enum class PieceKind : std::uint8_t { Pawn = 0, Knight, Bishop, Rook, Queen, King };

struct Piece {
    Color color;
    PieceKind kind;

    friend bool operator==(const Piece&, const Piece&) = default;
};

// 0..63, index = rank * 8 + file. Rank 0 is White's first rank.
struct Square {
    std::int8_t file = 0;
    std::int8_t rank = 0;

    constexpr Square() = default;
    constexpr Square(int f, int r) : file(static_cast<std::int8_t>(f)), rank(static_cast<std::int8_t>(r)) {}

    static constexpr Square fromIndex(int idx) { return Square(idx & 7, idx >> 3); }
    constexpr int index() const { return rank * 8 + file; }
    constexpr bool valid() const { return file >= 0 && file < 8 && rank >= 0 && rank < 8; }

    std::string name() const {
        return std::string{static_cast<char>('a' + file), static_cast<char>('1' + rank)};
    }

    friend bool operator==(const Square&, const Square&) = default;
    friend auto operator<=>(const Square& a, const Square& b) {
        return a.index() <=> b.index();
    }
};

namespace moveflag {
constexpr std::uint16_t Capture     = 1u << 0;
constexpr std::uint16_t SelfCapture = 1u << 1;
constexpr std::uint16_t DoublePush  = 1u << 2;
constexpr std::uint16_t EnPassant   = 1u << 3;
constexpr std::uint16_t CastleShort = 1u << 4;
constexpr std::uint16_t CastleLong  = 1u << 5;
constexpr std::uint16_t Lateral     = 1u << 6;
constexpr std::uint16_t Backward    = 1u << 7;
}  // namespace moveflag

struct Move {
    Square from;
    Square to;
    std::optional<PieceKind> promotion;
    std::uint16_t flags = 0;

    bool is(std::uint16_t f) const { return (flags & f) != 0; }
    bool isQuiet() const { return flags == 0 && !promotion; }

    friend bool operator==(const Move&, const Move&) = default;

    // Canonical ordering used everywhere a deterministic move order is needed.
    friend bool operator<(const Move& a, const Move& b) {
        auto key = [](const Move& m) {
            int promo = m.promotion ? static_cast<int>(*m.promotion) + 1 : 0;
            return std::make_tuple(m.from.index(), m.to.index(), promo, m.flags);
        };
        return key(a) < key(b);
    }
};

}  // namespace vlab
