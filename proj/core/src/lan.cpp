#include "variantlab/lan.hpp"

#include <cctype>

#include "variantlab/errors.hpp"

namespace vlab {

std::string serializeLan(const Move& m) {
    std::string out = m.from.name() + m.to.name();
    if (m.promotion) out += "pnbrqk"[static_cast<int>(*m.promotion)];
    return out;
}

Move parseLan(std::string_view text, const Position& p) {
    if (text.size() < 4 || text.size() > 5)
        throw Error(Errc::Syntax, "lan: bad move text '" + std::string(text) + "'");
    auto square = [&](std::string_view s) -> Square {
        if (s[0] < 'a' || s[0] > 'h' || s[1] < '1' || s[1] > '8')
            throw Error(Errc::Syntax, "lan: bad square in '" + std::string(text) + "'");
        return Square(s[0] - 'a', s[1] - '1');
    };
    Square from = square(text.substr(0, 2));
    Square to = square(text.substr(2, 2));
    std::optional<PieceKind> promo;
    if (text.size() == 5) {
        switch (std::tolower(static_cast<unsigned char>(text[4]))) {
            case 'n': promo = PieceKind::Knight; break;
            case 'b': promo = PieceKind::Bishop; break;
            case 'r': promo = PieceKind::Rook; break;
            case 'q': promo = PieceKind::Queen; break;
            default: throw Error(Errc::Syntax, "lan: bad promotion in '" + std::string(text) + "'");
        }
    }
    for (const Move& m : legalMoves(p))
        if (m.from == from && m.to == to && m.promotion == promo) return m;
    throw Error(Errc::IllegalMove, "lan: '" + std::string(text) + "' is not legal here");
}

}  // namespace vlab
