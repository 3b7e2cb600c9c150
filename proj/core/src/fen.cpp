#include "variantlab/fen.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "variantlab/errors.hpp"
#include "variantlab/movegen.hpp"

namespace vlab {

namespace {

[[noreturn]] void syntax(const std::string& msg) { throw Error(Errc::Syntax, "fen: " + msg); }
[[noreturn]] void illegal(const std::string& msg) {
    throw Error(Errc::IllegalPosition, "fen: " + msg);
}

std::optional<Piece> pieceFromChar(char c) {
    Color color = std::isupper(static_cast<unsigned char>(c)) ? Color::White : Color::Black;
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'p': return Piece{color, PieceKind::Pawn};
        case 'n': return Piece{color, PieceKind::Knight};
        case 'b': return Piece{color, PieceKind::Bishop};
        case 'r': return Piece{color, PieceKind::Rook};
        case 'q': return Piece{color, PieceKind::Queen};
        case 'k': return Piece{color, PieceKind::King};
        default: return std::nullopt;
    }
}

char pieceToChar(Piece p) {
    char c = "pnbrqk"[static_cast<int>(p.kind)];
    return p.color == Color::White ? static_cast<char>(std::toupper(c)) : c;
}

int parseInt(std::string_view s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
        syntax(std::string("bad ") + what + " field '" + std::string(s) + "'");
    return value;
}

std::optional<Square> parseSquare(std::string_view s) {
    if (s.size() != 2 || s[0] < 'a' || s[0] > 'h' || s[1] < '1' || s[1] > '8')
        return std::nullopt;
    return Square(s[0] - 'a', s[1] - '1');
}

void validate(const Position& p) {
    int kings[2] = {0, 0};
    for (int i = 0; i < 64; ++i) {
        auto pc = p.at(Square::fromIndex(i));
        if (!pc) continue;
        if (pc->kind == PieceKind::King) ++kings[static_cast<int>(pc->color)];
        if (pc->kind == PieceKind::Pawn && (i < 8 || i >= 56))
            illegal("pawn on a promotion rank");
    }
    if (kings[0] != 1 || kings[1] != 1) illegal("each side needs exactly one king");
    if (inCheck(p, opponent(p.sideToMove))) illegal("side not to move is in check");
    if (p.halfmoveClock > 101) illegal("halfmove clock out of range");

    if (p.epTarget) {
        const VariantConfig& v = p.variant;
        if (!v.doublePushAnywhere && !v.doublePushFromThird && !v.doublePushFromHome)
            illegal("en passant target in a variant without double pushes");
        Square t = *p.epTarget;
        if (!p.empty(t)) illegal("en passant target square is occupied");
        Color prev = opponent(p.sideToMove);
        int prevFwd = prev == Color::White ? 1 : -1;
        int destRank = t.rank + prevFwd;
        if (destRank < 0 || destRank > 7) illegal("en passant target off the board");
        auto dest = p.at(Square(t.file, destRank));
        if (!dest || dest->color != prev)
            illegal("no piece behind the en passant target");
        int skipped = prev == Color::White ? t.rank : 7 - t.rank;
        if (v.doublePushAnywhere) {
            if (skipped < 1 || skipped > 6) illegal("en passant target rank");
        } else if (v.doublePushFromThird) {
            if (skipped != 2 && skipped != 3) illegal("en passant target rank");
        } else {
            if (skipped != 2) illegal("en passant target rank");
            if (dest->kind != PieceKind::Pawn) illegal("no pawn behind the en passant target");
        }
    }
}

}  // namespace

Position parseFen(std::string_view text, std::optional<VariantId> expected) {
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) tokens.push_back(tok);
    }
    std::optional<VariantId> variantTok;
    std::optional<int> pliesTok;
    while (!tokens.empty() && tokens.back().find('=') != std::string::npos) {
        const std::string& tok = tokens.back();
        auto eq = tok.find('=');
        std::string keyName = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (keyName == "variant") {
            variantTok = variantFromName(value);
            if (!variantTok) syntax("unknown variant '" + value + "'");
        } else if (keyName == "plies") {
            pliesTok = parseInt(value, "plies");
        } else {
            syntax("unknown extension field '" + keyName + "'");
        }
        tokens.pop_back();
    }
    if (tokens.size() < 2) syntax("expected at least board and side-to-move fields");
    if (tokens.size() > 6) syntax("too many fields");

    VariantId id = variantTok.value_or(VariantId::Classical);
    if (expected && variantTok && *variantTok != *expected)
        throw Error(Errc::VariantMismatch,
                    "fen declares variant '" + std::string(variantName(*variantTok)) +
                        "' but '" + std::string(variantName(*expected)) + "' was expected");
    if (expected && !variantTok) id = *expected;

    Position p;
    p.variant = VariantConfig::make(id);
    p.castlingRights = 0;

    // Board
    {
        int rank = 7, file = 0;
        for (char c : tokens[0]) {
            if (c == '/') {
                if (file != 8) syntax("rank with wrong square count");
                --rank;
                file = 0;
                if (rank < 0) syntax("too many ranks");
            } else if (c >= '1' && c <= '8') {
                file += c - '0';
                if (file > 8) syntax("rank overflow");
            } else if (auto pc = pieceFromChar(c)) {
                if (file > 7) syntax("rank overflow");
                p.set(Square(file, rank), *pc);
                ++file;
            } else {
                syntax(std::string("bad board character '") + c + "'");
            }
        }
        if (rank != 0 || file != 8) syntax("board does not describe 8 ranks");
    }

    if (tokens[1] == "w")
        p.sideToMove = Color::White;
    else if (tokens[1] == "b")
        p.sideToMove = Color::Black;
    else
        syntax("side to move must be 'w' or 'b'");

    if (tokens.size() > 2 && tokens[2] != "-") {
        for (char c : tokens[2]) {
            switch (c) {
                case 'K': p.castlingRights |= castling::WhiteShort; break;
                case 'Q': p.castlingRights |= castling::WhiteLong; break;
                case 'k': p.castlingRights |= castling::BlackShort; break;
                case 'q': p.castlingRights |= castling::BlackLong; break;
                default: syntax("bad castling field");
            }
        }
    }
    // Drop rights whose king or rook is no longer on its home square.
    auto pieceAt = [&](int f, int r, PieceKind k, Color c) {
        auto occ = p.at(Square(f, r));
        return occ && occ->kind == k && occ->color == c;
    };
    if (!pieceAt(4, 0, PieceKind::King, Color::White))
        p.castlingRights &= ~(castling::WhiteShort | castling::WhiteLong);
    if (!pieceAt(7, 0, PieceKind::Rook, Color::White)) p.castlingRights &= ~castling::WhiteShort;
    if (!pieceAt(0, 0, PieceKind::Rook, Color::White)) p.castlingRights &= ~castling::WhiteLong;
    if (!pieceAt(4, 7, PieceKind::King, Color::Black))
        p.castlingRights &= ~(castling::BlackShort | castling::BlackLong);
    if (!pieceAt(7, 7, PieceKind::Rook, Color::Black)) p.castlingRights &= ~castling::BlackShort;
    if (!pieceAt(0, 7, PieceKind::Rook, Color::Black)) p.castlingRights &= ~castling::BlackLong;

    if (tokens.size() > 3 && tokens[3] != "-") {
        auto sq = parseSquare(tokens[3]);
        if (!sq) syntax("bad en passant field '" + tokens[3] + "'");
        p.epTarget = *sq;
    }
    if (tokens.size() > 4) p.halfmoveClock = parseInt(tokens[4], "halfmove clock");
    if (tokens.size() > 5) {
        p.fullmoveNumber = parseInt(tokens[5], "fullmove number");
        if (p.fullmoveNumber < 1) syntax("fullmove number must be >= 1");
    }
    if (pliesTok) {
        int parity = p.sideToMove == Color::Black ? 1 : 0;
        if (*pliesTok % 2 != parity) syntax("plies field disagrees with side to move");
        p.fullmoveNumber = *pliesTok / 2 + 1;
    }

    validate(p);
    return p;
}

std::string serializeFen(const Position& p) {
    std::string out;
    for (int rank = 7; rank >= 0; --rank) {
        int run = 0;
        for (int file = 0; file < 8; ++file) {
            auto pc = p.at(Square(file, rank));
            if (!pc) {
                ++run;
                continue;
            }
            if (run) out += static_cast<char>('0' + run);
            run = 0;
            out += pieceToChar(*pc);
        }
        if (run) out += static_cast<char>('0' + run);
        if (rank) out += '/';
    }
    out += p.sideToMove == Color::White ? " w " : " b ";
    if (p.castlingRights == 0) {
        out += '-';
    } else {
        if (p.castlingRights & castling::WhiteShort) out += 'K';
        if (p.castlingRights & castling::WhiteLong) out += 'Q';
        if (p.castlingRights & castling::BlackShort) out += 'k';
        if (p.castlingRights & castling::BlackLong) out += 'q';
    }
    out += ' ';
    out += p.epTarget ? p.epTarget->name() : "-";
    out += ' ' + std::to_string(p.halfmoveClock) + ' ' + std::to_string(p.fullmoveNumber);
    out += " variant=" + std::string(variantName(p.variant.id));
    if (p.variant.id == VariantId::NoCastling10)
        out += " plies=" + std::to_string(p.pliesPlayed());
    return out;
}

}  // namespace vlab
