#include <doctest.h>

#include <algorithm>
#include <set>

#include "naive_rules.hpp"
#include "variantlab/errors.hpp"
#include "variantlab/fen.hpp"
#include "variantlab/lan.hpp"
#include "variantlab/movegen.hpp"
#include "variantlab/rng.hpp"
#include "variantlab/status.hpp"

using namespace vlab;

namespace {

std::vector<naive::SimpleMove> asTriples(const MoveList& moves) {
    std::vector<naive::SimpleMove> out;
    for (const Move& m : moves)
        out.push_back({m.from.index(), m.to.index(),
                       m.promotion ? static_cast<int>(*m.promotion) : -1});
    std::sort(out.begin(), out.end());
    return out;
}

// Random playout comparing the engine generator with the naive oracle at
// every visited position.
void playoutCompare(VariantId id, int games, int maxPlies, Rng& rng, int* positions = nullptr) {
    for (int g = 0; g < games; ++g) {
        Position pos = initialPosition(id);
        for (int ply = 0; ply < maxPlies; ++ply) {
            MoveList fast = legalMoves(pos);
            std::vector<naive::SimpleMove> slow = naive::legalMoves(pos);
            REQUIRE_MESSAGE(asTriples(fast) == slow,
                            "generator mismatch at " << serializeFen(pos));
            if (positions) ++*positions;
            if (fast.empty() || pos.halfmoveClock >= 100) break;
            pos = applyMoveUnchecked(pos, fast[rng.below(fast.size())]);
        }
    }
}

}  // namespace

TEST_CASE("variant names round-trip") {
    for (VariantId id : allVariants()) {
        auto back = variantFromName(variantName(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(variantFromName("No-Castling") == VariantId::NoCastling);
    CHECK(variantFromName("pawn_sideways") == VariantId::PawnSideways);
    CHECK_FALSE(variantFromName("antichess").has_value());
}

TEST_CASE("initial-position move counts") {
    CHECK(legalMoves(initialPosition(VariantId::Classical)).size() == 20);
    CHECK(legalMoves(initialPosition(VariantId::PawnOneSquare)).size() == 12);
    // 20 regular moves plus 19 self-captures (8 pawn diagonals onto knights/
    // bishops/rooks minus blocked ones, knights onto pawns, etc.), counted by
    // the naive oracle.
    CHECK(legalMoves(initialPosition(VariantId::SelfCapture)).size() == 39);
    CHECK(naive::legalMoves(initialPosition(VariantId::SelfCapture)).size() == 39);
}

TEST_CASE("classical perft 1-4 against frozen and naive counts") {
    Position p = initialPosition(VariantId::Classical);
    CHECK(perft(p, 1) == 20);
    CHECK(perft(p, 2) == 400);
    CHECK(perft(p, 3) == 8902);
    CHECK(perft(p, 4) == 197281);
    CHECK(naive::perft(p, 3) == 8902);
}

TEST_CASE("variant perft 2-3 against the naive oracle") {
    for (VariantId id : allVariants()) {
        Position p = initialPosition(id);
        CAPTURE(variantName(id));
        CHECK(perft(p, 2) == naive::perft(p, 2));
        if (id != VariantId::SelfCapture)  // depth 3 is 63k nodes there; done in acceptance
            CHECK(perft(p, 3) == naive::perft(p, 3));
    }
    // Frozen oracle values so a regression is loud even if both generators drift.
    CHECK(perft(initialPosition(VariantId::Torpedo), 3) == 9194);
    CHECK(perft(initialPosition(VariantId::SemiTorpedo), 3) == 9054);
    CHECK(perft(initialPosition(VariantId::PawnBack), 3) == 9222);
    CHECK(perft(initialPosition(VariantId::PawnSideways), 3) == 10022);
    CHECK(perft(initialPosition(VariantId::SelfCapture), 2) == 1519);
}

TEST_CASE("generator equivalence on random playouts") {
    Rng rng(0xfeedface);
    for (VariantId id : allVariants()) {
        CAPTURE(variantName(id));
        playoutCompare(id, 6, 60, rng);
    }
}

TEST_CASE("stalemate-win study: the pawn endgame flips result") {
    // King and pawn vs king: Kf6-e6 stalemates Black.
    Position p = parseFen("4k3/4P3/5K2/8/8/8/8/8 w - - 0 1 variant=stalematewin");
    Move ke6 = parseLan("f6e6", p);
    Position after = applyMoveUnchecked(p, ke6);
    GameStatus st = status(after);
    CHECK(st.state == GameState::WhiteWins);
    CHECK(st.reason == GameReason::Stalemate);

    Position classical = parseFen("4k3/4P3/5K2/8/8/8/8/8 w - - 0 1");
    GameStatus st2 = status(applyMoveUnchecked(classical, parseLan("f6e6", classical)));
    CHECK(st2.state == GameState::Draw);
    CHECK(st2.reason == GameReason::Stalemate);
}

TEST_CASE("self-capture study: clearing the promotion square") {
    Position p = parseFen("1b6/1P6/8/5B2/3k4/8/6K1/8 w - - 0 1 variant=selfcapture");
    // Bring the bishop to c8, then the b-pawn takes its own bishop and promotes.
    Move bc8 = parseLan("f5c8", p);
    Position p2 = applyMoveUnchecked(p, bc8);
    // Black must move; pick any legal reply.
    MoveList replies = legalMoves(p2);
    REQUIRE_FALSE(replies.empty());
    Position p3 = applyMoveUnchecked(p2, replies.front());
    Move take = parseLan("b7c8q", p3);
    CHECK(take.is(moveflag::SelfCapture));
    CHECK(take.promotion == PieceKind::Queen);
    Position p4 = applyMoveUnchecked(p3, take);
    CHECK(p4.at(Square(2, 7)) == Piece{Color::White, PieceKind::Queen});
}

TEST_CASE("pawn-sideways study: the b-pawn escapes the rook") {
    Position p = parseFen("8/1P6/8/8/3k1K2/1r6/8/8 w - - 0 1 variant=pawnsideways");
    MoveList moves = legalMoves(p);
    auto has = [&](const char* lan) {
        return std::any_of(moves.begin(), moves.end(),
                           [&](const Move& m) { return serializeLan(m) == lan; });
    };
    CHECK(has("b7a7"));
    CHECK(has("b7c7"));

    // After b7c7 Rb3c3 c7d7 the pawn promotes within 6 plies whatever Black
    // tries: prove it by exhaustive search.
    Position line = p;
    for (const char* lan : {"b7c7", "b3c3", "c7d7"})
        line = applyMoveUnchecked(line, parseLan(lan, line));

    // White to prove promotion in <= depth plies against any defence.
    auto promotes = [](auto&& self, const Position& pos, int depth) -> bool {
        if (depth <= 0) return false;
        MoveList lm = legalMoves(pos);
        if (pos.sideToMove == Color::White) {
            for (const Move& m : lm) {
                if (m.promotion) return true;
                if (self(self, applyMoveUnchecked(pos, m), depth - 1)) return true;
            }
            return false;
        }
        if (lm.empty()) return false;
        for (const Move& m : lm)
            if (!self(self, applyMoveUnchecked(pos, m), depth - 1)) return false;
        return true;
    };
    CHECK(promotes(promotes, line, 6));
}

TEST_CASE("torpedo study: double-push promotion") {
    Position p = parseFen("8/8/1P6/8/8/2k5/8/6K1 w - - 0 1 variant=torpedo");
    Move m = parseLan("b6b8q", p);
    CHECK(m.is(moveflag::DoublePush));
    CHECK(m.promotion == PieceKind::Queen);
    Position q = applyMoveUnchecked(p, m);
    CHECK(q.at(Square(1, 7)) == Piece{Color::White, PieceKind::Queen});
    REQUIRE(q.epTarget.has_value());
    CHECK(q.epTarget->name() == "b7");
}

TEST_CASE("torpedo en passant removes the promoted piece") {
    // White double-pushes b6-b8=Q; the black c7 pawn may take en passant on b7,
    // which removes the freshly promoted queen from b8.
    Position w = parseFen("8/2p5/1P6/8/8/2k5/8/6K1 w - - 0 1 variant=torpedo");
    Position afterPush = applyMoveUnchecked(w, parseLan("b6b8q", w));
    Move ep = parseLan("c7b7", afterPush);
    CHECK(ep.is(moveflag::EnPassant));
    Position done = applyMoveUnchecked(afterPush, ep);
    CHECK(done.empty(Square(1, 7)));                                   // queen gone
    CHECK(done.at(Square(1, 6)) == Piece{Color::Black, PieceKind::Pawn});
}

TEST_CASE("torpedo en passant exists exactly one ply") {
    Position p = parseFen("8/8/8/2p5/8/1P6/2k5/6K1 w - - 0 1 variant=torpedo");
    Position pushed = applyMoveUnchecked(p, parseLan("b3b5", p));
    MoveList now = legalMoves(pushed);
    CHECK(std::any_of(now.begin(), now.end(),
                      [](const Move& m) { return m.is(moveflag::EnPassant); }));
    Position later = applyMoveUnchecked(pushed, parseLan("c2d2", pushed));
    Position later2 = applyMoveUnchecked(later, parseLan("g1g2", later));
    MoveList gone = legalMoves(later2);
    CHECK(std::none_of(gone.begin(), gone.end(),
                       [](const Move& m) { return m.is(moveflag::EnPassant); }));
}

TEST_CASE("no-castling-10 unlocks at ply 20") {
    // King and rooks home, castling squares clear, 19 plies played.
    Position early = parseFen(
        "r3k2r/8/8/8/8/8/8/R3K2R b KQkq - 0 10 variant=nocastling10 plies=19");
    MoveList mb = legalMoves(early);
    CHECK(std::none_of(mb.begin(), mb.end(), [](const Move& m) {
        return m.is(moveflag::CastleShort | moveflag::CastleLong);
    }));
    // One ply later White may castle.
    Position after = applyMoveUnchecked(early, parseLan("h8h7", early));
    CHECK(after.pliesPlayed() == 20);
    MoveList mw = legalMoves(after);
    CHECK(std::any_of(mw.begin(), mw.end(),
                      [](const Move& m) { return m.is(moveflag::CastleShort); }));
    // In plain no-castling it never unlocks.
    Position never = parseFen("r3k2r/8/8/8/8/8/8/R3K2R w KQkq - 0 40 variant=nocastling");
    MoveList mn = legalMoves(never);
    CHECK(std::none_of(mn.begin(), mn.end(), [](const Move& m) {
        return m.is(moveflag::CastleShort | moveflag::CastleLong);
    }));
}

TEST_CASE("status counting rules") {
    Position p = initialPosition(VariantId::Classical);
    p.halfmoveClock = 100;
    GameStatus st = status(p);
    CHECK(st.state == GameState::Draw);
    CHECK(st.reason == GameReason::FiftyMove);

    // Knight shuffles to a threefold.
    Position q = initialPosition(VariantId::Classical);
    std::vector<std::uint64_t> history;
    const char* shuffle[] = {"g1f3", "g8f6", "f3g1", "f6g8",
                             "g1f3", "g8f6", "f3g1", "f6g8"};
    GameStatus last{};
    for (const char* lan : shuffle) {
        history.push_back(repetitionKey(q));
        q = applyMoveUnchecked(q, parseLan(lan, q));
        last = status(q, history);
    }
    CHECK(last.state == GameState::Draw);
    CHECK(last.reason == GameReason::ThreefoldRepetition);
}

TEST_CASE("repetition keys ignore counters but see en passant and castling") {
    Position a = initialPosition(VariantId::Classical);
    Position b = a;
    b.halfmoveClock = 30;
    b.fullmoveNumber = 16;
    CHECK(repetitionKey(a) == repetitionKey(b));

    Position c = a;
    c.epTarget = Square(4, 2);
    CHECK(repetitionKey(a) != repetitionKey(c));

    Position d = a;
    d.castlingRights = 0;
    CHECK(repetitionKey(a) != repetitionKey(d));
}

TEST_CASE("pawn-back fifty-move clock only resets on captures") {
    Position p = parseFen("4k3/8/8/8/4P3/8/8/4K3 w - - 12 30 variant=pawnback");
    Position q = applyMoveUnchecked(p, parseLan("e4e5", p));
    CHECK(q.halfmoveClock == 13);  // forward pawn move does not reset
    Position r = parseFen("4k3/8/8/3p4/4P3/8/8/4K3 w - - 12 30 variant=pawnback");
    Position s = applyMoveUnchecked(r, parseLan("e4d5", r));
    CHECK(s.halfmoveClock == 0);
}

TEST_CASE("pawn-sideways lateral moves keep the clock, pushes reset it") {
    Position p = parseFen("4k3/8/8/8/4P3/8/8/4K3 w - - 7 30 variant=pawnsideways");
    CHECK(applyMoveUnchecked(p, parseLan("e4d4", p)).halfmoveClock == 8);
    CHECK(applyMoveUnchecked(p, parseLan("e4e5", p)).halfmoveClock == 0);
}

TEST_CASE("move-adding variants are supersets of classical") {
    Rng rng(0xab5u);
    Position pos = initialPosition(VariantId::Classical);
    for (int ply = 0; ply < 120; ++ply) {
        MoveList base = legalMoves(pos);
        if (base.empty()) break;
        std::set<std::string> baseLan;
        for (const Move& m : base) baseLan.insert(serializeLan(m));

        for (VariantId super : {VariantId::Torpedo, VariantId::SemiTorpedo, VariantId::PawnBack,
                                VariantId::PawnSideways, VariantId::SelfCapture,
                                VariantId::StalemateWin}) {
            Position alt = pos;
            alt.variant = VariantConfig::make(super);
            std::set<std::string> superLan;
            for (const Move& m : legalMoves(alt)) superLan.insert(serializeLan(m));
            for (const std::string& lan : baseLan)
                REQUIRE_MESSAGE(superLan.count(lan) == 1, variantName(super)
                                                              << " lost " << lan << " at "
                                                              << serializeFen(pos));
        }
        // And the restricting variants are subsets.
        for (VariantId sub : {VariantId::NoCastling, VariantId::PawnOneSquare}) {
            Position alt = pos;
            alt.variant = VariantConfig::make(sub);
            for (const Move& m : legalMoves(alt))
                REQUIRE(baseLan.count(serializeLan(m)) == 1);
        }
        pos = applyMoveUnchecked(pos, base[rng.below(base.size())]);
    }
}

TEST_CASE("lateral and backward pawn moves never capture or leave bounds") {
    Rng rng(0x51dee);
    for (VariantId id : {VariantId::PawnBack, VariantId::PawnSideways}) {
        for (int g = 0; g < 4; ++g) {
            Position pos = initialPosition(id);
            for (int ply = 0; ply < 150; ++ply) {
                MoveList moves = legalMoves(pos);
                if (moves.empty()) break;
                for (const Move& m : moves) {
                    if (m.is(moveflag::Lateral)) {
                        CHECK(m.from.rank == m.to.rank);
                        CHECK(pos.empty(m.to));
                    }
                    if (m.is(moveflag::Backward)) {
                        CHECK(pos.empty(m.to));
                        CHECK(m.to.rank >= 1);
                        CHECK(m.to.rank <= 6);
                    }
                }
                pos = applyMoveUnchecked(pos, moves[rng.below(moves.size())]);
            }
        }
    }
}

TEST_CASE("kings are never left en prise, even to self-capture geometry") {
    Rng rng(0x715);
    for (VariantId id : allVariants()) {
        Position pos = initialPosition(id);
        for (int ply = 0; ply < 80; ++ply) {
            MoveList moves = legalMoves(pos);
            if (moves.empty()) break;
            for (const Move& m : moves) {
                Position next = applyMoveUnchecked(pos, m);
                REQUIRE_FALSE(inCheck(next, pos.sideToMove));
                // Never capture a king of either colour.
                CHECK(next.kingSquare(Color::White).valid());
                CHECK(next.kingSquare(Color::Black).valid());
            }
            pos = applyMoveUnchecked(pos, moves[rng.below(moves.size())]);
        }
    }
}

TEST_CASE("applyMove rejects foreign moves") {
    Position p = initialPosition(VariantId::Classical);
    Move bogus{Square(4, 1), Square(4, 5), std::nullopt, 0};
    CHECK_THROWS_AS(applyMove(p, bogus), Error);
    try {
        applyMove(p, bogus);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IllegalMove);
    }
    CHECK_NOTHROW(applyMove(p, parseLan("e2e4", p)));
}

TEST_CASE("replaying a random move sequence reproduces the position bit for bit") {
    Rng rng(0xde17a);
    for (VariantId id : allVariants()) {
        Position pos = initialPosition(id);
        std::vector<Move> played;
        for (int ply = 0; ply < 90; ++ply) {
            MoveList moves = legalMoves(pos);
            if (moves.empty()) break;
            Move m = moves[rng.below(moves.size())];
            played.push_back(m);
            pos = applyMoveUnchecked(pos, m);
        }
        Position replay = initialPosition(id);
        for (const Move& m : played) replay = applyMoveUnchecked(replay, m);
        CHECK(replay == pos);
        CHECK(serializeFen(replay) == serializeFen(pos));
    }
}
