#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace vlab {

enum class VariantId : std::uint8_t {
    Classical = 0,
    NoCastling,
    NoCastling10,
    PawnOneSquare,
    StalemateWin,
    Torpedo,
    SemiTorpedo,
    PawnBack,
    PawnSideways,
    SelfCapture,
};

constexpr int kVariantCount = 10;

constexpr std::array<VariantId, kVariantCount> allVariants() {
    return {VariantId::Classical,    VariantId::NoCastling,   VariantId::NoCastling10,
            VariantId::PawnOneSquare, VariantId::StalemateWin, VariantId::Torpedo,
            VariantId::SemiTorpedo,  VariantId::PawnBack,     VariantId::PawnSideways,
            VariantId::SelfCapture};
}

// How the halfmove clock reacts to pawn moves. Captures always reset it.
enum class PawnClockRule : std::uint8_t {
    AllPawnMoves,       // classical: any pawn move resets
    NonLateralPawnMoves,// Pawn-sideways: lateral moves do not reset
    Never,              // Pawn-back: only captures reset
};

// All fields are derived from the id; the struct exists so rule checks read
// off named properties instead of switching on the id everywhere.
struct VariantConfig {
    VariantId id = VariantId::Classical;
    int castlingBanPlies = 0;          // 20 for NoCastling10
    bool castlingAllowed = true;       // false for NoCastling
    bool doublePushAnywhere = false;   // Torpedo
    bool doublePushFromThird = false;  // SemiTorpedo (home rank + 1)
    bool doublePushFromHome = true;    // false for PawnOneSquare
    bool pawnBack = false;
    bool pawnSideways = false;
    bool selfCapture = false;
    bool stalemateIsWin = false;
    PawnClockRule pawnClockRule = PawnClockRule::AllPawnMoves;

    static VariantConfig make(VariantId id) {
        VariantConfig v;
        v.id = id;
        switch (id) {
            case VariantId::Classical: break;
            case VariantId::NoCastling: v.castlingAllowed = false; break;
            case VariantId::NoCastling10: v.castlingBanPlies = 20; break;
            case VariantId::PawnOneSquare: v.doublePushFromHome = false; break;
            case VariantId::StalemateWin: v.stalemateIsWin = true; break;
            case VariantId::Torpedo: v.doublePushAnywhere = true; break;
            case VariantId::SemiTorpedo: v.doublePushFromThird = true; break;
            case VariantId::PawnBack:
                v.pawnBack = true;
                v.pawnClockRule = PawnClockRule::Never;
                break;
            case VariantId::PawnSideways:
                v.pawnSideways = true;
                v.pawnClockRule = PawnClockRule::NonLateralPawnMoves;
                break;
            case VariantId::SelfCapture: v.selfCapture = true; break;
        }
        return v;
    }

    friend bool operator==(const VariantConfig& a, const VariantConfig& b) {
        return a.id == b.id;
    }
};

std::string_view variantName(VariantId id);
std::optional<VariantId> variantFromName(std::string_view name);

}  // namespace vlab
