#include "variantlab/variant.hpp"

#include <algorithm>
#include <string>

namespace vlab {

namespace {
struct NameEntry {
    VariantId id;
    std::string_view name;
};

constexpr std::array<NameEntry, kVariantCount> kNames = {{
    {VariantId::Classical, "classical"},
    {VariantId::NoCastling, "nocastling"},
    {VariantId::NoCastling10, "nocastling10"},
    {VariantId::PawnOneSquare, "pawnonesquare"},
    {VariantId::StalemateWin, "stalematewin"},
    {VariantId::Torpedo, "torpedo"},
    {VariantId::SemiTorpedo, "semitorpedo"},
    {VariantId::PawnBack, "pawnback"},
    {VariantId::PawnSideways, "pawnsideways"},
    {VariantId::SelfCapture, "selfcapture"},
}};
}  // namespace

std::string_view variantName(VariantId id) {
    for (const auto& e : kNames)
        if (e.id == id) return e.name;
    return "classical";
}

std::optional<VariantId> variantFromName(std::string_view name) {
    // Accept hyphens and underscores as separators, e.g. "no-castling-10".
    std::string normalized;
    for (char c : name)
        if (c != '-' && c != '_')
            normalized.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (const auto& e : kNames)
        if (e.name == normalized) return e.id;
    return std::nullopt;
}

}  // namespace vlab
