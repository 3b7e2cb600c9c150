#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "variantlab/position.hpp"

namespace vlab {

// Extended FEN: the six standard fields, then "variant=<id>" and, for
// NoCastling10, "plies=<n>". Plain FEN parses as Classical.
//
// Throws Error with Errc::Syntax, Errc::IllegalPosition or
// Errc::VariantMismatch (when `expected` is given and disagrees with the text).
Position parseFen(std::string_view text, std::optional<VariantId> expected = std::nullopt);

std::string serializeFen(const Position& p);

}  // namespace vlab
