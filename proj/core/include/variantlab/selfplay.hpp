#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "variantlab/game_record.hpp"
#include "variantlab/search.hpp"

namespace vlab {

// One self-play game. The first cfg.softmaxPlies moves are sampled
// proportionally to the softmax of the visit counts; later moves take the
// argmax with the canonical move order as tie-break. Games hitting
// cfg.maxGamePlies are recorded as capped draws.
// Throws Errc::BadStart when startFen does not parse to a legal position of
// the variant.
GameRecord playGame(const VariantConfig& variant, const PriorProvider& prior,
                    const SearchConfig& cfg, const std::optional<std::string>& startFen = {},
                    bool recordVisits = false);

struct GenerateOptions {
    std::vector<std::string> openingFens;  // cycled through when non-empty
    int threads = 1;
    bool recordVisits = false;
    std::function<void(int done, int total)> progress;  // optional
};

// `count` records with per-game seeds derived from cfg.seed by counter.
// Output order is by game index, independent of scheduling.
std::vector<GameRecord> generateSet(const VariantConfig& variant, const PriorProvider& prior,
                                    const SearchConfig& cfg, int count,
                                    const GenerateOptions& options = {});

}  // namespace vlab
