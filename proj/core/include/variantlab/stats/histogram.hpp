#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "variantlab/game_record.hpp"

namespace vlab::stats {

struct GameLengthHistogram {
    int bucketWidth = 10;
    std::vector<std::int64_t> all;       // bucket i covers [i*w, (i+1)*w) plies
    std::vector<std::int64_t> decisive;  // decisive games only
    std::int64_t games = 0;
};

// Requires bucketWidth >= 1.
GameLengthHistogram gameLengthHistogram(std::span<const GameRecord> games, int bucketWidth);

}  // namespace vlab::stats
