#include "variantlab/stats/histogram.hpp"

#include "variantlab/errors.hpp"

namespace vlab::stats {

GameLengthHistogram gameLengthHistogram(std::span<const GameRecord> games, int bucketWidth) {
    if (bucketWidth < 1)
        throw Error(Errc::DegenerateData, "histogram: bucket width must be at least 1");
    GameLengthHistogram hist;
    hist.bucketWidth = bucketWidth;
    for (const GameRecord& g : games) {
        ++hist.games;
        std::size_t bucket = g.moves.size() / static_cast<std::size_t>(bucketWidth);
        if (bucket >= hist.all.size()) {
            hist.all.resize(bucket + 1, 0);
            hist.decisive.resize(bucket + 1, 0);
        }
        ++hist.all[bucket];
        if (g.result.state == GameState::WhiteWins || g.result.state == GameState::BlackWins)
            ++hist.decisive[bucket];
    }
    return hist;
}

}  // namespace vlab::stats
