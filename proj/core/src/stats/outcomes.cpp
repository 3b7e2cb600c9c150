#include "variantlab/stats/outcomes.hpp"

#include "variantlab/errors.hpp"
#include "variantlab/rng.hpp"

namespace vlab::stats {

OutcomeCounts countOutcomes(std::span<const GameRecord> games) {
    OutcomeCounts counts;
    for (const GameRecord& g : games) {
        switch (g.result.state) {
            case GameState::WhiteWins: ++counts.nWin; break;
            case GameState::BlackWins: ++counts.nLose; break;
            case GameState::Draw: ++counts.nDraw; break;
            case GameState::Ongoing:
                throw Error(Errc::UnfinishedGame, "countOutcomes: record is still ongoing");
        }
    }
    return counts;
}

namespace {

// Draws (pi_win, pi_draw, pi_lose) from the posterior of c.
std::array<double, 3> samplePosterior(const OutcomeCounts& c, Rng& rng) {
    OutcomePosterior post = OutcomePosterior::from(c);
    double gw = rng.gamma(post.alphaWin);
    double gd = rng.gamma(post.alphaDraw);
    double gl = rng.gamma(post.alphaLose);
    double total = gw + gd + gl;
    return {gw / total, gd / total, gl / total};
}

template <typename Statistic>
double comparisonProbability(const OutcomeCounts& a, const OutcomeCounts& b, std::int64_t samples,
                             std::uint64_t seed, Statistic favoursA) {
    Rng rng(seed);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        auto pa = samplePosterior(a, rng);
        auto pb = samplePosterior(b, rng);
        if (favoursA(pa, pb)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace

double drawRateComparison(const OutcomeCounts& a, const OutcomeCounts& b, std::int64_t samples,
                          std::uint64_t seed) {
    return comparisonProbability(a, b, samples, seed,
                                 [](const auto& pa, const auto& pb) { return pa[1] < pb[1]; });
}

double expectedScoreComparison(const OutcomeCounts& a, const OutcomeCounts& b,
                               std::int64_t samples, std::uint64_t seed) {
    auto score = [](const std::array<double, 3>& pi) { return pi[0] + 0.5 * pi[1]; };
    return comparisonProbability(
        a, b, samples, seed,
        [&](const auto& pa, const auto& pb) { return score(pa) > score(pb); });
}

double empiricalExpectedScore(const OutcomeCounts& c) {
    if (c.total() < 1)
        throw Error(Errc::DegenerateData, "empiricalExpectedScore: no games");
    return (static_cast<double>(c.nWin) + 0.5 * static_cast<double>(c.nDraw)) /
           static_cast<double>(c.total());
}

}  // namespace vlab::stats
