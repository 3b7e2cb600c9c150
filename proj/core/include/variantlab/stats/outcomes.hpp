#pragma once

#include <cstdint>
#include <span>

#include "variantlab/game_record.hpp"

namespace vlab::stats {

struct OutcomeCounts {
    std::int64_t nWin = 0;   // White wins
    std::int64_t nDraw = 0;
    std::int64_t nLose = 0;  // White losses

    std::int64_t total() const { return nWin + nDraw + nLose; }
};

// Dirichlet posterior over (win, draw, lose) under a uniform prior.
struct OutcomePosterior {
    double alphaWin = 1.0, alphaDraw = 1.0, alphaLose = 1.0;

    static OutcomePosterior from(const OutcomeCounts& c) {
        return {static_cast<double>(c.nWin) + 1.0, static_cast<double>(c.nDraw) + 1.0,
                static_cast<double>(c.nLose) + 1.0};
    }
};

// Throws Errc::UnfinishedGame if any record is still ongoing.
OutcomeCounts countOutcomes(std::span<const GameRecord> games);

// Monte Carlo estimate of P(pi_draw^A < pi_draw^B) under the two posteriors.
double drawRateComparison(const OutcomeCounts& a, const OutcomeCounts& b, std::int64_t samples,
                          std::uint64_t seed);

// Monte Carlo estimate of P(e^A > e^B) with e = pi_win + pi_draw / 2.
double expectedScoreComparison(const OutcomeCounts& a, const OutcomeCounts& b,
                               std::int64_t samples, std::uint64_t seed);

// (nWin + nDraw / 2) / N. Requires N >= 1.
double empiricalExpectedScore(const OutcomeCounts& c);

}  // namespace vlab::stats
