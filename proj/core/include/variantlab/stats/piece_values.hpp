#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "variantlab/game_record.hpp"

namespace vlab::stats {

// Feature vector d = [1, dP, dN, dB, dR, dQ]: material differences from the
// side to move's perspective. z is that side's final game outcome.
struct PieceValueSample {
    std::array<double, 6> features{};
    double outcome = 0.0;  // -1, 0 or 1
};

struct PieceValueModel {
    std::array<double, 6> weights{};     // bias, pawn, knight, bishop, rook, queen
    std::array<double, 4> normalized{};  // knight..queen divided by the pawn weight
    double finalLoss = 0.0;
    int iterations = 0;
    std::int64_t sampleCount = 0;
};

struct PositionFilter {
    int startPly = 20;        // skip the sampled-opening phase
    bool onePerGame = false;  // alternative sampling mode; picks one position per game
    std::uint64_t seed = 0;   // used by onePerGame
};

struct FitOptions {
    int maxIterations = 10000;
    double gradientTolerance = 1e-8;
    std::array<double, 6> initialWeights = {0.0, 0.05, 0.05, 0.05, 0.05, 0.05};
};

std::vector<PieceValueSample> extractPieceValueSamples(std::span<const GameRecord> games,
                                                       const PositionFilter& filter);

// Mean squared error between z and tanh(w . d), and its analytic gradient.
double pieceValueLoss(const std::array<double, 6>& w, std::span<const PieceValueSample> samples);
std::array<double, 6> pieceValueGradient(const std::array<double, 6>& w,
                                         std::span<const PieceValueSample> samples);

// Full-batch gradient descent with backtracking line search.
// Throws Errc::DegenerateData when no sample has a material difference and
// Errc::NonPositivePawn when the fitted pawn weight is not positive.
PieceValueModel fitPieceValueSamples(std::span<const PieceValueSample> samples,
                                     const FitOptions& options = {});

PieceValueModel fitPieceValues(std::span<const GameRecord> games, const PositionFilter& filter = {},
                               const FitOptions& options = {});

}  // namespace vlab::stats
