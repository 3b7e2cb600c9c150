#include "variantlab/stats/piece_values.hpp"

#include <cmath>

#include "variantlab/errors.hpp"
#include "variantlab/fen.hpp"
#include "variantlab/movegen.hpp"
#include "variantlab/rng.hpp"

namespace vlab::stats {

namespace {

// d = [1, dP, dN, dB, dR, dQ] from the side to move's perspective.
std::array<double, 6> materialFeatures(const Position& p) {
    std::array<double, 6> d{};
    d[0] = 1.0;
    for (int i = 0; i < 64; ++i) {
        auto piece = p.at(Square::fromIndex(i));
        if (!piece || piece->kind == PieceKind::King) continue;
        double sign = piece->color == p.sideToMove ? 1.0 : -1.0;
        d[1 + static_cast<int>(piece->kind)] += sign;
    }
    return d;
}

double outcomeFor(Color sideToMove, const GameStatus& result) {
    switch (result.state) {
        case GameState::WhiteWins: return sideToMove == Color::White ? 1.0 : -1.0;
        case GameState::BlackWins: return sideToMove == Color::Black ? 1.0 : -1.0;
        case GameState::Draw: return 0.0;
        case GameState::Ongoing: break;
    }
    throw Error(Errc::UnfinishedGame, "piece values: record is still ongoing");
}

double dot(const std::array<double, 6>& w, const std::array<double, 6>& d) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += w[i] * d[i];
    return s;
}

}  // namespace

std::vector<PieceValueSample> extractPieceValueSamples(std::span<const GameRecord> games,
                                                       const PositionFilter& filter) {
    std::vector<PieceValueSample> samples;
    Rng rng(filter.seed);
    for (const GameRecord& g : games) {
        Position pos = parseFen(g.startFen, g.variant.id);
        std::vector<PieceValueSample> eligible;
        for (std::size_t ply = 0; ply < g.moves.size(); ++ply) {
            if (static_cast<int>(ply) >= filter.startPly)
                eligible.push_back({materialFeatures(pos), outcomeFor(pos.sideToMove, g.result)});
            pos = applyMoveUnchecked(pos, g.moves[ply]);
        }
        if (static_cast<int>(g.moves.size()) >= filter.startPly)
            eligible.push_back({materialFeatures(pos), outcomeFor(pos.sideToMove, g.result)});
        if (eligible.empty()) continue;
        if (filter.onePerGame)
            samples.push_back(eligible[rng.below(eligible.size())]);
        else
            samples.insert(samples.end(), eligible.begin(), eligible.end());
    }
    return samples;
}

double pieceValueLoss(const std::array<double, 6>& w, std::span<const PieceValueSample> samples) {
    double loss = 0.0;
    for (const PieceValueSample& s : samples) {
        double e = std::tanh(dot(w, s.features)) - s.outcome;
        loss += e * e;
    }
    return loss / static_cast<double>(samples.size());
}

std::array<double, 6> pieceValueGradient(const std::array<double, 6>& w,
                                         std::span<const PieceValueSample> samples) {
    std::array<double, 6> grad{};
    for (const PieceValueSample& s : samples) {
        double g = std::tanh(dot(w, s.features));
        // d/dw of (g - z)^2 with g = tanh(w.d): 2 (g - z) (1 - g^2) d
        double factor = 2.0 * (g - s.outcome) * (1.0 - g * g);
        for (int i = 0; i < 6; ++i) grad[i] += factor * s.features[i];
    }
    for (double& x : grad) x /= static_cast<double>(samples.size());
    return grad;
}

PieceValueModel fitPieceValueSamples(std::span<const PieceValueSample> samples,
                                     const FitOptions& options) {
    if (samples.empty())
        throw Error(Errc::DegenerateData, "piece values: no samples");
    bool anyMaterial = false;
    for (const PieceValueSample& s : samples)
        for (int i = 1; i < 6 && !anyMaterial; ++i)
            if (s.features[i] != 0.0) anyMaterial = true;
    if (!anyMaterial)
        throw Error(Errc::DegenerateData, "piece values: every sample has equal material");

    std::array<double, 6> w = options.initialWeights;
    double loss = pieceValueLoss(w, samples);
    double step = 1.0;
    int iter = 0;
    for (; iter < options.maxIterations; ++iter) {
        std::array<double, 6> grad = pieceValueGradient(w, samples);
        double gradNorm = std::sqrt(dot(grad, grad));
        if (gradNorm < options.gradientTolerance) break;

        // Backtracking line search on the steepest-descent direction.
        step = std::min(step * 2.0, 1e6);
        bool moved = false;
        while (step > 1e-18) {
            std::array<double, 6> trial;
            for (int i = 0; i < 6; ++i) trial[i] = w[i] - step * grad[i];
            double trialLoss = pieceValueLoss(trial, samples);
            if (trialLoss <= loss - 1e-4 * step * gradNorm * gradNorm) {
                w = trial;
                loss = trialLoss;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }

    PieceValueModel model;
    model.weights = w;
    model.finalLoss = loss;
    model.iterations = iter;
    model.sampleCount = static_cast<std::int64_t>(samples.size());
    // A vanishing pawn weight (all-draw data drives w to 0) makes the
    // normalization meaningless, so treat it the same as a negative one.
    if (w[1] <= 1e-6)
        throw Error(Errc::NonPositivePawn, "piece values: fitted pawn weight is not positive");
    for (int i = 0; i < 4; ++i) model.normalized[i] = w[2 + i] / w[1];
    return model;
}

PieceValueModel fitPieceValues(std::span<const GameRecord> games, const PositionFilter& filter,
                               const FitOptions& options) {
    std::vector<PieceValueSample> samples = extractPieceValueSamples(games, filter);
    return fitPieceValueSamples(samples, options);
}

}  // namespace vlab::stats
