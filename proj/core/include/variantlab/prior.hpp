#pragma once

#include <array>
#include <memory>
#include <vector>

#include "variantlab/movegen.hpp"
#include "variantlab/position.hpp"

namespace vlab {

struct PriorEvaluation {
    std::vector<double> probs;  // aligned with the legal move list, sums to 1
    double value = 0.0;         // in [-1, 1] from the side to move's perspective
};

// The prior/value interface searched by the engine. Implementations must be
// safe to call from multiple threads concurrently.
class PriorProvider {
public:
    virtual ~PriorProvider() = default;

    // `legal` is legalMoves(p) in canonical order; probs align with it.
    // For a terminal position (empty `legal`) probs is empty and value is the
    // terminal value for the side to move.
    virtual PriorEvaluation evaluate(const Position& p, const MoveList& legal) const = 0;

    PriorEvaluation evaluate(const Position& p) const { return evaluate(p, legalMoves(p)); }
};

std::unique_ptr<PriorProvider> uniformPrior();

struct MaterialPriorConfig {
    // Pawn, knight, bishop, rook, queen weights in pawn units.
    std::array<double, 5> weights = {1.0, 3.0, 3.0, 5.0, 9.0};
    double valueScale = 0.2;    // value = tanh(valueScale * material difference)
    double softmaxScale = 1.0;  // move probs proportional to exp(scale * one-ply gain)
};

std::unique_ptr<PriorProvider> materialPrior(const MaterialPriorConfig& cfg = {});

// Terminal value for the side to move: -1 when mated (or stalemated under
// StalemateWin), 0 for a classical stalemate. Precondition: no legal moves.
double terminalValue(const Position& p);

// Signed material balance of p in pawn units, from the side to move's view.
double materialBalance(const Position& p, const std::array<double, 5>& weights);

}  // namespace vlab
