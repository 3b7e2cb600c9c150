#pragma once

#include <vector>

#include "variantlab/prior.hpp"

namespace vlab::stats {

// Ancestral-sampling view of a prior: a state, a distribution over the moves
// available there (empty when terminal), and a transition. The entropy, KL
// and candidate-move estimators are written against this shape so their math
// can be exercised on small synthetic trees as well as on real variants.
//
// Model requirements:
//   State initial() const;
//   std::vector<double> probs(const State&) const;   // empty iff terminal
//   State step(const State&, std::size_t moveIndex) const;
struct ChessPriorModel {
    const PriorProvider& prior;
    VariantConfig variant;

    Position initial() const { return initialPosition(variant); }

    std::vector<double> probs(const Position& p) const {
        return prior.evaluate(p).probs;
    }

    Position step(const Position& p, std::size_t moveIndex) const {
        MoveList legal = legalMoves(p);
        return applyMoveUnchecked(p, legal[moveIndex]);
    }
};

}  // namespace vlab::stats
