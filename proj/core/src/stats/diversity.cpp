#include "variantlab/stats/diversity.hpp"

#include "variantlab/errors.hpp"

namespace vlab::stats {

std::pair<double, double> entropyAndCandidates(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log(p);
    return {h, std::exp(h)};
}

std::pair<double, double> positionEntropy(const PriorProvider& prior, const Position& p) {
    PriorEvaluation eval = prior.evaluate(p);
    if (eval.probs.empty())
        throw Error(Errc::NoLegalMoves, "positionEntropy: terminal position");
    return entropyAndCandidates(eval.probs);
}

DiversityCurve diversityCurve(const PriorProvider& prior, const VariantConfig& variant, int maxPly,
                              int samples, std::uint64_t seed) {
    ChessPriorModel model{prior, variant};
    Rng rng(seed);
    return sampleDiversityCurve(model, maxPly, samples, rng);
}

}  // namespace vlab::stats
