#pragma once

#include <cstdint>

#include "variantlab/prior.hpp"

namespace vlab::stats {

struct KlEstimate {
    double nats = 0.0;
    double standardError = 0.0;
    std::int64_t sampleCount = 0;
};

// Monte Carlo estimate of D_KL[p || q] over move sequences of length <= maxPly
// sampled ancestrally from p. At every sampled state the legal moves of
// variantP must be a subset of variantQ's; a violation (or a zero q
// probability on a sampled move) throws Errc::SupportViolation naming the
// offending position and move.
KlEstimate klDivergence(const PriorProvider& pPrior, const VariantConfig& variantP,
                        const PriorProvider& qPrior, const VariantConfig& variantQ, int maxPly,
                        int samples, std::uint64_t seed);

// Exact tree-sum of the divergence, tractable at small depth only.
double klDivergenceExact(const PriorProvider& pPrior, const VariantConfig& variantP,
                         const PriorProvider& qPrior, const VariantConfig& variantQ, int maxPly);

}  // namespace vlab::stats
