#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "variantlab/prior.hpp"

namespace vlab::stats {

// Normalized supremum of two distributions over the same move list:
// r_i = max(p_i, q_i) / sum_j max(p_j, q_j).
std::vector<double> combinedPrior(std::span<const double> p, std::span<const double> q);

struct AdditionalPoint {
    double additional = 0.0;  // A_q(t); may be negative
    double standardError = 0.0;
    std::int64_t sampleCount = 0;
};

struct BoundCheckRecord {
    std::int64_t statesChecked = 0;
    std::int64_t violations = 0;   // m_r > m_p + m_q; a theorem, so always 0
    double minSlack = 0.0;         // min over states of m_p + m_q - m_r
};

struct AdditionalCandidatesCurve {
    std::vector<AdditionalPoint> perPly;  // index t-1 holds ply t
    BoundCheckRecord boundCheck;
};

// Samples states from pPrior's opening tree and reports how many additional
// candidate moves a player of qPrior would need to consider, per ply.
// Move lists of the two variants are aligned by from/to/promotion; qPrior's
// mass on moves illegal in variantP is kept (it only enlarges the union),
// while p pads with zeros. Throws Errc::SupportMismatch when the lists
// cannot be aligned.
AdditionalCandidatesCurve additionalCandidates(const PriorProvider& pPrior,
                                               const VariantConfig& variantP,
                                               const PriorProvider& qPrior,
                                               const VariantConfig& variantQ, int maxPly,
                                               int samples, std::uint64_t seed);

}  // namespace vlab::stats
