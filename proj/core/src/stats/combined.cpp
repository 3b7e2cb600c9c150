#include "variantlab/stats/combined.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "variantlab/errors.hpp"
#include "variantlab/fen.hpp"
#include "variantlab/lan.hpp"
#include "variantlab/rng.hpp"
#include "variantlab/stats/diversity.hpp"

namespace vlab::stats {

std::vector<double> combinedPrior(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw Error(Errc::SupportMismatch, "combinedPrior: distributions differ in length");
    std::vector<double> r(p.size());
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = std::max(p[i], q[i]);
        total += r[i];
    }
    if (total <= 0.0)
        throw Error(Errc::DegenerateData, "combinedPrior: all-zero distributions");
    for (double& x : r) x /= total;
    return r;
}

namespace {

bool sameMove(const Move& a, const Move& b) {
    return a.from.index() == b.from.index() && a.to.index() == b.to.index() &&
           a.promotion == b.promotion;
}

// Pads the two distributions onto the union of the two move lists.
struct Aligned {
    std::vector<double> p, q;
};

Aligned alignOnUnion(const MoveList& pLegal, std::span<const double> pProbs,
                     const MoveList& qLegal, std::span<const double> qProbs,
                     const Position& where) {
    Aligned out;
    out.p.assign(pProbs.begin(), pProbs.end());
    out.q.assign(pLegal.size(), 0.0);
    for (std::size_t j = 0; j < qLegal.size(); ++j) {
        std::size_t hit = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < pLegal.size(); ++i) {
            if (!sameMove(pLegal[i], qLegal[j])) continue;
            if (hit != static_cast<std::size_t>(-1))
                throw Error(Errc::SupportMismatch, "additionalCandidates: ambiguous move " +
                                                       serializeLan(qLegal[j]) + " at " +
                                                       serializeFen(where));
            hit = i;
        }
        if (hit == static_cast<std::size_t>(-1)) {
            out.p.push_back(0.0);
            out.q.push_back(qProbs[j]);
        } else {
            out.q[hit] = qProbs[j];
        }
    }
    return out;
}

}  // namespace

AdditionalCandidatesCurve additionalCandidates(const PriorProvider& pPrior,
                                               const VariantConfig& variantP,
                                               const PriorProvider& qPrior,
                                               const VariantConfig& variantQ, int maxPly,
                                               int samples, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Accumulator> acc(maxPly);
    BoundCheckRecord bound;
    bound.minSlack = std::numeric_limits<double>::infinity();

    auto inspect = [&](const Position& pos, int plyIndex) {
        MoveList pLegal = legalMoves(pos);
        if (pLegal.empty()) return false;
        PriorEvaluation pEval = pPrior.evaluate(pos, pLegal);

        Position qPos = pos;
        qPos.variant = variantQ;
        MoveList qLegal = legalMoves(qPos);
        PriorEvaluation qEval = qPrior.evaluate(qPos, qLegal);

        Aligned aligned = alignOnUnion(pLegal, pEval.probs, qLegal, qEval.probs, pos);
        std::vector<double> r = combinedPrior(aligned.p, aligned.q);

        double mp = entropyAndCandidates(pEval.probs).second;
        double mq = qEval.probs.empty() ? 0.0 : entropyAndCandidates(qEval.probs).second;
        double mr = entropyAndCandidates(r).second;

        if (plyIndex >= 0) acc[plyIndex].add(mr - mp);
        // Appendix bound m_r <= m_p + m_q (with m_q >= 1 whenever q has moves).
        if (!qEval.probs.empty()) {
            ++bound.statesChecked;
            double slack = mp + mq - mr;
            if (slack < 0.0) ++bound.violations;
            bound.minSlack = std::min(bound.minSlack, slack);
        }
        return true;
    };

    for (int s = 0; s < samples; ++s) {
        Position pos = initialPosition(variantP);
        for (int t = 0; t < maxPly; ++t) {
            MoveList pLegal = legalMoves(pos);
            if (pLegal.empty()) break;
            PriorEvaluation pEval = pPrior.evaluate(pos, pLegal);
            std::size_t pick = rng.categorical(pEval.probs);
            pos = applyMoveUnchecked(pos, pLegal[pick]);
            if (!inspect(pos, t)) break;
        }
    }

    AdditionalCandidatesCurve curve;
    curve.perPly.resize(maxPly);
    for (int t = 0; t < maxPly; ++t)
        curve.perPly[t] = {acc[t].mean(), acc[t].stderror(), acc[t].n};
    if (bound.statesChecked == 0) bound.minSlack = 0.0;
    curve.boundCheck = bound;
    return curve;
}

}  // namespace vlab::stats
