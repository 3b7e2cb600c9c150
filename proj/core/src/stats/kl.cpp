#include "variantlab/stats/kl.hpp"

#include <algorithm>
#include <cmath>

#include "variantlab/errors.hpp"
#include "variantlab/fen.hpp"
#include "variantlab/lan.hpp"
#include "variantlab/rng.hpp"
#include "variantlab/stats/diversity.hpp"

namespace vlab::stats {

namespace {

// Same board seen through the other rule set.
Position reinterpret(const Position& p, const VariantConfig& variant) {
    Position q = p;
    q.variant = variant;
    return q;
}

bool sameMove(const Move& a, const Move& b) {
    return a.from.index() == b.from.index() && a.to.index() == b.to.index() &&
           a.promotion == b.promotion;
}

// Index of `m` in `legal`, matching by from/to/promotion (flags may differ
// between rule sets). Returns npos when absent.
std::size_t findMove(const MoveList& legal, const Move& m) {
    for (std::size_t i = 0; i < legal.size(); ++i)
        if (sameMove(legal[i], m)) return i;
    return static_cast<std::size_t>(-1);
}

[[noreturn]] void supportViolation(const Position& p, const Move& m) {
    throw Error(Errc::SupportViolation, "kl: move " + serializeLan(m) +
                                            " has zero probability under q at " + serializeFen(p));
}

}  // namespace

KlEstimate klDivergence(const PriorProvider& pPrior, const VariantConfig& variantP,
                        const PriorProvider& qPrior, const VariantConfig& variantQ, int maxPly,
                        int samples, std::uint64_t seed) {
    Rng rng(seed);
    Accumulator acc;
    for (int s = 0; s < samples; ++s) {
        Position pos = initialPosition(variantP);
        double logRatio = 0.0;
        for (int t = 0; t < maxPly; ++t) {
            MoveList pLegal = legalMoves(pos);
            if (pLegal.empty()) break;
            PriorEvaluation pEval = pPrior.evaluate(pos, pLegal);

            Position qPos = reinterpret(pos, variantQ);
            MoveList qLegal = legalMoves(qPos);
            PriorEvaluation qEval = qPrior.evaluate(qPos, qLegal);

            std::size_t pick = rng.categorical(pEval.probs);
            std::size_t qIdx = findMove(qLegal, pLegal[pick]);
            if (qIdx == static_cast<std::size_t>(-1) || qEval.probs[qIdx] <= 0.0)
                supportViolation(pos, pLegal[pick]);
            logRatio += std::log(pEval.probs[pick]) - std::log(qEval.probs[qIdx]);
            pos = applyMoveUnchecked(pos, pLegal[pick]);
        }
        acc.add(logRatio);
    }
    return {acc.mean(), acc.stderror(), acc.n};
}

namespace {

double klExactRec(const PriorProvider& pPrior, const VariantConfig& variantQ,
                  const PriorProvider& qPrior, const Position& pos, int depth) {
    if (depth == 0) return 0.0;
    MoveList pLegal = legalMoves(pos);
    if (pLegal.empty()) return 0.0;
    PriorEvaluation pEval = pPrior.evaluate(pos, pLegal);

    Position qPos = reinterpret(pos, variantQ);
    MoveList qLegal = legalMoves(qPos);
    PriorEvaluation qEval = qPrior.evaluate(qPos, qLegal);

    double d = 0.0;
    for (std::size_t i = 0; i < pLegal.size(); ++i) {
        if (pEval.probs[i] <= 0.0) continue;
        std::size_t qIdx = findMove(qLegal, pLegal[i]);
        if (qIdx == static_cast<std::size_t>(-1) || qEval.probs[qIdx] <= 0.0)
            supportViolation(pos, pLegal[i]);
        d += pEval.probs[i] * (std::log(pEval.probs[i]) - std::log(qEval.probs[qIdx]));
        d += pEval.probs[i] *
             klExactRec(pPrior, variantQ, qPrior, applyMoveUnchecked(pos, pLegal[i]), depth - 1);
    }
    return d;
}

}  // namespace

double klDivergenceExact(const PriorProvider& pPrior, const VariantConfig& variantP,
                         const PriorProvider& qPrior, const VariantConfig& variantQ, int maxPly) {
    return klExactRec(pPrior, variantQ, qPrior, initialPosition(variantP), maxPly);
}

}  // namespace vlab::stats
