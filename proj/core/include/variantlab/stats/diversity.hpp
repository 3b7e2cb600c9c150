#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "variantlab/prior.hpp"
#include "variantlab/rng.hpp"
#include "variantlab/stats/sequence_model.hpp"

namespace vlab::stats {

struct Accumulator {
    double sum = 0.0, sumSq = 0.0;
    std::int64_t n = 0;

    void add(double x) {
        sum += x;
        sumSq += x * x;
        ++n;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double stderror() const {
        if (n < 2) return 0.0;
        double m = mean();
        double var = (sumSq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
};

struct DiversityPoint {
    double entropy = 0.0;        // H(t), nats
    double entropySe = 0.0;
    std::int64_t entropyN = 0;   // sequences that reached ply t
    double candidates = 1.0;     // M(t)
    double candidatesSe = 0.0;
    std::int64_t candidatesN = 0;  // non-terminal states observed at ply t
};

struct DiversityCurve {
    std::vector<DiversityPoint> perPly;  // index t-1 holds ply t
};

// Shannon entropy in nats with 0 log 0 := 0, plus m = exp(H).
std::pair<double, double> entropyAndCandidates(std::span<const double> probs);

// H and m = exp(H) of the prior at a non-terminal position.
std::pair<double, double> positionEntropy(const PriorProvider& prior, const Position& p);

// Monte Carlo H(t) and M(t) over ancestral samples from the model's prior.
// Sequences that terminate early contribute only to the plies they reached.
template <typename Model>
DiversityCurve sampleDiversityCurve(const Model& model, int maxPly, int samples, Rng& rng) {
    std::vector<Accumulator> entropyAcc(maxPly), candidateAcc(maxPly);
    for (int s = 0; s < samples; ++s) {
        auto state = model.initial();
        double nll = 0.0;
        for (int t = 0; t < maxPly; ++t) {
            std::vector<double> probs = model.probs(state);
            if (probs.empty()) break;
            std::size_t pick = rng.categorical(probs);
            nll -= std::log(probs[pick]);
            state = model.step(state, pick);
            entropyAcc[t].add(nll);
            std::vector<double> nextProbs = model.probs(state);
            if (!nextProbs.empty())
                candidateAcc[t].add(entropyAndCandidates(nextProbs).second);
        }
    }
    DiversityCurve curve;
    curve.perPly.resize(maxPly);
    for (int t = 0; t < maxPly; ++t) {
        auto& pt = curve.perPly[t];
        pt.entropy = entropyAcc[t].mean();
        pt.entropySe = entropyAcc[t].stderror();
        pt.entropyN = entropyAcc[t].n;
        pt.candidates = candidateAcc[t].mean();
        pt.candidatesSe = candidateAcc[t].stderror();
        pt.candidatesN = candidateAcc[t].n;
    }
    return curve;
}

DiversityCurve diversityCurve(const PriorProvider& prior, const VariantConfig& variant, int maxPly,
                              int samples, std::uint64_t seed);

// Exact H(t) by full tree enumeration; tractable only at small depth.
template <typename Model, typename State>
double exactSequenceEntropy(const Model& model, const State& state, int depth,
                            double pathProb = 1.0) {
    if (depth == 0) return 0.0;
    std::vector<double> probs = model.probs(state);
    double h = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) continue;
        h += pathProb * probs[i] * (-std::log(probs[i]));
        h += exactSequenceEntropy(model, model.step(state, i), depth - 1, pathProb * probs[i]);
    }
    return h;
}

}  // namespace vlab::stats
