#include "variantlab/prior.hpp"

#include <cmath>

namespace vlab {

double terminalValue(const Position& p) {
    if (inCheck(p, p.sideToMove)) return -1.0;
    return p.variant.stalemateIsWin ? -1.0 : 0.0;
}

double materialBalance(const Position& p, const std::array<double, 5>& weights) {
    double balance = 0.0;
    for (int i = 0; i < 64; ++i) {
        auto pc = p.at(Square::fromIndex(i));
        if (!pc || pc->kind == PieceKind::King) continue;
        double w = weights[static_cast<int>(pc->kind)];
        balance += pc->color == p.sideToMove ? w : -w;
    }
    return balance;
}

namespace {

class UniformPrior final : public PriorProvider {
public:
    PriorEvaluation evaluate(const Position& p, const MoveList& legal) const override {
        PriorEvaluation out;
        if (legal.empty()) {
            out.value = terminalValue(p);
            return out;
        }
        out.probs.assign(legal.size(), 1.0 / static_cast<double>(legal.size()));
        return out;
    }
};

class MaterialPrior final : public PriorProvider {
public:
    explicit MaterialPrior(const MaterialPriorConfig& cfg) : cfg_(cfg) {}

    PriorEvaluation evaluate(const Position& p, const MoveList& legal) const override {
        PriorEvaluation out;
        if (legal.empty()) {
            out.value = terminalValue(p);
            return out;
        }
        out.probs.resize(legal.size());
        double maxGain = -1e300;
        for (std::size_t i = 0; i < legal.size(); ++i) {
            double g = gain(p, legal[i]);
            out.probs[i] = g;
            maxGain = std::max(maxGain, g);
        }
        double total = 0.0;
        for (double& x : out.probs) {
            x = std::exp(cfg_.softmaxScale * (x - maxGain));
            total += x;
        }
        for (double& x : out.probs) x /= total;
        out.value = std::tanh(cfg_.valueScale * materialBalance(p, cfg_.weights));
        return out;
    }

private:
    double gain(const Position& p, const Move& m) const {
        double g = 0.0;
        if (m.is(moveflag::EnPassant)) {
            g += cfg_.weights[0];
        } else if (auto occ = p.at(m.to)) {
            double w = occ->kind == PieceKind::King ? 0.0
                                                    : cfg_.weights[static_cast<int>(occ->kind)];
            g += m.is(moveflag::SelfCapture) ? -w : w;
        }
        if (m.promotion)
            g += cfg_.weights[static_cast<int>(*m.promotion)] - cfg_.weights[0];
        return g;
    }

    MaterialPriorConfig cfg_;
};

}  // namespace

std::unique_ptr<PriorProvider> uniformPrior() { return std::make_unique<UniformPrior>(); }

std::unique_ptr<PriorProvider> materialPrior(const MaterialPriorConfig& cfg) {
    return std::make_unique<MaterialPrior>(cfg);
}

}  // namespace vlab
