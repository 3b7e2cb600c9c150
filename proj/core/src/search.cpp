#include "variantlab/search.hpp"

#include <cmath>
#include <memory>

#include "variantlab/errors.hpp"

namespace vlab {

namespace {

struct Node {
    Position pos;
    bool expanded = false;
    bool terminal = false;
    double terminalVal = 0.0;
    MoveList moves;
    std::vector<double> priors;
    std::vector<int> childN;
    std::vector<double> childW;
    std::vector<std::unique_ptr<Node>> children;

    explicit Node(Position p) : pos(std::move(p)) {}

    // Returns the prior/terminal value for the side to move at this node.
    double expand(const PriorProvider& prior) {
        expanded = true;
        if (pos.halfmoveClock >= 100) {
            terminal = true;
            terminalVal = 0.0;
            return terminalVal;
        }
        moves = legalMoves(pos);
        if (moves.empty()) {
            terminal = true;
            terminalVal = terminalValue(pos);
            return terminalVal;
        }
        PriorEvaluation eval = prior.evaluate(pos, moves);
        priors = std::move(eval.probs);
        childN.assign(moves.size(), 0);
        childW.assign(moves.size(), 0.0);
        children.resize(moves.size());
        return eval.value;
    }

    // Q + cPuct * P * sqrt(sum N) / (1 + N), lowest index on ties.
    std::size_t select(double cPuct) const {
        int sumN = 0;
        for (int n : childN) sumN += n;
        double sqrtSum = std::sqrt(static_cast<double>(sumN));
        std::size_t best = 0;
        double bestScore = -1e300;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            double q = childN[i] ? childW[i] / childN[i] : 0.0;
            double score = q + cPuct * priors[i] * sqrtSum / (1.0 + childN[i]);
            if (score > bestScore) {
                bestScore = score;
                best = i;
            }
        }
        return best;
    }
};

// One PUCT simulation; returns the value from the perspective of the side to
// move at `node`.
double simulate(Node& node, const PriorProvider& prior, const SearchConfig& cfg) {
    if (node.terminal) return node.terminalVal;
    if (!node.expanded) return node.expand(prior);
    std::size_t i = node.select(cfg.cPuct);
    if (!node.children[i])
        node.children[i] = std::make_unique<Node>(applyMoveUnchecked(node.pos, node.moves[i]));
    double v = -simulate(*node.children[i], prior, cfg);
    node.childN[i] += 1;
    node.childW[i] += v;
    return v;
}

}  // namespace

SearchResult search(const Position& p, const PriorProvider& prior, const SearchConfig& cfg,
                    bool atRoot, Rng& rng) {
    Node root(p);
    root.expand(prior);
    if (root.terminal)
        throw Error(Errc::NoLegalMoves, "search: position is terminal");

    if (atRoot && cfg.rootNoiseWeight > 0.0) {
        std::vector<double> noise = rng.dirichlet(cfg.rootNoiseAlpha, root.priors.size());
        double total = 0.0;
        for (std::size_t i = 0; i < root.priors.size(); ++i) {
            root.priors[i] =
                (1.0 - cfg.rootNoiseWeight) * root.priors[i] + cfg.rootNoiseWeight * noise[i];
            total += root.priors[i];
        }
        for (double& x : root.priors) x /= total;
    }

    double valueSum = 0.0;
    for (int s = 0; s < cfg.simulations; ++s) valueSum += simulate(root, prior, cfg);

    SearchResult result;
    result.moves = std::move(root.moves);
    result.visits = std::move(root.childN);
    result.rootValue = valueSum / cfg.simulations;
    return result;
}

SearchResult search(const Position& p, const PriorProvider& prior, const SearchConfig& cfg,
                    bool atRoot) {
    Rng rng(cfg.seed);
    return search(p, prior, cfg, atRoot, rng);
}

}  // namespace vlab
