#pragma once

#include <cstdint>

#include "variantlab/prior.hpp"
#include "variantlab/rng.hpp"

namespace vlab {

struct SearchConfig {
    int simulations = 800;
    double cPuct = 1.5;
    double rootNoiseAlpha = 0.3;
    double rootNoiseWeight = 0.25;  // Dirichlet mix-in at the root; 0 disables
    int softmaxPlies = 20;
    int maxGamePlies = 512;
    std::uint64_t seed = 0;
};

struct SearchResult {
    MoveList moves;           // canonical order, as legalMoves(position)
    std::vector<int> visits;  // aligned with moves; sums to cfg.simulations
    double rootValue = 0.0;   // mean backed-up value at the root, in [-1, 1]
};

// Runs exactly cfg.simulations PUCT simulations from p. When atRoot and
// cfg.rootNoiseWeight > 0, root priors are mixed with Dirichlet noise drawn
// from rng. Throws Errc::NoLegalMoves on a terminal position.
SearchResult search(const Position& p, const PriorProvider& prior, const SearchConfig& cfg,
                    bool atRoot, Rng& rng);

// Convenience overload seeding a fresh stream from cfg.seed.
SearchResult search(const Position& p, const PriorProvider& prior, const SearchConfig& cfg,
                    bool atRoot = true);

}  // namespace vlab
