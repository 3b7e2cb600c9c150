#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace vlab {

// Deterministic splitmix64 stream. Hand-rolled distributions so that seeded
// runs reproduce bit-identically regardless of the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
        return r.next();
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free modulo is fine at these sample sizes.
        return next() % n;
    }

    double normal() {
        if (haveSpare_) {
            haveSpare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        haveSpare_ = true;
        return radius * std::cos(angle);
    }

    // Marsaglia-Tsang; the alpha < 1 case boosts from Gamma(alpha + 1).
    double gamma(double alpha) {
        if (alpha < 1.0) {
            double u = 0.0;
            while (u == 0.0) u = uniform();
            return gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
        }
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    std::vector<double> dirichlet(double alpha, std::size_t n) {
        std::vector<double> out(n);
        double total = 0.0;
        for (double& x : out) {
            x = gamma(alpha);
            total += x;
        }
        if (total <= 0.0) {  // all gammas underflowed; fall back to uniform
            for (double& x : out) x = 1.0 / static_cast<double>(n);
            return out;
        }
        for (double& x : out) x /= total;
        return out;
    }

    std::vector<double> dirichlet(std::span<const double> alphas) {
        std::vector<double> out(alphas.size());
        double total = 0.0;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            out[i] = gamma(alphas[i]);
            total += out[i];
        }
        for (double& x : out) x /= total;
        return out;
    }

    // Index sampled proportionally to the (non-negative) weights.
    std::size_t categorical(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double u = uniform() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.size() - 1;
    }

private:
    std::uint64_t state_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

}  // namespace vlab
