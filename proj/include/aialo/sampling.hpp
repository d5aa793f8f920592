#pragma once

#include "aialo/lp_model.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace aialo {

// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

// Per-parameter sample counts T_i(t), running sums and the global clock t.
class SampleLedger {
public:
    SampleLedger() = default;
    explicit SampleLedger(int num_params);

    void record(int i, double observation);
    void record_batch(int i, std::int64_t count, double sum);

    int size() const { return static_cast<int>(counts_.size()); }
    std::int64_t count(int i) const { return counts_.at(i); }
    double sum(int i) const { return sums_.at(i); }
    std::int64_t total() const { return total_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    // Empirical mean; throws DomainError when parameter i has no samples.
    double mean(int i) const;

private:
    std::vector<std::int64_t> counts_;
    std::vector<double> sums_;
    std::int64_t total_ = 0;
};

// Gaussian sampling oracle over the hidden parameters of an instance. Each
// parameter owns its own generator stream, so the order in which parameters
// are drawn never changes any single parameter's sequence.
class NoisyOracle {
public:
    NoisyOracle(Vector true_values, Vector noise_scale, std::vector<bool> sampleable,
                std::uint64_t seed);

    static NoisyOracle for_instance(const LPInstance& inst, std::uint64_t seed);

    // One observation of parameter i, recorded in the ledger.
    double draw(SampleLedger& ledger, int i);

    // Mean of `count` fresh observations of parameter i, recorded in the
    // ledger as `count` draws. The sum of `count` i.i.d. Gaussians is drawn
    // directly from its exact distribution.
    double draw_mean(SampleLedger& ledger, int i, std::int64_t count);

    // A fresh oracle over the same parameters with a seed derived from salt.
    NoisyOracle derive(std::uint64_t salt) const;

    int num_params() const { return static_cast<int>(values_.size()); }
    bool sampleable(int i) const { return sampleable_.at(i); }
    std::uint64_t seed() const { return seed_; }

private:
    void check_index(int i) const;

    Vector values_;
    Vector scale_;
    std::vector<bool> sampleable_;
    std::uint64_t seed_;
    std::vector<std::mt19937_64> engines_;
    std::vector<std::normal_distribution<double>> normals_;
};

// Anytime radius U(s) = 3 sqrt(2 sigma^2 ln(ln(3s/2) / delta') / s).
// Throws DomainError when s < 1, delta' is outside (0,1) or the inner
// logarithm's argument is <= 1.
double confidence_radius(double sigma, std::int64_t s, double delta_prime);

// delta' = (delta / (20 m))^(2/3).
double delta_prime(double delta, int m);

}  // namespace aialo
