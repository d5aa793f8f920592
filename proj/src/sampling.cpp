#include "aialo/sampling.hpp"

#include "aialo/errors.hpp"

#include <cmath>
#include <string>

namespace aialo {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = mix64(base);
    for (std::uint64_t p : parts) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
    return h;
}

SampleLedger::SampleLedger(int num_params) : counts_(num_params, 0), sums_(num_params, 0.0) {}

void SampleLedger::record(int i, double observation) {
    ++counts_.at(i);
    sums_[i] += observation;
    ++total_;
}

void SampleLedger::record_batch(int i, std::int64_t count, double sum) {
    if (count < 0) throw DomainError("negative batch size");
    counts_.at(i) += count;
    sums_[i] += sum;
    total_ += count;
}

double SampleLedger::mean(int i) const {
    if (counts_.at(i) == 0) throw DomainError("no samples of parameter " + std::to_string(i));
    return sums_[i] / static_cast<double>(counts_[i]);
}

NoisyOracle::NoisyOracle(Vector true_values, Vector noise_scale, std::vector<bool> sampleable,
                         std::uint64_t seed)
    : values_(std::move(true_values)),
      scale_(std::move(noise_scale)),
      sampleable_(std::move(sampleable)),
      seed_(seed) {
    if (scale_.size() != values_.size() || static_cast<Eigen::Index>(sampleable_.size()) != values_.size())
        throw ValidationError("oracle: inconsistent parameter counts");
    engines_.reserve(values_.size());
    normals_.reserve(values_.size());
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
        engines_.emplace_back(derive_seed(seed_, {static_cast<std::uint64_t>(i)}));
        normals_.emplace_back(0.0, 1.0);
    }
}

NoisyOracle NoisyOracle::for_instance(const LPInstance& inst, std::uint64_t seed) {
    std::vector<bool> mask(inst.num_params(), false);
    for (int i : inst.unknown_params()) mask[i] = true;
    return NoisyOracle(inst.hidden_values(), inst.noise_scale(), std::move(mask), seed);
}

void NoisyOracle::check_index(int i) const {
    if (i < 0 || i >= num_params()) throw DomainError("parameter index out of range");
    if (!sampleable_[i])
        throw UnknownParameterOnly("parameter " + std::to_string(i) + " is known; it cannot be sampled");
}

double NoisyOracle::draw(SampleLedger& ledger, int i) {
    check_index(i);
    const double x = values_(i) + scale_(i) * normals_[i](engines_[i]);
    ledger.record(i, x);
    return x;
}

double NoisyOracle::draw_mean(SampleLedger& ledger, int i, std::int64_t count) {
    check_index(i);
    if (count <= 0) throw DomainError("draw_mean needs a positive count");
    const double k = static_cast<double>(count);
    const double sum = k * values_(i) + scale_(i) * std::sqrt(k) * normals_[i](engines_[i]);
    ledger.record_batch(i, count, sum);
    return sum / k;
}

NoisyOracle NoisyOracle::derive(std::uint64_t salt) const {
    return NoisyOracle(values_, scale_, sampleable_, derive_seed(seed_, {salt}));
}

double confidence_radius(double sigma, std::int64_t s, double delta_prime) {
    if (s < 1) throw DomainError("confidence radius needs s >= 1");
    if (!(delta_prime > 0.0 && delta_prime < 1.0)) throw DomainError("delta' must lie in (0, 1)");
    const double sd = static_cast<double>(s);
    const double inner = std::log(1.5 * sd) / delta_prime;
    if (!(inner > 1.0)) throw DomainError("confidence radius undefined: ln(3s/2)/delta' <= 1");
    return 3.0 * std::sqrt(2.0 * sigma * sigma * std::log(inner) / sd);
}

double delta_prime(double delta, int m) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
    if (m < 1) throw DomainError("m must be positive");
    return std::pow(delta / (20.0 * m), 2.0 / 3.0);
}

}  // namespace aialo
