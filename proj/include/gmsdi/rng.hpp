#pragma once

#include <cstdint>
#include <random>

namespace gmsdi {

// splitmix64 finalizer; good avalanche, used for seed derivation.
uint64_t mix64(uint64_t x);

// Derives an independent sub-seed from (seed, a, b). Used to key one RNG
// stream per (trajectory, step) so coupled integration is reproducible
// regardless of evaluation order.
uint64_t seed_stream(uint64_t seed, uint64_t a, uint64_t b = 0);

// Deterministic random source. mt19937_64 is fully specified by the
// standard and the uniform/normal transforms below are written out
// explicitly, so a given seed yields the same sequence everywhere.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller (no library distribution: those are
    // implementation-defined sequences)
    double normal();

    // log-uniform over [lo, hi], both positive
    double log_uniform(double lo, double hi);

    // uniform integer in [0, n)
    uint64_t below(uint64_t n);

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace gmsdi
