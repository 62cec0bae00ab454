#include "gmsdi/rng.hpp"

#include <cmath>

namespace gmsdi {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t seed_stream(uint64_t seed, uint64_t a, uint64_t b) {
    return mix64(seed ^ mix64(a ^ 0x5851f42d4c957f2dull) ^ (mix64(b) << 1));
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] so the log is finite
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

uint64_t Rng::below(uint64_t n) {
    // modulo bias is irrelevant for n << 2^64
    return n == 0 ? 0 : gen_() % n;
}

}  // namespace gmsdi
