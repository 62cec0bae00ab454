#pragma once

#include <cstdint>
#include <vector>

#include "gmsdi/rng.hpp"

namespace gmsdi {

// Multi-channel sample buffer. Samples are interleaved, size == channels * length.
// Value semantics; immutable by convention once handed to another module.
struct AudioTensor {
    std::vector<double> samples;
    int channels = 1;
    int length = 0;
    int sample_rate = 8000;

    static AudioTensor zeros(int channels, int length, int sample_rate);
    static AudioTensor zeros_like(const AudioTensor& other);

    size_t size() const { return samples.size(); }
    bool same_shape(const AudioTensor& other) const {
        return channels == other.channels && length == other.length &&
               sample_rate == other.sample_rate;
    }

    // throws dimension error when samples.size() != channels * length or fields non-positive
    void validate() const;
};

// element-wise sum of sources sharing one shape
AudioTensor mix(const std::vector<AudioTensor>& sources);

// throws dimension error unless a and b share shape
void require_same_shape(const AudioTensor& a, const AudioTensor& b, const char* what);

AudioTensor add(const AudioTensor& a, const AudioTensor& b);
AudioTensor sub(const AudioTensor& a, const AudioTensor& b);
AudioTensor scaled(const AudioTensor& a, double k);

// y += k * x
void axpy(AudioTensor& y, double k, const AudioTensor& x);

double dot(const AudioTensor& a, const AudioTensor& b);
double norm2(const AudioTensor& a);  // squared Euclidean norm
double norm(const AudioTensor& a);

bool all_finite(const AudioTensor& a);

// fills with i.i.d. sigma * N(0,1)
void fill_normal(AudioTensor& a, double sigma, Rng& rng);

// index sets over sources 0..K-1; pairwise disjoint, no empty subset, union == {0..K-1}
struct Partition {
    std::vector<std::vector<int>> subsets;

    // throws config error when the invariants fail for K sources
    void validate(int n_sources) const;

    static Partition singletons(int n_sources);
};

}  // namespace gmsdi
