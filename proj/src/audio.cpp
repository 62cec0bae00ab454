#include "gmsdi/audio.hpp"

#include <cmath>

#include "gmsdi/errors.hpp"

namespace gmsdi {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::config: return "config";
        case ErrorCode::vocabulary: return "vocabulary";
        case ErrorCode::dimension: return "dimension";
        case ErrorCode::format: return "format";
        case ErrorCode::io: return "io";
        case ErrorCode::training: return "training";
        case ErrorCode::divergence: return "divergence";
        case ErrorCode::metric: return "metric";
        case ErrorCode::degenerate: return "degenerate";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

AudioTensor AudioTensor::zeros(int channels, int length, int sample_rate) {
    AudioTensor t;
    t.channels = channels;
    t.length = length;
    t.sample_rate = sample_rate;
    t.samples.assign(static_cast<size_t>(channels) * static_cast<size_t>(length), 0.0);
    return t;
}

AudioTensor AudioTensor::zeros_like(const AudioTensor& other) {
    return zeros(other.channels, other.length, other.sample_rate);
}

void AudioTensor::validate() const {
    if (channels <= 0 || length <= 0 || sample_rate <= 0) {
        throw Error(ErrorCode::dimension, "audio tensor fields must be positive");
    }
    if (samples.size() != static_cast<size_t>(channels) * static_cast<size_t>(length)) {
        throw Error(ErrorCode::dimension, "sample buffer size != channels * length");
    }
}

void require_same_shape(const AudioTensor& a, const AudioTensor& b, const char* what) {
    if (!a.same_shape(b)) {
        throw Error(ErrorCode::dimension, std::string(what) + ": shape mismatch (" +
                                              std::to_string(a.channels) + "x" + std::to_string(a.length) +
                                              "@" + std::to_string(a.sample_rate) + " vs " +
                                              std::to_string(b.channels) + "x" + std::to_string(b.length) +
                                              "@" + std::to_string(b.sample_rate) + ")");
    }
}

AudioTensor mix(const std::vector<AudioTensor>& sources) {
    if (sources.empty()) {
        throw Error(ErrorCode::config, "mix: empty source list");
    }
    AudioTensor out = sources[0];
    for (size_t k = 1; k < sources.size(); ++k) {
        require_same_shape(out, sources[k], "mix");
        for (size_t i = 0; i < out.samples.size(); ++i) {
            out.samples[i] += sources[k].samples[i];
        }
    }
    return out;
}

AudioTensor add(const AudioTensor& a, const AudioTensor& b) {
    require_same_shape(a, b, "add");
    AudioTensor out = a;
    for (size_t i = 0; i < out.samples.size(); ++i) out.samples[i] += b.samples[i];
    return out;
}

AudioTensor sub(const AudioTensor& a, const AudioTensor& b) {
    require_same_shape(a, b, "sub");
    AudioTensor out = a;
    for (size_t i = 0; i < out.samples.size(); ++i) out.samples[i] -= b.samples[i];
    return out;
}

AudioTensor scaled(const AudioTensor& a, double k) {
    AudioTensor out = a;
    for (double& v : out.samples) v *= k;
    return out;
}

void axpy(AudioTensor& y, double k, const AudioTensor& x) {
    require_same_shape(y, x, "axpy");
    for (size_t i = 0; i < y.samples.size(); ++i) y.samples[i] += k * x.samples[i];
}

double dot(const AudioTensor& a, const AudioTensor& b) {
    require_same_shape(a, b, "dot");
    double acc = 0.0;
    for (size_t i = 0; i < a.samples.size(); ++i) acc += a.samples[i] * b.samples[i];
    return acc;
}

double norm2(const AudioTensor& a) {
    double acc = 0.0;
    for (double v : a.samples) acc += v * v;
    return acc;
}

double norm(const AudioTensor& a) { return std::sqrt(norm2(a)); }

bool all_finite(const AudioTensor& a) {
    for (double v : a.samples) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void fill_normal(AudioTensor& a, double sigma, Rng& rng) {
    for (double& v : a.samples) v = sigma * rng.normal();
}

void Partition::validate(int n_sources) const {
    if (subsets.empty()) {
        throw Error(ErrorCode::config, "partition: no subsets");
    }
    std::vector<int> seen(static_cast<size_t>(n_sources), 0);
    for (const auto& subset : subsets) {
        if (subset.empty()) {
            throw Error(ErrorCode::config, "partition: empty subset");
        }
        for (int j : subset) {
            if (j < 0 || j >= n_sources) {
                throw Error(ErrorCode::config, "partition: index " + std::to_string(j) + " out of range");
            }
            if (seen[static_cast<size_t>(j)]++) {
                throw Error(ErrorCode::config, "partition: index " + std::to_string(j) + " repeated");
            }
        }
    }
    for (int j = 0; j < n_sources; ++j) {
        if (!seen[static_cast<size_t>(j)]) {
            throw Error(ErrorCode::config, "partition: index " + std::to_string(j) + " missing");
        }
    }
}

Partition Partition::singletons(int n_sources) {
    Partition p;
    for (int j = 0; j < n_sources; ++j) p.subsets.push_back({j});
    return p;
}

}  // namespace gmsdi
