#include "gmsdi/schedule.hpp"

#include <cmath>
#include <string>

#include "gmsdi/errors.hpp"

namespace gmsdi {

NoiseSchedule build_sigma_schedule(double sigma_min, double sigma_max, double rho, int n_steps) {
    if (!(sigma_min > 0.0) || !(sigma_max > sigma_min)) {
        throw Error(ErrorCode::config, "schedule requires 0 < sigma_min < sigma_max");
    }
    if (!(rho > 0.0)) {
        throw Error(ErrorCode::config, "schedule requires rho > 0");
    }
    if (n_steps < 2) {
        throw Error(ErrorCode::config, "schedule requires n_steps >= 2, got " + std::to_string(n_steps));
    }

    NoiseSchedule s;
    s.sigma_min = sigma_min;
    s.sigma_max = sigma_max;
    s.rho = rho;
    s.n_steps = n_steps;
    s.sigmas.resize(static_cast<size_t>(n_steps) + 1);

    if (rho == 1.0) {
        // linear interpolation, kept pow-free so spacing is exactly uniform
        for (int i = 0; i < n_steps; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(n_steps - 1);
            s.sigmas[static_cast<size_t>(i)] = sigma_max + t * (sigma_min - sigma_max);
        }
    } else {
        double inv_rho = 1.0 / rho;
        double max_r = std::pow(sigma_max, inv_rho);
        double min_r = std::pow(sigma_min, inv_rho);
        for (int i = 0; i < n_steps; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(n_steps - 1);
            s.sigmas[static_cast<size_t>(i)] = std::pow(max_r + t * (min_r - max_r), rho);
        }
    }
    // the endpoints must be exact, not pow-roundtripped
    s.sigmas[0] = sigma_max;
    s.sigmas[static_cast<size_t>(n_steps) - 1] = sigma_min;
    s.sigmas[static_cast<size_t>(n_steps)] = 0.0;

    for (int i = 0; i + 1 < n_steps; ++i) {
        if (!(s.sigmas[static_cast<size_t>(i)] > s.sigmas[static_cast<size_t>(i) + 1])) {
            throw Error(ErrorCode::config, "schedule not strictly decreasing at index " + std::to_string(i));
        }
    }
    return s;
}

}  // namespace gmsdi
