#pragma once

#include <vector>

namespace gmsdi {

// Discretized sigma ladder. sigmas has n_steps + 1 entries: sigmas[0] ==
// sigma_max, sigmas[n_steps-1] == sigma_min, strictly decreasing, and a
// trailing 0 meaning "return the final denoised estimate" (integrators must
// not divide by it).
struct NoiseSchedule {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double rho = 1.0;
    int n_steps = 0;
    std::vector<double> sigmas;
};

// sigmas[i] = (sigma_max^(1/rho) + (i/(n_steps-1)) * (sigma_min^(1/rho) - sigma_max^(1/rho)))^rho
// rho = 1 is plain linear interpolation.
NoiseSchedule build_sigma_schedule(double sigma_min, double sigma_max, double rho, int n_steps);

}  // namespace gmsdi
