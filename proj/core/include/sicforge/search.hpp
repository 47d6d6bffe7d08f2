#pragma once

#include <cstdint>
#include <vector>

#include "sicforge/heisenberg_weyl.hpp"

namespace sicforge {

// Numerical fiducial search: minimize the squared-deviation frame potential
// sum_{k != 0} (|<psi|D_k psi>|^2 - 1/(d+1))^2 over unit vectors, by
// multi-start gradient descent with normalization as the sphere retraction.

struct SearchConfig {
    int dim = 3;
    int restarts = 10;
    int max_iters = 20000;
    double target = 1e-10; // fiducial max-deviation target
    double step0 = 0.05;
    std::uint64_t seed = 1;
};

struct RestartTrace {
    int iterations;
    double objective_value;
    double deviation;
    bool converged;
};

struct SearchResult {
    CVector best;
    double deviation = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<RestartTrace> restarts;
};

double objective(const HWGroup& hw, const CVector& psi);

// d f / d Re(psi_i) + i d f / d Im(psi_i), as one complex vector.
CVector objective_gradient(const HWGroup& hw, const CVector& psi);

// Max relative error of the analytic gradient against central differences.
double gradient_check(const HWGroup& hw, const CVector& psi, double step = 1e-6);

SearchResult search(const SearchConfig& cfg);

} // namespace sicforge
