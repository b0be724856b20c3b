// Sampling plans and reports for the floating-point checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qpb/rational.hpp"

namespace qpb {

struct SamplePlan {
    std::uint64_t seed = 12345;
    int count = 100;
    double lo = -2.0;
    double hi = 2.0;
    double tolerance = 1e-9;  // relative where magnitudes exceed 1
    bool positive = false;    // restrict sampling to the open positive quadrant

    void validate() const {
        if (count < 1) throw input_error("sample count must be >= 1");
        if (tolerance <= 0) throw input_error("tolerance must be positive");
        if (!(lo < hi)) throw input_error("sampling range is empty");
    }
};

struct NumericReport {
    double max_abs = 0.0;
    double max_rel = 0.0;  // |residual| / max(1, magnitude), the pass criterion
    std::vector<double> worst_sample;
    int samples = 0;
    double tolerance = 0.0;
    bool pass = true;

    void record(double abs_residual, double magnitude, const std::vector<double>& sample) {
        double rel = abs_residual / std::max(1.0, magnitude);
        if (abs_residual > max_abs) max_abs = abs_residual;
        if (rel > max_rel) {
            max_rel = rel;
            worst_sample = sample;
        }
    }
    void finish(double tol) {
        tolerance = tol;
        pass = max_rel <= tol;
    }
};

}  // namespace qpb
