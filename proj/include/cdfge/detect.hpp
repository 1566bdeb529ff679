// Copyright 2026 The cdfge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cdfge/acdf.hpp"

namespace cdfge {

enum class Bandwidth { Median, StdDev };
enum class Orientation { Standard, AsPrinted };
/// After: accept b only if mean(y[b : b+l]) exceeds the threshold.
/// AsPrinted: stop if mean(y[b-l : b]) exceeds the threshold.
enum class Guard { After, AsPrinted, None };

/// Gaussian-kernel two-segment cost minimizer; returns the first index of
/// the second segment.
int kernel_breakpoint(const std::vector<double> &y, Bandwidth policy,
                      int min_seg = 2);

/// Kernel cost of splitting at every b in [min_seg, n - min_seg].
std::vector<double> kernel_costs(const std::vector<double> &y, double bandwidth,
                                 int min_seg);

double kernel_bandwidth(const std::vector<double> &y, Bandwidth policy);

struct AnovaResult {
    bool significant = false;
    double f = 0.0;
    double p = 0.0;
};

AnovaResult anova_validate(const std::vector<double> &y, int b, double alpha,
                           Orientation orientation = Orientation::Standard);

struct GuardParams {
    Guard mode = Guard::After;
    double k = 2.0;
    int l = 20;
    double sigma = 0.0;
    double eps_tilde = 0.0;
    /// Absolute lower bound on the threshold (e.g. 2 epsilon).
    double min_level = 0.0;

    [[nodiscard]] double threshold() const;
};

struct TraceEntry {
    int candidate = 0;
    double f = 0.0;
    double p = 0.0;
    bool accepted = false;
    std::string reason;
};

struct BreakpointSearch {
    int breakpoint = 0; ///< n when nothing was accepted
    std::vector<TraceEntry> trace;
};

struct RuptureParams {
    double alpha = 0.01;
    GuardParams guard;
    Bandwidth bandwidth = Bandwidth::Median;
    Orientation orientation = Orientation::Standard;
    int min_seg = 2;
};

BreakpointSearch find_smallest_breakpoint(const std::vector<double> &y,
                                          const RuptureParams &params);

struct NoiseFloor {
    double sigma = 0.0;
    double eps_tilde = 0.0;
};

/// Statistics of G over grid points in [lo, hi).
NoiseFloor noise_floor(const AcdfCurve &curve, double lo = -3.14159265358979323846,
                       double hi = -1.57079632679489661923);

/// argmax of grad over [x0 - half_window, x0 + half_window]; ties to smallest x.
double refine_energy(const AcdfCurve &curve, double x0, double half_window);

/// First index i >= lead whose own value and >= fraction of y[i : i+window]
/// exceed s sigma, with sigma from y[0 : lead].
std::optional<int> variance_scan(const std::vector<double> &y, int lead,
                                 double s = 3.0, int window_l = 40,
                                 double fraction = 0.8);

struct CertifiedResult {
    double x = 0.0;
    int evaluations = 0;
};

CertifiedResult certified_search(const std::function<double(double)> &evaluator,
                                 double eta, double epsilon, double x_lo,
                                 double x_hi, double delta);

struct DetectionResult {
    std::string method = "rupture";
    bool detected = false;
    int breakpoint_index = 0;
    double inflection_x = 0.0;
    double refined_energy = 0.0; ///< scaled units (lambda)
    double sigma_empirical = 0.0;
    double noise_floor = 0.0;
    double threshold = 0.0;
    std::vector<TraceEntry> trace;
};

struct DetectParams {
    std::string method = "rupture"; ///< rupture | variance-scan
    RuptureParams rupture;
    double delta = 0.01;
    double half_window = 0.01;
    /// Noise region and detection window on the x axis.
    double noise_lo = -3.14159265358979323846;
    double noise_hi = -1.57079632679489661923;
    double window_lo = -3.14159265358979323846;
    double window_hi = 3.14159265358979323846;
    double s = 3.0;
    int window_l = 40;
    double fraction = 0.8;
};

/// Noise floor, breakpoint search inside the window, gradient refinement.
DetectionResult detect_curve(const AcdfCurve &curve, const DetectParams &params);

} // namespace cdfge
