#pragma once

#include <span>
#include <vector>

#include "dendrite/metric_tree.hpp"
#include "dendrite/ordered_tree.hpp"

namespace dendrite {

/// inf over ball centres of the measure of the open ball, per radius.
struct VolumeProfile {
    std::vector<double> radii;
    std::vector<double> inf_volumes;
};

/// Open-ball measure mu(B(center, r)) computed exactly on the piecewise
/// structure (atoms strictly inside, per-edge sublevel lengths in closed
/// form).
double ball_volume(const MetricTree& t, const TreeMeasure& mu, TreePoint center, double r);

/// inf over a net of centres (spacing defaults to min(radii)/4) plus all
/// nodes.
VolumeProfile ball_volume_profile(const MetricTree& t, const TreeMeasure& mu,
                                  std::span<const double> radii, double net_spacing = 0.0);

/// Graph version: uniform vertex measure, centres are all vertices, balls by
/// breadth-first search with cutoff. Exact.
VolumeProfile ball_volume_profile(const OrderedTree& t, std::span<const double> radii);

/// Minimal number of open balls of radius r covering the tree (centres
/// anywhere); exact greedy sweep along edges.
int covering_number(const MetricTree& t, double r);

struct ExponentFit {
    double slope;
    double intercept;
    double r_squared;
};

/// Least squares of log inf-volume against log r; with log_correction the
/// abscissa is log r - log log(1/r) (the slowly varying correction of the
/// heavy-tailed volume bound).
ExponentFit exponent_fit(const VolumeProfile& profile, bool log_correction = false);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_distance(std::span<const double> a, std::span<const double> b);

/// Chi-square upper tail p-value with the given degrees of freedom.
double chi_square_p_value(double statistic, int dof);

} // namespace dendrite
