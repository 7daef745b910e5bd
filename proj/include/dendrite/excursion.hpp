#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dendrite/metric_tree.hpp"
#include "dendrite/ordered_tree.hpp"

namespace dendrite {

/// Piecewise-linear function on [0,1] with value 0 at both endpoints and
/// non-negative values in between. (The search-depth of a one-vertex tree is
/// identically zero, so strict interior positivity is not enforced here;
/// validate_positive_interior checks it where a true excursion is required.)
class Excursion {
public:
    Excursion(std::vector<double> grid, std::vector<double> values);

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    int breakpoint_count() const { return static_cast<int>(grid_.size()); }

    /// Linear interpolation; s must lie in [0,1].
    double value(double s) const;
    /// Minimum of the function over [a,b] (attained at a breakpoint or at an
    /// endpoint of the interval).
    double min_on(double a, double b) const;

    void validate_positive_interior() const;

private:
    std::vector<double> grid_;
    std::vector<double> values_;
};

/// d_w(s,t) = w(s) + w(t) - 2 inf{w(r) : r in [s^t, svt]}.
double excursion_distance(const Excursion& w, double s, double t);

/// The metric tree spanned by the root and the images of the sample points
/// u_1..u_k under the excursion-to-tree map. Leaf order follows u; duplicate
/// u values are rejected.
MetricTree tree_from_excursion(const Excursion& w, std::span<const double> u);

/// Search-depth encoding of an ordered tree on the grid {i/2n}: depth of the
/// depth-first traversal for 0 <= i <= 2(n-1), held at the root afterwards.
Excursion search_depth(const OrderedTree& t);

/// The traversal i -> vertex underlying search_depth: each edge is walked
/// once down and once up in child order; indices past 2(n-1) sit at the root.
std::vector<int> search_depth_traversal(const OrderedTree& t);

/// Grid time of the first visit of each vertex in the traversal; passing
/// these to tree_from_excursion(search_depth(t), .) reconstructs t with unit
/// edge lengths.
std::vector<double> first_visit_times(const OrderedTree& t);

/// The vertex at the rounded time: s is moved to the neighbouring grid point
/// of larger depth when the floor point is shallower (ties keep the floor),
/// then mapped through the traversal. Pushing forward uniform s gives exactly
/// the uniform vertex measure.
int point_at(const OrderedTree& t, const Excursion& w, double s);
/// Same with a precomputed traversal (hot loop of the statistical checks).
int point_at(std::span<const int> traversal, const Excursion& w, double s);

/// CSV with header "t,value", one breakpoint per row.
std::string excursion_to_csv(const Excursion& w);
Excursion excursion_from_csv(std::istream& in);

} // namespace dendrite
