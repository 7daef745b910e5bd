#pragma once

#include <span>
#include <string>
#include <vector>

#include "dendrite/metric_tree.hpp"

namespace dendrite {

/// Point of l1 with finitely many non-negative coordinates (trailing zeros
/// implicit).
using L1Point = std::vector<double>;

double l1_norm(const L1Point& p);
double l1_distance(const L1Point& a, const L1Point& b);

/// First k coordinates kept, the rest zeroed.
L1Point pi_k(const L1Point& p, int k);

/// Sequential isometric embedding of a metric tree into the non-negative
/// orthant of l1. Coordinate j carries the new branch contributed by the
/// j-th designated leaf: psi(p)_j = H_j(p) - H_{j-1}(p), where H_j(p) is the
/// depth of the projection of p onto the subtree spanned by the first j
/// leaves. The root maps to 0 and truncation commutes with projection:
/// pi_k(psi(p)) = psi(project onto first-k subtree).
class L1Embedding {
public:
    explicit L1Embedding(const MetricTree& t);

    int coordinate_count() const { return static_cast<int>(leaves_.size()); }
    L1Point psi(TreePoint p) const;
    /// Embedded image of all nodes plus an epsilon-net of the edges.
    std::vector<L1Point> net_image(double spacing) const;

private:
    const MetricTree* t_;
    std::vector<TreePoint> leaves_;
};

/// Hausdorff distance between finite subsets of l1.
double hausdorff_distance_l1(std::span<const L1Point> A, std::span<const L1Point> B);

/// CSV rows "id,coord-1,...,coord-k" with a header.
std::string l1_points_to_csv(std::span<const L1Point> pts, int k);

} // namespace dendrite
