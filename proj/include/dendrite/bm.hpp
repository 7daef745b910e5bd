#pragma once

#include <cstdint>
#include <vector>

#include "dendrite/metric_tree.hpp"
#include "dendrite/rng.hpp"

namespace dendrite {

/// Discretization of a metric tree for the mesh random walk: every edge is
/// split into ceil(len/h) equal segments, so effective spacing varies per
/// edge but never exceeds h and branch nodes are preserved exactly.
class MeshGraph {
public:
    MeshGraph(const MetricTree& t, double h);

    const MetricTree& host() const { return *host_; }
    double spacing() const { return h_; }
    int node_count() const { return static_cast<int>(point_.size()); }
    const TreePoint& point(int m) const { return point_[m]; }
    int degree(int m) const { return static_cast<int>(nbr_[m].size()); }
    const std::vector<int>& neighbours(int m) const { return nbr_[m]; }
    /// Mesh node for a host tree node.
    int node_of(int tree_node) const { return tree_node_mesh_[tree_node]; }
    /// Nearest mesh node to an arbitrary host point.
    int nearest(TreePoint p) const;

    /// Per-step clock increment at node m under the normalized-length speed
    /// measure: (sum of incident spacings / sum of inverse spacings) / Lambda.
    /// Uniform spacing s gives s^2/Lambda; mixed spacings at branch nodes
    /// keep the one-dimensional mean exit time exact.
    double clock_increment(int m) const { return dt_[m]; }
    /// Jump probabilities are proportional to inverse incident spacing; draw
    /// the next node from m.
    int step(int m, Rng& rng) const;

    /// Length of the half-segment cell around node m (normalized length
    /// measure of the cell is cell_length/Lambda).
    double cell_length(int m) const { return cell_[m]; }
    double total_length() const { return host_->total_length(); }

private:
    const MetricTree* host_;
    double h_;
    std::vector<TreePoint> point_;
    std::vector<std::vector<int>> nbr_;
    std::vector<std::vector<double>> cum_;  // cumulative jump probabilities
    std::vector<double> dt_;
    std::vector<double> cell_;
    std::vector<int> tree_node_mesh_;
    std::vector<std::vector<int>> edge_nodes_;  // per host edge, interior+end mesh nodes
};

/// Mesh-walk trajectory with its real-time clock.
struct BMPath {
    const MeshGraph* mesh;
    std::vector<int> nodes;
    std::vector<double> clock;  // clock[m] = time after m steps
};

BMPath run_bm(const MeshGraph& mesh, double t_end, TreePoint start, Rng& rng);

/// Visit-count local-time field of a path at a given clock time:
/// L(node) = (time spent at node) / normalized cell length. The bookkeeping
/// identity integral L d(lambda/Lambda) = t holds exactly at step boundaries.
std::vector<double> local_time_field(const BMPath& path, double t);

/// P_sigma(hit sigma1 before sigma2) = d(b(sigma,sigma1,sigma2), sigma2) /
/// d(sigma1, sigma2); measure-free.
double hitting_probability_exact(const MetricTree& t, TreePoint sigma, TreePoint sigma1,
                                 TreePoint sigma2);

/// E_{sigma1} h(sigma2) = 2 * integral of d(b(s,sigma1,sigma2), sigma2)
/// mu(ds), closed form for atoms plus piecewise-constant densities.
double mean_hitting_time_exact(const MetricTree& t, const TreeMeasure& mu, TreePoint sigma1,
                               TreePoint sigma2);

/// nu-mass of each mesh cell: atoms snap to the nearest mesh node, densities
/// integrate over the half-segment cells.
std::vector<double> cell_masses(const MeshGraph& mesh, const TreeMeasure& nu);

/// Speed-measure change: reclock the path by the additive functional
/// A-hat_t = integral of L_t d(nu) so the result is the mesh analogue of the
/// Brownian motion with speed measure nu. Visit order is untouched.
BMPath bm_time_changed(const BMPath& base, const TreeMeasure& nu);

/// Exit law from the ball of radius eps1 around a branch node, started on
/// the eps1/2-sphere along the given incident edge. Entry 0 is the exit in
/// the walker's own component of the complement of the branch node, then the
/// remaining incident edges in order.
struct BranchExitLaw {
    std::vector<TreePoint> exits;
    std::vector<double> prob;
};

/// Closed form: own-component (1+N)/(2N), each other arm 1/(2N), N = degree.
BranchExitLaw branch_exit_law(const MetricTree& t, int branch_node, double eps1,
                              int arm_index = 0);
/// Independent oracle: harmonic voltages of the electrical network with
/// conductance 1/length per segment (gambler's-ruin on the star).
BranchExitLaw branch_exit_law_oracle(const MetricTree& t, int branch_node, double eps1,
                                     int arm_index = 0);

} // namespace dendrite
