#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dendrite {

/// A point of a metric tree: either a node, or an interior point of an edge
/// at `offset` from the edge's parent-side endpoint. Canonicalized by
/// MetricTree::canonical so that node-coincident offsets compare equal.
struct TreePoint {
    int node = -1;   // >= 0 for node points
    int edge = -1;   // >= 0 for interior edge points
    double offset = 0.0;

    static TreePoint at_node(int n) { return TreePoint{n, -1, 0.0}; }
    static TreePoint on_edge(int e, double off) { return TreePoint{-1, e, off}; }
};

/// Finite-branch rooted real tree: positive edge lengths, a root, and an
/// ordered designated leaf sequence. Immutable after construction.
class MetricTree {
public:
    struct Edge {
        int u;        // parent-side endpoint after construction
        int v;        // child-side endpoint
        double len;
    };

    MetricTree() = default;
    /// Edges may be given in either orientation; they are re-oriented away
    /// from the root. Throws on cycles, disconnection or non-positive lengths.
    MetricTree(int node_count, std::vector<Edge> edges, int root,
               std::vector<TreePoint> leaf_order = {});

    int node_count() const { return static_cast<int>(node_parent_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int root() const { return root_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int n) const { return static_cast<int>(incident_[n].size()); }
    const std::vector<int>& incident_edges(int n) const { return incident_[n]; }
    int parent_node(int n) const { return node_parent_[n]; }
    int parent_edge(int n) const { return node_parent_edge_[n]; }
    double node_depth(int n) const { return node_depth_[n]; }
    double total_length() const { return total_length_; }
    std::vector<int> leaves() const;
    double diameter() const;
    double min_edge_length() const;

    const std::vector<TreePoint>& leaf_order() const { return leaf_order_; }
    void set_leaf_order(std::vector<TreePoint> order);

    /// Checks the public invariants: internal nodes of degree >= 3 (or the
    /// root), leaves of degree 1. Refined trees used internally skip this.
    void validate_shape() const;

    TreePoint canonical(TreePoint p) const;
    bool same_point(TreePoint a, TreePoint b) const;
    double depth(TreePoint p) const;        // distance from the root
    double distance(TreePoint a, TreePoint b) const;
    double gromov(TreePoint a, TreePoint b) const;  // branch height with the root
    /// The point at the given distance from the root on [[root, p]].
    TreePoint point_on_root_path(TreePoint p, double height) const;
    /// The point at distance `dist` from a along [[a, b]].
    TreePoint point_along_path(TreePoint a, TreePoint b, double dist) const;
    /// The unique point in [[a,b]] cap [[b,c]] cap [[c,a]].
    TreePoint branch_point(TreePoint a, TreePoint b, TreePoint c) const;

    /// Points spaced at most `spacing` apart along every edge, plus all nodes.
    std::vector<TreePoint> net_points(double spacing) const;

    /// Uniform rescaling of all edge lengths by c > 0.
    MetricTree scaled(double c) const;

    static constexpr double kPointTol = 1e-12;

private:
    void root_and_index();

    int root_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> node_parent_;
    std::vector<int> node_parent_edge_;
    std::vector<int> node_order_;   // integer depth for LCA climbing
    std::vector<double> node_depth_;
    std::vector<TreePoint> leaf_order_;
    double total_length_ = 0.0;
};

/// Finite measure on a metric tree: point atoms plus a constant density per
/// edge. Either part may be empty.
struct TreeMeasure {
    std::vector<std::pair<TreePoint, double>> atoms;
    std::vector<double> density;   // per edge; empty means all-zero

    double total_mass(const MetricTree& t) const;
    /// Merges atoms at coinciding canonical points.
    void normalize(const MetricTree& t);
};

TreeMeasure length_measure(const MetricTree& t, bool normalized);

/// The minimal subtree spanning the root and the target points, with
/// degree-2 points contracted away. Provides the natural projection from the
/// host and the measure pushforward under it.
class SpanningSubtree {
public:
    SpanningSubtree(const MetricTree& host, std::vector<TreePoint> targets);

    const MetricTree& host() const { return *host_; }
    /// The contracted subtree; its leaf_order records the target images in
    /// target order.
    const MetricTree& tree() const { return sub_; }
    const std::vector<TreePoint>& targets() const { return targets_; }

    /// Nearest point of the subtree, in host coordinates.
    TreePoint project(TreePoint p) const;
    /// Coordinates in tree() of a host point lying on the subtree.
    TreePoint to_sub(TreePoint host_point) const;
    TreePoint to_host(TreePoint sub_point) const;

    /// mu on the host mapped through the projection; a measure on tree().
    TreeMeasure pushforward(const TreeMeasure& mu) const;

private:
    const MetricTree* host_;
    std::vector<TreePoint> targets_;
    MetricTree sub_;
};

/// Grows a metric tree leaf by leaf from root distances and pairwise leaf
/// distances (which must satisfy the four-point condition). Leaf j attaches
/// at the height given by the largest Gromov product with earlier leaves.
class IncrementalTreeBuilder {
public:
    /// dists_to_prev[i] = distance between the new leaf and leaf i.
    void add_leaf(double root_dist, std::span<const double> dists_to_prev);
    int leaf_count() const { return static_cast<int>(leaf_nodes_.size()); }
    /// Finished tree with degree-2 points contracted; leaf_order holds the
    /// inserted leaves in insertion order.
    MetricTree build() const;

private:
    struct Node {
        int parent = -1;
        double parent_len = 0.0;
        double depth = 0.0;
        std::vector<int> children;
    };
    int split_at(int leaf_node, double height);

    std::vector<Node> nodes_{1, Node{}};
    std::vector<int> leaf_nodes_;
    std::vector<double> leaf_depths_;
};

/// Metric tree text serialization (shares the header with the graph format):
/// "n <count>", node lines "id parent child-order", then "edge u v length"
/// lines in preorder, then optional "leaf <node>" designation lines.
std::string to_text(const MetricTree& t);
MetricTree metric_tree_from_text(std::istream& in);

/// Fixture helpers used across tests and the CLI.
MetricTree make_segment(double length);
/// Star with the given arm lengths; root at the tip of the first arm, the
/// remaining arm tips in order as designated leaves.
MetricTree make_star_rooted_at_tip(std::span<const double> arms);
/// Star rooted at the centre; arm tips are the designated leaves.
MetricTree make_star_rooted_at_center(std::span<const double> arms);

} // namespace dendrite
