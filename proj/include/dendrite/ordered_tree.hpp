#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dendrite {

/// Rooted ordered (plane) tree on vertices 0..n-1 in preorder; vertex 0 is
/// the root. Immutable after construction.
class OrderedTree {
public:
    /// parent[0] must be -1; every other parent[v] < v. Children keep the
    /// order in which they appear.
    static OrderedTree from_parents(std::vector<int> parent);

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return 0; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    int depth(int v) const { return depth_[v]; }
    int degree(int v) const;

    /// Neighbours (parent + children), used by the random walk.
    const std::vector<int>& neighbours(int v) const { return nbrs_[v]; }

    bool operator==(const OrderedTree& other) const { return parent_ == other.parent_; }

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> depth_;
};

/// Edge count of the unique u-v path.
int graph_distance(const OrderedTree& t, int u, int v);

/// Minimal vertex set containing the root and all targets, closed under
/// taking parents. Degree-2 vertices are kept (vertex-induced subtree).
class GraphSubtree {
public:
    GraphSubtree(const OrderedTree& host, std::span<const int> targets);

    const OrderedTree& host() const { return *host_; }
    bool contains(int v) const { return in_sub_[v]; }
    /// Vertices of the subtree in increasing order.
    const std::vector<int>& vertices() const { return verts_; }
    int degree(int v) const { return degree_[v]; }
    int edge_count() const { return static_cast<int>(verts_.size()) - 1; }

    /// Nearest point of the subtree: the closest ancestor belonging to it.
    int project(int v) const;

    /// Pushforward of the uniform vertex measure of the host; vertex -> mass.
    std::unordered_map<int, double> pushforward_uniform() const;

    /// max_v d(v, project(v)).
    int max_projection_displacement() const;

private:
    const OrderedTree* host_;
    std::vector<int> verts_;
    std::vector<char> in_sub_;
    std::vector<int> degree_;
};

/// Line-oriented text serialization: "n <count>" then "id parent child-order"
/// per vertex in preorder.
std::string to_text(const OrderedTree& t);
OrderedTree ordered_tree_from_text(std::istream& in);

} // namespace dendrite
