#include "dendrite/ordered_tree.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dendrite {

OrderedTree OrderedTree::from_parents(std::vector<int> parent) {
    if (parent.empty()) throw std::invalid_argument("tree must have at least one vertex");
    if (parent[0] != -1) throw std::invalid_argument("vertex 0 must be the root");
    const int n = static_cast<int>(parent.size());
    OrderedTree t;
    t.parent_ = std::move(parent);
    t.children_.assign(n, {});
    t.depth_.assign(n, 0);
    for (int v = 1; v < n; ++v) {
        const int p = t.parent_[v];
        if (p < 0 || p >= v)
            throw std::invalid_argument("vertices must be in preorder with parent < child");
        t.children_[p].push_back(v);
        t.depth_[v] = t.depth_[p] + 1;
    }
    t.nbrs_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (v != 0) t.nbrs_[v].push_back(t.parent_[v]);
        for (int c : t.children_[v]) t.nbrs_[v].push_back(c);
    }
    return t;
}

int OrderedTree::degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

int graph_distance(const OrderedTree& t, int u, int v) {
    if (u < 0 || u >= t.size() || v < 0 || v >= t.size())
        throw std::domain_error("invalid vertex index");
    int d = 0;
    while (t.depth(u) > t.depth(v)) { u = t.parent(u); ++d; }
    while (t.depth(v) > t.depth(u)) { v = t.parent(v); ++d; }
    while (u != v) { u = t.parent(u); v = t.parent(v); d += 2; }
    return d;
}

GraphSubtree::GraphSubtree(const OrderedTree& host, std::span<const int> targets) : host_(&host) {
    if (targets.empty()) throw std::domain_error("spanning subtree needs at least one target");
    in_sub_.assign(host.size(), 0);
    in_sub_[host.root()] = 1;
    for (int v : targets) {
        if (v < 0 || v >= host.size()) throw std::domain_error("invalid target vertex");
        while (v != -1 && !in_sub_[v]) { in_sub_[v] = 1; v = host.parent(v); }
    }
    degree_.assign(host.size(), 0);
    for (int v = 0; v < host.size(); ++v) {
        if (!in_sub_[v]) continue;
        verts_.push_back(v);
        if (v != host.root() && in_sub_[host.parent(v)]) {
            ++degree_[v];
            ++degree_[host.parent(v)];
        }
    }
}

int GraphSubtree::project(int v) const {
    if (v < 0 || v >= host_->size()) throw std::domain_error("invalid vertex index");
    while (!in_sub_[v]) v = host_->parent(v);
    return v;
}

std::unordered_map<int, double> GraphSubtree::pushforward_uniform() const {
    std::unordered_map<int, double> mass;
    const double w = 1.0 / host_->size();
    for (int v = 0; v < host_->size(); ++v) mass[project(v)] += w;
    return mass;
}

int GraphSubtree::max_projection_displacement() const {
    int best = 0;
    for (int v = 0; v < host_->size(); ++v)
        best = std::max(best, graph_distance(*host_, v, project(v)));
    return best;
}

std::string to_text(const OrderedTree& t) {
    std::ostringstream out;
    out << "n " << t.size() << "\n";
    std::vector<int> order(t.size(), 0);
    for (int v = 0; v < t.size(); ++v) {
        const auto& cs = t.children(v);
        for (int i = 0; i < static_cast<int>(cs.size()); ++i) order[cs[i]] = i;
    }
    for (int v = 0; v < t.size(); ++v)
        out << v << " " << t.parent(v) << " " << order[v] << "\n";
    return out.str();
}

OrderedTree ordered_tree_from_text(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "n" || n < 1)
        throw std::runtime_error("bad tree header");
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int id = 0, p = 0, ord = 0;
        if (!(in >> id >> p >> ord) || id != i)
            throw std::runtime_error("bad tree vertex line");
        parent[i] = p;
    }
    return OrderedTree::from_parents(std::move(parent));
}

} // namespace dendrite
