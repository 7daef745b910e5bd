#include "dendrite/metric_tree.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dendrite {

namespace {
constexpr double kMergeTol = 1e-9;
}

MetricTree::MetricTree(int node_count, std::vector<Edge> edges, int root,
                       std::vector<TreePoint> leaf_order)
    : root_(root), edges_(std::move(edges)), leaf_order_(std::move(leaf_order)) {
    if (node_count < 1 || root < 0 || root >= node_count)
        throw std::invalid_argument("bad node count or root");
    if (static_cast<int>(edges_.size()) != node_count - 1)
        throw std::invalid_argument("a tree on n nodes has n-1 edges");
    node_parent_.assign(node_count, -1);
    node_parent_edge_.assign(node_count, -1);
    node_order_.assign(node_count, 0);
    node_depth_.assign(node_count, 0.0);
    incident_.assign(node_count, {});
    total_length_ = 0.0;
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= node_count || ed.v < 0 || ed.v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (!(ed.len > 0.0)) throw std::invalid_argument("edge lengths must be positive");
        incident_[ed.u].push_back(e);
        incident_[ed.v].push_back(e);
        total_length_ += ed.len;
    }
    root_and_index();
}

void MetricTree::root_and_index() {
    // Orient every edge parent -> child by a DFS from the root.
    std::vector<char> seen(node_count(), 0);
    std::vector<int> stack{root_};
    seen[root_] = 1;
    int visited = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++visited;
        for (int e : incident_[u]) {
            Edge& ed = edges_[e];
            const int w = (ed.u == u) ? ed.v : ed.u;
            if (seen[w]) continue;
            seen[w] = 1;
            if (ed.u != u) std::swap(ed.u, ed.v);
            node_parent_[w] = u;
            node_parent_edge_[w] = e;
            node_order_[w] = node_order_[u] + 1;
            node_depth_[w] = node_depth_[u] + ed.len;
            stack.push_back(w);
        }
    }
    if (visited != node_count()) throw std::invalid_argument("edges do not form a tree");
}

std::vector<int> MetricTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (v != root_ && degree(v) == 1) out.push_back(v);
    return out;
}

double MetricTree::min_edge_length() const {
    double m = edges_.empty() ? 0.0 : edges_[0].len;
    for (const Edge& e : edges_) m = std::min(m, e.len);
    return m;
}

double MetricTree::diameter() const {
    auto farthest = [&](int src) {
        std::vector<double> dist(node_count(), -1.0);
        std::vector<int> stack{src};
        dist[src] = 0.0;
        int best = src;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            if (dist[u] > dist[best]) best = u;
            for (int e : incident_[u]) {
                const Edge& ed = edges_[e];
                const int w = (ed.u == u) ? ed.v : ed.u;
                if (dist[w] < 0.0) {
                    dist[w] = dist[u] + ed.len;
                    stack.push_back(w);
                }
            }
        }
        return std::pair{best, dist[best]};
    };
    const int a = farthest(root_).first;
    return farthest(a).second;
}

void MetricTree::set_leaf_order(std::vector<TreePoint> order) {
    for (auto& p : order) p = canonical(p);
    leaf_order_ = std::move(order);
}

void MetricTree::validate_shape() const {
    for (int v = 0; v < node_count(); ++v) {
        if (v == root_) continue;
        if (degree(v) == 2) throw std::domain_error("interior node of degree 2");
        if (degree(v) == 0) throw std::domain_error("isolated node");
    }
}

TreePoint MetricTree::canonical(TreePoint p) const {
    if (p.node >= 0) {
        if (p.node >= node_count()) throw std::domain_error("node index out of range");
        return TreePoint::at_node(p.node);
    }
    if (p.edge < 0 || p.edge >= edge_count()) throw std::domain_error("edge index out of range");
    const Edge& e = edges_[p.edge];
    if (p.offset < -kPointTol || p.offset > e.len + kPointTol)
        throw std::domain_error("edge offset out of range");
    if (p.offset <= kPointTol) return TreePoint::at_node(e.u);
    if (p.offset >= e.len - kPointTol) return TreePoint::at_node(e.v);
    return p;
}

bool MetricTree::same_point(TreePoint a, TreePoint b) const {
    a = canonical(a);
    b = canonical(b);
    if (a.node >= 0 || b.node >= 0) return a.node == b.node;
    return a.edge == b.edge && std::abs(a.offset - b.offset) <= kPointTol;
}

double MetricTree::depth(TreePoint p) const {
    p = canonical(p);
    if (p.node >= 0) return node_depth_[p.node];
    return node_depth_[edges_[p.edge].u] + p.offset;
}

double MetricTree::distance(TreePoint a, TreePoint b) const {
    a = canonical(a);
    b = canonical(b);
    auto ndist = [&](int x, int y) {
        double d = 0.0;
        while (node_order_[x] > node_order_[y]) {
            d += edges_[node_parent_edge_[x]].len;
            x = node_parent_[x];
        }
        while (node_order_[y] > node_order_[x]) {
            d += edges_[node_parent_edge_[y]].len;
            y = node_parent_[y];
        }
        while (x != y) {
            d += edges_[node_parent_edge_[x]].len + edges_[node_parent_edge_[y]].len;
            x = node_parent_[x];
            y = node_parent_[y];
        }
        return d;
    };
    if (a.node >= 0 && b.node >= 0) return ndist(a.node, b.node);
    if (a.node >= 0) std::swap(a, b);
    // a is now an interior edge point.
    const Edge& ea = edges_[a.edge];
    if (b.node >= 0)
        return std::min(a.offset + ndist(ea.u, b.node),
                        (ea.len - a.offset) + ndist(ea.v, b.node));
    if (a.edge == b.edge) return std::abs(a.offset - b.offset);
    const Edge& eb = edges_[b.edge];
    const double au = a.offset, av = ea.len - a.offset;
    const double bu = b.offset, bv = eb.len - b.offset;
    return std::min({au + ndist(ea.u, eb.u) + bu, au + ndist(ea.u, eb.v) + bv,
                     av + ndist(ea.v, eb.u) + bu, av + ndist(ea.v, eb.v) + bv});
}

double MetricTree::gromov(TreePoint a, TreePoint b) const {
    return 0.5 * (depth(a) + depth(b) - distance(a, b));
}

TreePoint MetricTree::point_on_root_path(TreePoint p, double height) const {
    p = canonical(p);
    const double dp = depth(p);
    if (height < -kMergeTol || height > dp + kMergeTol)
        throw std::domain_error("height not on the root path");
    height = std::clamp(height, 0.0, dp);
    int c;
    if (p.node >= 0) {
        c = p.node;
    } else {
        const Edge& e = edges_[p.edge];
        if (height >= node_depth_[e.u])
            return canonical(TreePoint::on_edge(p.edge, height - node_depth_[e.u]));
        c = e.u;
    }
    while (c != root_ && node_depth_[node_parent_[c]] > height)
        c = node_parent_[c];
    if (c == root_ || std::abs(node_depth_[c] - height) <= kPointTol)
        return TreePoint::at_node(c);
    return canonical(
        TreePoint::on_edge(node_parent_edge_[c], height - node_depth_[node_parent_[c]]));
}

TreePoint MetricTree::point_along_path(TreePoint a, TreePoint b, double dist) const {
    const double dab = distance(a, b);
    if (dist < -kMergeTol || dist > dab + kMergeTol)
        throw std::domain_error("distance not within the path");
    dist = std::clamp(dist, 0.0, dab);
    const double g = gromov(a, b);
    const double da = depth(a);
    if (dist <= da - g) return point_on_root_path(a, da - dist);
    return point_on_root_path(b, g + (dist - (da - g)));
}

TreePoint MetricTree::branch_point(TreePoint a, TreePoint b, TreePoint c) const {
    const double m = 0.5 * (distance(a, b) + distance(a, c) - distance(b, c));
    return point_along_path(a, b, m);
}

std::vector<TreePoint> MetricTree::net_points(double spacing) const {
    if (!(spacing > 0.0)) throw std::domain_error("spacing must be positive");
    std::vector<TreePoint> pts;
    for (int v = 0; v < node_count(); ++v) pts.push_back(TreePoint::at_node(v));
    for (int e = 0; e < edge_count(); ++e) {
        const int m = static_cast<int>(std::ceil(edges_[e].len / spacing));
        for (int i = 1; i < m; ++i)
            pts.push_back(TreePoint::on_edge(e, edges_[e].len * i / m));
    }
    return pts;
}

MetricTree MetricTree::scaled(double c) const {
    if (!(c > 0.0)) throw std::domain_error("scale factor must be positive");
    std::vector<Edge> es = edges_;
    for (auto& e : es) e.len *= c;
    std::vector<TreePoint> lo = leaf_order_;
    for (auto& p : lo)
        if (p.edge >= 0) p.offset *= c;
    return MetricTree(node_count(), std::move(es), root_, std::move(lo));
}

double TreeMeasure::total_mass(const MetricTree& t) const {
    double m = 0.0;
    for (const auto& [p, w] : atoms) m += w;
    for (int e = 0; e < static_cast<int>(density.size()); ++e) m += density[e] * t.edge(e).len;
    return m;
}

void TreeMeasure::normalize(const MetricTree& t) {
    std::map<int, double> node_mass;
    std::map<int, std::vector<std::pair<double, double>>> edge_mass;
    for (auto& [p, w] : atoms) {
        const TreePoint q = t.canonical(p);
        if (q.node >= 0)
            node_mass[q.node] += w;
        else
            edge_mass[q.edge].push_back({q.offset, w});
    }
    atoms.clear();
    for (const auto& [n, w] : node_mass) atoms.push_back({TreePoint::at_node(n), w});
    for (auto& [e, lst] : edge_mass) {
        std::sort(lst.begin(), lst.end());
        for (std::size_t i = 0; i < lst.size(); ++i) {
            double off = lst[i].first, w = lst[i].second;
            while (i + 1 < lst.size() && lst[i + 1].first - off <= kMergeTol)
                w += lst[++i].second;
            atoms.push_back({TreePoint::on_edge(e, off), w});
        }
    }
}

TreeMeasure length_measure(const MetricTree& t, bool normalized) {
    TreeMeasure mu;
    const double d = normalized ? 1.0 / t.total_length() : 1.0;
    mu.density.assign(t.edge_count(), d);
    return mu;
}

// ---- incremental builder -------------------------------------------------

int IncrementalTreeBuilder::split_at(int leaf_node, double height) {
    int c = leaf_node;
    while (nodes_[c].parent != -1 && nodes_[nodes_[c].parent].depth >= height - kMergeTol)
        c = nodes_[c].parent;
    if (std::abs(nodes_[c].depth - height) <= kMergeTol) return c;
    if (nodes_[c].parent == -1) throw std::domain_error("attach height above the leaf path");
    const int p = nodes_[c].parent;
    const int w = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{p, height - nodes_[p].depth, height, {c}});
    auto& pc = nodes_[p].children;
    *std::find(pc.begin(), pc.end(), c) = w;
    nodes_[c].parent = w;
    nodes_[c].parent_len = nodes_[c].depth - height;
    return w;
}

void IncrementalTreeBuilder::add_leaf(double root_dist, std::span<const double> dists_to_prev) {
    if (root_dist < -kMergeTol) throw std::domain_error("negative root distance");
    if (dists_to_prev.size() != leaf_nodes_.size())
        throw std::invalid_argument("need one distance per existing leaf");
    double h = 0.0;
    int best = -1;
    for (std::size_t i = 0; i < leaf_nodes_.size(); ++i) {
        const double g = 0.5 * (leaf_depths_[i] + root_dist - dists_to_prev[i]);
        if (g > h) {
            h = g;
            best = static_cast<int>(i);
        }
    }
    h = std::min(h, root_dist);
    const int attach = (best < 0 || h <= kMergeTol)
                           ? 0
                           : split_at(leaf_nodes_[best], std::min(h, leaf_depths_[best]));
    int leaf;
    if (root_dist - h <= kMergeTol) {
        leaf = attach;
    } else {
        leaf = static_cast<int>(nodes_.size());
        nodes_.push_back(Node{attach, root_dist - h, root_dist, {}});
        nodes_[attach].children.push_back(leaf);
    }
    leaf_nodes_.push_back(leaf);
    leaf_depths_.push_back(std::max(root_dist, 0.0));
}

MetricTree IncrementalTreeBuilder::build() const {
    // Contract non-root chain nodes (exactly one child) and renumber the rest
    // in preorder; remember where every original node lands.
    struct Pos {
        int node = -1;
        int edge = -1;
        double offset = 0.0;
    };
    std::vector<Pos> pos(nodes_.size());
    std::vector<MetricTree::Edge> edges;
    int next_id = 0;
    struct Frame {
        int orig;
        int final_parent;
        double len_so_far;
        std::vector<Pos*> pending;   // chain nodes waiting for their edge id
    };
    std::vector<Frame> stack;
    pos[0].node = next_id++;
    for (int c : nodes_[0].children)
        stack.push_back(Frame{c, pos[0].node, 0.0, {}});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        int cur = f.orig;
        double len = f.len_so_far + nodes_[cur].parent_len;
        while (nodes_[cur].children.size() == 1) {
            pos[cur].edge = -2;   // filled in once the edge exists
            pos[cur].offset = len;
            f.pending.push_back(&pos[cur]);
            cur = nodes_[cur].children[0];
            len += nodes_[cur].parent_len;
        }
        const int id = next_id++;
        pos[cur].node = id;
        const int eid = static_cast<int>(edges.size());
        edges.push_back({f.final_parent, id, len});
        for (Pos* p : f.pending) p->edge = eid;
        for (auto it = nodes_[cur].children.rbegin(); it != nodes_[cur].children.rend(); ++it)
            stack.push_back(Frame{*it, id, 0.0, {}});
    }
    std::vector<TreePoint> leaf_order;
    for (int ln : leaf_nodes_) {
        if (pos[ln].node >= 0)
            leaf_order.push_back(TreePoint::at_node(pos[ln].node));
        else
            leaf_order.push_back(TreePoint::on_edge(pos[ln].edge, pos[ln].offset));
    }
    MetricTree t(next_id, std::move(edges), 0);
    t.set_leaf_order(std::move(leaf_order));
    return t;
}

// ---- spanning subtree ----------------------------------------------------

SpanningSubtree::SpanningSubtree(const MetricTree& host, std::vector<TreePoint> targets)
    : host_(&host), targets_(std::move(targets)) {
    if (targets_.empty()) throw std::domain_error("spanning subtree needs at least one target");
    for (auto& p : targets_) p = host.canonical(p);
    IncrementalTreeBuilder b;
    std::vector<double> dists;
    for (std::size_t j = 0; j < targets_.size(); ++j) {
        dists.clear();
        for (std::size_t i = 0; i < j; ++i)
            dists.push_back(host.distance(targets_[j], targets_[i]));
        b.add_leaf(host.depth(targets_[j]), dists);
    }
    sub_ = b.build();
}

TreePoint SpanningSubtree::project(TreePoint p) const {
    double h = 0.0;
    for (const auto& s : targets_) h = std::max(h, host_->gromov(p, s));
    return host_->point_on_root_path(p, std::min(h, host_->depth(p)));
}

TreePoint SpanningSubtree::to_sub(TreePoint host_point) const {
    const double d = host_->depth(host_point);
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        if (host_->gromov(host_point, targets_[i]) >= d - kMergeTol)
            return sub_.point_on_root_path(sub_.leaf_order()[i], d);
    }
    throw std::domain_error("point does not lie on the spanning subtree");
}

TreePoint SpanningSubtree::to_host(TreePoint sub_point) const {
    const double d = sub_.depth(sub_point);
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        if (sub_.gromov(sub_point, sub_.leaf_order()[i]) >= d - kMergeTol)
            return host_->point_on_root_path(targets_[i], d);
    }
    throw std::domain_error("point not recognised on the subtree");
}

TreeMeasure SpanningSubtree::pushforward(const TreeMeasure& mu) const {
    TreeMeasure out;
    std::vector<double> edge_mass(sub_.edge_count(), 0.0);
    // Adds mass at linear density rho over the depth window [a,b] of the
    // root path of designated leaf `li` of the subtree.
    auto add_along = [&](int li, double a, double b, double rho) {
        TreePoint lp = sub_.leaf_order()[li];
        int c;
        int e;
        if (lp.edge >= 0) {
            e = lp.edge;
            c = sub_.edge(e).u;
        } else {
            c = lp.node;
            if (c == sub_.root()) return;
            e = sub_.parent_edge(c);
            c = sub_.parent_node(c);
        }
        while (true) {
            const double lo = sub_.node_depth(sub_.edge(e).u);
            const double hi = lo + sub_.edge(e).len;
            const double ov = std::min(hi, b) - std::max(lo, a);
            if (ov > 0.0) edge_mass[e] += rho * ov;
            if (lo <= a || c == sub_.root()) break;
            e = sub_.parent_edge(c);
            c = sub_.parent_node(c);
        }
    };
    for (const auto& [p, w] : mu.atoms) out.atoms.push_back({to_sub(project(p)), w});
    if (!mu.density.empty()) {
        for (int e = 0; e < host_->edge_count(); ++e) {
            const double rho = mu.density[e];
            if (rho == 0.0) continue;
            const auto& ed = host_->edge(e);
            const double du = host_->node_depth(ed.u);
            const double dv = du + ed.len;
            double gstar = 0.0;
            int istar = 0;
            const TreePoint vp = TreePoint::at_node(ed.v);
            for (std::size_t i = 0; i < targets_.size(); ++i) {
                const double g = host_->gromov(vp, targets_[i]);
                if (g > gstar) {
                    gstar = g;
                    istar = static_cast<int>(i);
                }
            }
            const double cut = std::clamp(gstar, du, dv);
            if (cut > du + MetricTree::kPointTol) add_along(istar, du, cut, rho);
            if (cut < dv - MetricTree::kPointTol) {
                const double h = std::min(gstar, dv);
                out.atoms.push_back(
                    {sub_.point_on_root_path(sub_.leaf_order()[istar], h), rho * (dv - cut)});
            }
        }
    }
    out.density.assign(sub_.edge_count(), 0.0);
    for (int e = 0; e < sub_.edge_count(); ++e) out.density[e] = edge_mass[e] / sub_.edge(e).len;
    out.normalize(sub_);
    return out;
}

// ---- serialization -------------------------------------------------------

std::string to_text(const MetricTree& t) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "n " << t.node_count() << "\n";
    std::vector<int> order(t.node_count(), 0);
    std::vector<int> seen(t.node_count(), 0);
    for (const auto& e : t.edges()) order[e.v] = seen[e.u]++;
    for (int v = 0; v < t.node_count(); ++v)
        out << v << " " << (v == t.root() ? -1 : t.parent_node(v)) << " " << order[v] << "\n";
    for (const auto& e : t.edges()) out << "edge " << e.u << " " << e.v << " " << e.len << "\n";
    for (const auto& p : t.leaf_order()) {
        if (p.node >= 0)
            out << "leaf n " << p.node << "\n";
        else
            out << "leaf e " << p.edge << " " << p.offset << "\n";
    }
    return out.str();
}

MetricTree metric_tree_from_text(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "n" || n < 1) throw std::runtime_error("bad tree header");
    int root = -1;
    for (int i = 0; i < n; ++i) {
        int id = 0, p = 0, ord = 0;
        if (!(in >> id >> p >> ord) || id != i) throw std::runtime_error("bad tree node line");
        if (p == -1) root = i;
    }
    if (root < 0) throw std::runtime_error("no root node");
    std::vector<MetricTree::Edge> edges;
    std::vector<TreePoint> leaf_order;
    while (in >> tag) {
        if (tag == "edge") {
            int u, v;
            double len;
            if (!(in >> u >> v >> len)) throw std::runtime_error("bad edge line");
            edges.push_back({u, v, len});
        } else if (tag == "leaf") {
            std::string kind;
            if (!(in >> kind)) throw std::runtime_error("bad leaf line");
            if (kind == "n") {
                int v;
                in >> v;
                leaf_order.push_back(TreePoint::at_node(v));
            } else if (kind == "e") {
                int e;
                double off;
                in >> e >> off;
                leaf_order.push_back(TreePoint::on_edge(e, off));
            } else {
                throw std::runtime_error("bad leaf line");
            }
        } else {
            throw std::runtime_error("unexpected line: " + tag);
        }
    }
    MetricTree t(n, std::move(edges), root);
    t.set_leaf_order(std::move(leaf_order));
    return t;
}

MetricTree make_segment(double length) {
    return MetricTree(2, {{0, 1, length}}, 0, {TreePoint::at_node(1)});
}

MetricTree make_star_rooted_at_tip(std::span<const double> arms) {
    if (arms.size() < 2) throw std::invalid_argument("need at least two arms");
    std::vector<MetricTree::Edge> edges{{0, 1, arms[0]}};
    std::vector<TreePoint> lo;
    for (std::size_t i = 1; i < arms.size(); ++i) {
        edges.push_back({1, static_cast<int>(i) + 1, arms[i]});
        lo.push_back(TreePoint::at_node(static_cast<int>(i) + 1));
    }
    return MetricTree(static_cast<int>(arms.size()) + 1, std::move(edges), 0, std::move(lo));
}

MetricTree make_star_rooted_at_center(std::span<const double> arms) {
    if (arms.empty()) throw std::invalid_argument("need at least one arm");
    std::vector<MetricTree::Edge> edges;
    std::vector<TreePoint> lo;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        edges.push_back({0, static_cast<int>(i) + 1, arms[i]});
        lo.push_back(TreePoint::at_node(static_cast<int>(i) + 1));
    }
    return MetricTree(static_cast<int>(arms.size()) + 1, std::move(edges), 0, std::move(lo));
}

} // namespace dendrite
