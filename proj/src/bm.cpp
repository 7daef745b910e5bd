#include "dendrite/bm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dendrite {

MeshGraph::MeshGraph(const MetricTree& t, double h) : host_(&t), h_(h) {
    if (!(h > 0.0)) throw std::domain_error("mesh spacing must be positive");
    if (t.edge_count() > 0 && h > t.min_edge_length() + MetricTree::kPointTol)
        throw std::domain_error("mesh spacing exceeds the shortest edge");
    const int nn = t.node_count();
    tree_node_mesh_.resize(nn);
    for (int v = 0; v < nn; ++v) {
        tree_node_mesh_[v] = v;
        point_.push_back(TreePoint::at_node(v));
    }
    nbr_.resize(nn);
    std::vector<std::vector<double>> seg(nn);  // incident segment lengths
    edge_nodes_.resize(t.edge_count());
    auto link = [&](int a, int b, double s) {
        nbr_[a].push_back(b);
        nbr_[b].push_back(a);
        seg[a].push_back(s);
        seg[b].push_back(s);
    };
    for (int e = 0; e < t.edge_count(); ++e) {
        const auto& ed = t.edge(e);
        const int m = std::max(1, static_cast<int>(std::ceil(ed.len / h - 1e-12)));
        const double s = ed.len / m;
        int prev = tree_node_mesh_[ed.u];
        edge_nodes_[e].push_back(prev);
        for (int i = 1; i < m; ++i) {
            const int id = static_cast<int>(point_.size());
            point_.push_back(TreePoint::on_edge(e, s * i));
            nbr_.emplace_back();
            seg.emplace_back();
            link(prev, id, s);
            prev = id;
            edge_nodes_[e].push_back(id);
        }
        link(prev, tree_node_mesh_[ed.v], s);
        edge_nodes_[e].push_back(tree_node_mesh_[ed.v]);
    }
    const double lambda = t.total_length();
    const int M = node_count();
    dt_.resize(M);
    cell_.resize(M);
    cum_.resize(M);
    for (int m = 0; m < M; ++m) {
        double sum = 0.0, inv = 0.0;
        for (double s : seg[m]) {
            sum += s;
            inv += 1.0 / s;
        }
        dt_[m] = sum / inv / lambda;
        cell_[m] = sum / 2.0;
        cum_[m].resize(seg[m].size());
        double acc = 0.0;
        for (std::size_t i = 0; i < seg[m].size(); ++i) {
            acc += (1.0 / seg[m][i]) / inv;
            cum_[m][i] = acc;
        }
        cum_[m].back() = 1.0;
    }
}

int MeshGraph::nearest(TreePoint p) const {
    p = host_->canonical(p);
    if (p.node >= 0) return tree_node_mesh_[p.node];
    const auto& ids = edge_nodes_[p.edge];
    const double s = host_->edge(p.edge).len / (static_cast<int>(ids.size()) - 1);
    const int i = static_cast<int>(std::lround(p.offset / s));
    return ids[std::clamp(i, 0, static_cast<int>(ids.size()) - 1)];
}

int MeshGraph::step(int m, Rng& rng) const {
    const auto& cum = cum_[m];
    if (cum.size() == 1) return nbr_[m][0];
    const double u = rng.uniform01();
    for (std::size_t i = 0; i + 1 < cum.size(); ++i)
        if (u < cum[i]) return nbr_[m][i];
    return nbr_[m].back();
}

BMPath run_bm(const MeshGraph& mesh, double t_end, TreePoint start, Rng& rng) {
    BMPath path;
    path.mesh = &mesh;
    int m = mesh.nearest(start);
    double clock = 0.0;
    path.nodes.push_back(m);
    path.clock.push_back(0.0);
    while (clock < t_end) {
        clock += mesh.clock_increment(m);
        m = mesh.step(m, rng);
        path.nodes.push_back(m);
        path.clock.push_back(clock);
    }
    return path;
}

std::vector<double> local_time_field(const BMPath& path, double t) {
    const MeshGraph& mesh = *path.mesh;
    const double lambda = mesh.total_length();
    std::vector<double> field(mesh.node_count(), 0.0);
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        if (path.clock[i] >= t) break;
        const double spent = std::min(path.clock[i + 1], t) - path.clock[i];
        field[path.nodes[i]] += spent * lambda / mesh.cell_length(path.nodes[i]);
    }
    return field;
}

double hitting_probability_exact(const MetricTree& t, TreePoint sigma, TreePoint sigma1,
                                 TreePoint sigma2) {
    if (t.same_point(sigma1, sigma2)) throw std::domain_error("targets must be distinct");
    const TreePoint b = t.branch_point(sigma, sigma1, sigma2);
    return t.distance(b, sigma2) / t.distance(sigma1, sigma2);
}

double mean_hitting_time_exact(const MetricTree& t, const TreeMeasure& mu, TreePoint sigma1,
                               TreePoint sigma2) {
    if (t.same_point(sigma1, sigma2)) return 0.0;
    auto f = [&](TreePoint p) {
        return t.distance(t.branch_point(p, sigma1, sigma2), sigma2);
    };
    double total = 0.0;
    for (const auto& [p, w] : mu.atoms) total += w * f(p);
    const TreePoint s1 = t.canonical(sigma1), s2 = t.canonical(sigma2);
    for (int e = 0; e < static_cast<int>(mu.density.size()); ++e) {
        const double rho = mu.density[e];
        if (rho == 0.0) continue;
        const double len = t.edge(e).len;
        // f is piecewise linear along the edge with breaks only where the
        // path [[sigma1,sigma2]] starts or ends inside it.
        std::vector<double> bp{0.0, len};
        if (s1.edge == e) bp.push_back(s1.offset);
        if (s2.edge == e) bp.push_back(s2.offset);
        std::sort(bp.begin(), bp.end());
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
            const double a = bp[i], b = bp[i + 1];
            if (b - a <= MetricTree::kPointTol) continue;
            const double fa = f(TreePoint::on_edge(e, a));
            const double fb = f(TreePoint::on_edge(e, b));
            total += rho * 0.5 * (fa + fb) * (b - a);
        }
    }
    return 2.0 * total;
}

std::vector<double> cell_masses(const MeshGraph& mesh, const TreeMeasure& nu) {
    const MetricTree& t = mesh.host();
    std::vector<double> mass(mesh.node_count(), 0.0);
    for (const auto& [p, w] : nu.atoms) mass[mesh.nearest(p)] += w;
    for (int e = 0; e < static_cast<int>(nu.density.size()); ++e) {
        const double rho = nu.density[e];
        if (rho == 0.0) continue;
        // Split the edge length over the half-segment cells of its mesh
        // nodes: interior nodes own a full segment, the endpoints one half.
        const double len = t.edge(e).len;
        // Reconstruct the segment layout from nearest() geometry.
        const int end_u = mesh.node_of(t.edge(e).u);
        const int end_v = mesh.node_of(t.edge(e).v);
        const int m = std::max(1, static_cast<int>(std::ceil(len / mesh.spacing() - 1e-12)));
        const double s = len / m;
        mass[end_u] += rho * s / 2.0;
        mass[end_v] += rho * s / 2.0;
        for (int i = 1; i < m; ++i)
            mass[mesh.nearest(TreePoint::on_edge(e, s * i))] += rho * s;
    }
    return mass;
}

BMPath bm_time_changed(const BMPath& base, const TreeMeasure& nu) {
    const MeshGraph& mesh = *base.mesh;
    if (nu.total_mass(mesh.host()) <= 0.0)
        throw std::domain_error("speed measure must have positive mass");
    const std::vector<double> mass = cell_masses(mesh, nu);
    const double lambda = mesh.total_length();
    BMPath out;
    out.mesh = base.mesh;
    out.nodes = base.nodes;
    out.clock.reserve(base.clock.size());
    double acc = 0.0;
    out.clock.push_back(0.0);
    for (std::size_t i = 0; i + 1 < base.nodes.size(); ++i) {
        const int m = base.nodes[i];
        const double dt = base.clock[i + 1] - base.clock[i];
        // dL at the current node times its nu-cell mass.
        acc += dt * lambda / mesh.cell_length(m) * mass[m];
        out.clock.push_back(acc);
    }
    return out;
}

namespace {

// Absorption probabilities of the star network: interior nodes X (start) and
// B, absorbing exits; conductance 1/length on each wire. Solves the 2x2
// harmonic system per absorbing target.
std::vector<double> star_voltages(int n_other, double own_len, double xb_len, double arm_len) {
    const double c_own = 1.0 / own_len, c_xb = 1.0 / xb_len, c_arm = 1.0 / arm_len;
    std::vector<double> probs;
    auto solve = [&](double rhs_x, double rhs_b) {
        // [c_own + c_xb, -c_xb; -c_xb, c_xb + n*c_arm] [vx vb]' = [rhs]
        const double a11 = c_own + c_xb, a12 = -c_xb;
        const double a21 = -c_xb, a22 = c_xb + n_other * c_arm;
        const double det = a11 * a22 - a12 * a21;
        return std::pair{(rhs_x * a22 - a12 * rhs_b) / det,
                         (a11 * rhs_b - a21 * rhs_x) / det};
    };
    probs.push_back(solve(c_own, 0.0).first);            // own exit
    if (n_other > 0) probs.push_back(solve(0.0, c_arm).first);  // one other arm
    return probs;
}

} // namespace

static BranchExitLaw exit_points(const MetricTree& t, int branch_node, double eps1,
                                 int arm_index) {
    const int deg = t.degree(branch_node);
    if (deg < 1) throw std::domain_error("isolated node");
    if (arm_index < 0 || arm_index >= deg) throw std::domain_error("invalid arm index");
    const double eps0 = t.min_edge_length() / 2.0;
    if (!(eps1 > 0.0 && eps1 < eps0))
        throw std::domain_error("eps1 must lie in (0, eps0)");
    BranchExitLaw law;
    auto exit_on = [&](int e) {
        const auto& ed = t.edge(e);
        return ed.u == branch_node ? TreePoint::on_edge(e, eps1)
                                   : TreePoint::on_edge(e, ed.len - eps1);
    };
    const auto& inc = t.incident_edges(branch_node);
    law.exits.push_back(exit_on(inc[arm_index]));
    for (int i = 0; i < deg; ++i)
        if (i != arm_index) law.exits.push_back(exit_on(inc[i]));
    return law;
}

BranchExitLaw branch_exit_law(const MetricTree& t, int branch_node, double eps1,
                              int arm_index) {
    BranchExitLaw law = exit_points(t, branch_node, eps1, arm_index);
    const double n = static_cast<double>(t.degree(branch_node));
    law.prob.push_back((1.0 + n) / (2.0 * n));
    for (std::size_t i = 1; i < law.exits.size(); ++i) law.prob.push_back(1.0 / (2.0 * n));
    return law;
}

BranchExitLaw branch_exit_law_oracle(const MetricTree& t, int branch_node, double eps1,
                                     int arm_index) {
    BranchExitLaw law = exit_points(t, branch_node, eps1, arm_index);
    const int deg = t.degree(branch_node);
    const auto v = star_voltages(deg - 1, eps1 / 2.0, eps1 / 2.0, eps1);
    law.prob.push_back(v[0]);
    for (int i = 1; i < deg; ++i) law.prob.push_back(v.size() > 1 ? v[1] : 0.0);
    return law;
}

} // namespace dendrite
