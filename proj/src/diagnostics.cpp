#include "dendrite/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dendrite {

namespace {

// Length of {x in [a,b] : f(x) < r} for linear f with f(a)=fa, f(b)=fb.
double sublevel_length(double a, double b, double fa, double fb, double r) {
    if (b <= a) return 0.0;
    if (fa < r && fb < r) return b - a;
    if (fa >= r && fb >= r) return 0.0;
    // Single crossing.
    const double x = a + (r - fa) / (fb - fa) * (b - a);
    return fa < r ? x - a : b - x;
}

} // namespace

double ball_volume(const MetricTree& t, const TreeMeasure& mu, TreePoint center, double r) {
    double vol = 0.0;
    for (const auto& [p, w] : mu.atoms)
        if (t.distance(center, p) < r) vol += w;
    const TreePoint c = t.canonical(center);
    for (int e = 0; e < static_cast<int>(mu.density.size()); ++e) {
        const double rho = mu.density[e];
        if (rho == 0.0) continue;
        const auto& ed = t.edge(e);
        const double du = t.distance(center, TreePoint::at_node(ed.u));
        const double dv = t.distance(center, TreePoint::at_node(ed.v));
        double got;
        if (c.edge == e) {
            // Distance is V-shaped with the minimum 0 at the centre itself.
            got = sublevel_length(0.0, c.offset, du, 0.0, r) +
                  sublevel_length(c.offset, ed.len, 0.0, dv, r);
        } else {
            // Distance descends to the projection foot then ascends; the foot
            // offset follows from the two endpoint distances.
            const double foot = 0.5 * (du + ed.len - dv);
            if (foot <= 0.0 || foot >= ed.len) {
                got = sublevel_length(0.0, ed.len, du, dv, r);
            } else {
                const double fmin = du - foot;
                got = sublevel_length(0.0, foot, du, fmin, r) +
                      sublevel_length(foot, ed.len, fmin, dv, r);
            }
        }
        vol += rho * got;
    }
    return vol;
}

VolumeProfile ball_volume_profile(const MetricTree& t, const TreeMeasure& mu,
                                  std::span<const double> radii, double net_spacing) {
    if (radii.empty()) throw std::domain_error("need at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (!(radii[i] > 0.0) || (i > 0 && radii[i] <= radii[i - 1]))
            throw std::domain_error("radii must be positive and increasing");
    if (net_spacing <= 0.0) net_spacing = radii.front() / 4.0;
    const auto centers = t.net_points(net_spacing);
    VolumeProfile prof;
    prof.radii.assign(radii.begin(), radii.end());
    prof.inf_volumes.assign(radii.size(), std::numeric_limits<double>::infinity());
    for (const TreePoint& c : centers)
        for (std::size_t i = 0; i < radii.size(); ++i)
            prof.inf_volumes[i] = std::min(prof.inf_volumes[i], ball_volume(t, mu, c, radii[i]));
    return prof;
}

VolumeProfile ball_volume_profile(const OrderedTree& t, std::span<const double> radii) {
    if (radii.empty()) throw std::domain_error("need at least one radius");
    const int n = t.size();
    const int cutoff = static_cast<int>(std::ceil(radii.back()));
    VolumeProfile prof;
    prof.radii.assign(radii.begin(), radii.end());
    prof.inf_volumes.assign(radii.size(), std::numeric_limits<double>::infinity());
    std::vector<int> dist(n), queue(n);
    for (int src = 0; src < n; ++src) {
        // BFS with cutoff; count vertices with d < r per radius.
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = src;
        dist[src] = 0;
        std::vector<int> counts(radii.size(), 0);
        while (head < tail) {
            const int v = queue[head++];
            for (std::size_t i = 0; i < radii.size(); ++i)
                if (dist[v] < radii[i]) ++counts[i];
            if (dist[v] >= cutoff) continue;
            for (int w : t.neighbours(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
        }
        for (std::size_t i = 0; i < radii.size(); ++i)
            prof.inf_volumes[i] =
                std::min(prof.inf_volumes[i], static_cast<double>(counts[i]) / n);
    }
    return prof;
}

int covering_number(const MetricTree& t, double r) {
    if (!(r > 0.0)) throw std::domain_error("radius must be positive");
    // Open balls are the limit of closed balls of slightly smaller radius.
    const double s = r * (1.0 - 1e-9);
    const double none = -std::numeric_limits<double>::infinity();
    int count = 0;
    // Post-order over nodes: state (u = farthest uncovered distance below,
    // c = best coverage surplus below), combined at each node.
    std::vector<std::pair<double, double>> state(t.node_count(), {none, none});
    std::vector<int> order;
    order.reserve(t.node_count());
    {
        std::vector<int> stack{t.root()};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int e : t.incident_edges(v)) {
                const auto& ed = t.edge(e);
                if (ed.u == v) stack.push_back(ed.v);
            }
        }
    }
    auto climb = [&](std::pair<double, double> st, double len) {
        auto [u, c] = st;
        double left = len;
        while (left > 0.0) {
            if (u > none && u + left >= s) {
                // Place a centre where the deepest uncovered point sits at
                // distance exactly s.
                const double step = s - u;
                left -= step;
                ++count;
                u = none;
                c = s;
            } else if (u == none && c > none && c < left) {
                // Coverage runs out mid-edge; uncovered resumes there.
                left -= c;
                u = 0.0;
                c = none;
            } else {
                if (u > none) u += left;
                if (c > none) c -= left;
                left = 0.0;
            }
        }
        return std::pair{u, c};
    };
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        double u = none, c = none;
        for (int e : t.incident_edges(v)) {
            const auto& ed = t.edge(e);
            if (ed.u != v) continue;
            const auto st = climb(state[ed.v], ed.len);
            u = std::max(u, st.first);
            c = std::max(c, st.second);
        }
        if (u > none && u < c) u = none;  // strict: open-ball coverage
        if (c < 0.0 || c == none)
            u = std::max(u, 0.0);  // the node itself needs covering
        state[v] = {u, c};
    }
    if (state[t.root()].first > none) ++count;
    return count;
}

ExponentFit exponent_fit(const VolumeProfile& profile, bool log_correction) {
    const std::size_t n = profile.radii.size();
    if (n < 2) throw std::domain_error("need at least two radii");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = profile.radii[i];
        const double v = profile.inf_volumes[i];
        if (!(v > 0.0)) throw std::domain_error("profile has zero volumes");
        double x = std::log(r);
        if (log_correction) {
            if (!(r < 1.0)) throw std::domain_error("log correction needs radii below 1");
            x -= std::log(std::log(1.0 / r));
        }
        xs.push_back(x);
        ys.push_back(std::log(v));
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::domain_error("degenerate abscissa");
    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

double ks_distance(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::domain_error("empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) ++i;
        while (j < sb.size() && sb[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / sa.size() -
                                 static_cast<double>(j) / sb.size()));
    }
    return d;
}

namespace {

// Regularized incomplete gamma functions (series + continued fraction).
double gamma_p_series(double a, double x) {
    double term = 1.0 / a, sum = term;
    for (int k = 1; k < 1000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int k = 1; k < 1000; ++k) {
        const double an = -k * (k - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double chi_square_p_value(double statistic, int dof) {
    if (dof < 1) throw std::domain_error("degrees of freedom must be positive");
    if (statistic <= 0.0) return 1.0;
    const double a = dof / 2.0, x = statistic / 2.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

} // namespace dendrite
