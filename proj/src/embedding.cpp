#include "dendrite/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dendrite {

double l1_norm(const L1Point& p) {
    double s = 0.0;
    for (double x : p) s += std::abs(x);
    return s;
}

double l1_distance(const L1Point& a, const L1Point& b) {
    double s = 0.0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double x = i < a.size() ? a[i] : 0.0;
        const double y = i < b.size() ? b[i] : 0.0;
        s += std::abs(x - y);
    }
    return s;
}

L1Point pi_k(const L1Point& p, int k) {
    if (k < 0) throw std::domain_error("negative truncation index");
    L1Point q(p.begin(), p.begin() + std::min<std::size_t>(k, p.size()));
    return q;
}

L1Embedding::L1Embedding(const MetricTree& t) : t_(&t), leaves_(t.leaf_order()) {
    if (leaves_.empty()) throw std::domain_error("tree has no designated leaf order");
}

L1Point L1Embedding::psi(TreePoint p) const {
    L1Point out(leaves_.size(), 0.0);
    double prev = 0.0;   // depth of the projection onto the first-j subtree
    for (std::size_t j = 0; j < leaves_.size(); ++j) {
        const double g = t_->gromov(p, leaves_[j]);
        const double h = std::max(prev, std::min(g, t_->depth(p)));
        out[j] = h - prev;
        prev = h;
    }
    return out;
}

std::vector<L1Point> L1Embedding::net_image(double spacing) const {
    std::vector<L1Point> out;
    for (const TreePoint& p : t_->net_points(spacing)) out.push_back(psi(p));
    return out;
}

double hausdorff_distance_l1(std::span<const L1Point> A, std::span<const L1Point> B) {
    if (A.empty() || B.empty()) throw std::domain_error("empty point set");
    auto one_sided = [](std::span<const L1Point> X, std::span<const L1Point> Y) {
        double sup = 0.0;
        for (const auto& x : X) {
            double inf = std::numeric_limits<double>::infinity();
            for (const auto& y : Y) inf = std::min(inf, l1_distance(x, y));
            sup = std::max(sup, inf);
        }
        return sup;
    };
    return std::max(one_sided(A, B), one_sided(B, A));
}

std::string l1_points_to_csv(std::span<const L1Point> pts, int k) {
    std::ostringstream out;
    out << std::setprecision(17) << "id";
    for (int j = 1; j <= k; ++j) out << ",coord-" << j;
    out << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << i;
        for (int j = 0; j < k; ++j)
            out << "," << (j < static_cast<int>(pts[i].size()) ? pts[i][j] : 0.0);
        out << "\n";
    }
    return out.str();
}

} // namespace dendrite
