#include "dendrite/excursion.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dendrite {

Excursion::Excursion(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size() || grid_.size() < 2)
        throw std::invalid_argument("grid and values must match and have >= 2 points");
    if (grid_.front() != 0.0 || grid_.back() != 1.0)
        throw std::invalid_argument("grid must span [0,1]");
    for (std::size_t i = 1; i < grid_.size(); ++i)
        if (!(grid_[i] > grid_[i - 1]))
            throw std::invalid_argument("grid must be strictly increasing");
    if (values_.front() != 0.0 || values_.back() != 0.0)
        throw std::invalid_argument("endpoint values must be zero");
    for (double v : values_)
        if (v < 0.0) throw std::invalid_argument("values must be non-negative");
}

void Excursion::validate_positive_interior() const {
    // Piecewise-linear functions attain extrema at breakpoints.
    for (std::size_t i = 1; i + 1 < grid_.size(); ++i)
        if (!(values_[i] > 0.0)) throw std::domain_error("excursion not positive on (0,1)");
}

double Excursion::value(double s) const {
    if (s < 0.0 || s > 1.0) throw std::domain_error("argument outside [0,1]");
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), s);
    if (it == grid_.end()) return values_.back();
    const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
    const double t0 = grid_[i - 1], t1 = grid_[i];
    const double f = (s - t0) / (t1 - t0);
    return values_[i - 1] * (1.0 - f) + values_[i] * f;
}

double Excursion::min_on(double a, double b) const {
    if (a > b) std::swap(a, b);
    double m = std::min(value(a), value(b));
    const auto lo = std::upper_bound(grid_.begin(), grid_.end(), a);
    const auto hi = std::lower_bound(grid_.begin(), grid_.end(), b);
    for (auto it = lo; it != hi; ++it) m = std::min(m, values_[it - grid_.begin()]);
    return m;
}

double excursion_distance(const Excursion& w, double s, double t) {
    return w.value(s) + w.value(t) - 2.0 * w.min_on(s, t);
}

MetricTree tree_from_excursion(const Excursion& w, std::span<const double> u) {
    if (u.empty()) throw std::domain_error("need at least one sample point");
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] == u[j]) throw std::domain_error("duplicate sample points");
    IncrementalTreeBuilder b;
    std::vector<double> dists;
    for (std::size_t j = 0; j < u.size(); ++j) {
        dists.clear();
        for (std::size_t i = 0; i < j; ++i) dists.push_back(excursion_distance(w, u[j], u[i]));
        b.add_leaf(w.value(u[j]), dists);
    }
    return b.build();
}

std::vector<int> search_depth_traversal(const OrderedTree& t) {
    const int n = t.size();
    std::vector<int> seq;
    seq.reserve(2 * n + 1);
    seq.push_back(t.root());
    // Explicit stack of (vertex, next-child index); push the depth sequence
    // of the classic down-up walk.
    std::vector<std::pair<int, std::size_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto& [v, ci] = stack.back();
        if (ci < t.children(v).size()) {
            const int c = t.children(v)[ci++];
            seq.push_back(c);
            stack.push_back({c, 0});
        } else {
            stack.pop_back();
            if (!stack.empty()) seq.push_back(stack.back().first);
        }
    }
    while (static_cast<int>(seq.size()) < 2 * n + 1) seq.push_back(t.root());
    return seq;
}

Excursion search_depth(const OrderedTree& t) {
    const auto seq = search_depth_traversal(t);
    const int m = 2 * t.size();
    std::vector<double> grid(m + 1), values(m + 1);
    for (int i = 0; i <= m; ++i) {
        grid[i] = static_cast<double>(i) / m;
        values[i] = t.depth(seq[i]);
    }
    return Excursion(std::move(grid), std::move(values));
}

std::vector<double> first_visit_times(const OrderedTree& t) {
    const auto seq = search_depth_traversal(t);
    const int m = 2 * t.size();
    std::vector<double> first(t.size(), -1.0);
    for (int i = 0; i <= m; ++i)
        if (first[seq[i]] < 0.0) first[seq[i]] = static_cast<double>(i) / m;
    return first;
}

int point_at(std::span<const int> traversal, const Excursion& w, double s) {
    if (s < 0.0 || s > 1.0) throw std::domain_error("argument outside [0,1]");
    const int m = static_cast<int>(traversal.size()) - 1;
    if (w.breakpoint_count() != m + 1)
        throw std::domain_error("excursion does not match the tree grid");
    const double x = s * m;
    const int lo = static_cast<int>(std::floor(x));
    const int hi = std::min(static_cast<int>(std::ceil(x)), m);
    const int i = (w.values()[lo] >= w.values()[hi]) ? lo : hi;
    return traversal[i];
}

int point_at(const OrderedTree& t, const Excursion& w, double s) {
    return point_at(search_depth_traversal(t), w, s);
}

std::string excursion_to_csv(const Excursion& w) {
    std::ostringstream out;
    out << std::setprecision(17) << "t,value\n";
    for (int i = 0; i < w.breakpoint_count(); ++i)
        out << w.grid()[i] << "," << w.values()[i] << "\n";
    return out.str();
}

Excursion excursion_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,value", 0) != 0)
        throw std::runtime_error("missing csv header");
    std::vector<double> grid, values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad csv row");
        grid.push_back(std::stod(line.substr(0, comma)));
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    return Excursion(std::move(grid), std::move(values));
}

} // namespace dendrite
