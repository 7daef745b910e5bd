#include "dendrite/gw.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dendrite {

namespace {

// sum_{k >= a} k^{-s} for s > 1: direct head plus an Euler-Maclaurin tail.
double power_tail_sum(double s, std::uint64_t a) {
    if (a < 1) a = 1;
    const std::uint64_t head_end = std::max<std::uint64_t>(a, 1 << 16);
    double sum = 0.0;
    for (std::uint64_t k = a; k < head_end; ++k) sum += std::pow(static_cast<double>(k), -s);
    const double m = static_cast<double>(head_end);
    sum += std::pow(m, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(m, -s) +
           s / 12.0 * std::pow(m, -s - 1.0) -
           s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(m, -s - 3.0);
    return sum;
}

constexpr std::uint64_t kHeadTable = 4096;

} // namespace

OffspringDistribution OffspringDistribution::geometric_half() {
    OffspringDistribution d;
    d.kind_ = Kind::GeometricHalf;
    return d;
}

OffspringDistribution OffspringDistribution::poisson_1() {
    OffspringDistribution d;
    d.kind_ = Kind::Poisson1;
    return d;
}

OffspringDistribution OffspringDistribution::stable_tail(double alpha, double tail_c) {
    if (!(alpha > 1.0 && alpha < 2.0)) throw std::domain_error("alpha must lie in (1,2)");
    if (!(tail_c > 0.0)) throw std::domain_error("tail constant must be positive");
    OffspringDistribution d;
    d.kind_ = Kind::StableTail;
    d.alpha_ = alpha;
    d.c_ = tail_c;
    const double t1 = tail_c * power_tail_sum(alpha, 2);        // sum k p_k over k>=2
    const double t0 = tail_c * power_tail_sum(alpha + 1.0, 2);  // sum p_k over k>=2
    d.p1_ = 1.0 - t1;
    d.p0_ = t1 - t0;
    if (!(d.p1_ > 0.0))
        throw std::domain_error("tail constant too large: p_1 would be non-positive");
    d.cdf_.resize(kHeadTable);
    double acc = 0.0;
    for (std::uint64_t k = 0; k < kHeadTable; ++k) {
        acc += d.pmf(k);
        d.cdf_[k] = acc;
    }
    if (std::abs(d.total_mass() - 1.0) > 1e-9 || std::abs(d.mean() - 1.0) > 1e-9)
        throw std::domain_error("offspring law fails mass/mean validation");
    return d;
}

std::string OffspringDistribution::name() const {
    switch (kind_) {
        case Kind::GeometricHalf: return "geometric-half";
        case Kind::Poisson1: return "poisson-1";
        case Kind::StableTail: return "stable-tail";
    }
    return {};
}

double OffspringDistribution::pmf(std::uint64_t k) const {
    switch (kind_) {
        case Kind::GeometricHalf:
            return k < 1024 ? std::ldexp(1.0, -static_cast<int>(k) - 1) : 0.0;
        case Kind::Poisson1:
            return std::exp(-1.0 - std::lgamma(static_cast<double>(k) + 1.0));
        case Kind::StableTail:
            if (k == 0) return p0_;
            if (k == 1) return p1_;
            return c_ * std::pow(static_cast<double>(k), -(1.0 + alpha_));
    }
    return 0.0;
}

double OffspringDistribution::tail_mass(std::uint64_t k) const {
    switch (kind_) {
        case Kind::GeometricHalf:
            return std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(k, 1023)));
        case Kind::Poisson1: {
            double head = 0.0;
            for (std::uint64_t j = 0; j < k; ++j) head += pmf(j);
            return 1.0 - head;
        }
        case Kind::StableTail:
            if (k == 0) return 1.0;
            if (k == 1) return 1.0 - p0_;
            return c_ * power_tail_sum(alpha_ + 1.0, k);
    }
    return 0.0;
}

double OffspringDistribution::total_mass() const {
    if (kind_ != Kind::StableTail) return 1.0;
    return p0_ + p1_ + c_ * power_tail_sum(alpha_ + 1.0, 2);
}

double OffspringDistribution::mean() const {
    if (kind_ != Kind::StableTail) return 1.0;
    return p1_ + c_ * power_tail_sum(alpha_, 2);
}

int OffspringDistribution::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::GeometricHalf: {
            std::uint64_t x = rng.next_u64();
            while (x == 0) x = rng.next_u64();
            return std::countr_zero(x);
        }
        case Kind::Poisson1: {
            // Knuth's product method at mean 1.
            const double threshold = std::exp(-1.0);
            int k = 0;
            double prod = rng.uniform01();
            while (prod >= threshold) {
                prod *= rng.uniform01();
                ++k;
            }
            return k;
        }
        case Kind::StableTail: {
            const double u = rng.uniform01();
            if (u < cdf_.back()) {
                const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
                return static_cast<int>(it - cdf_.begin());
            }
            // Analytic tail inversion: smallest k with P(X > k) <= 1-u.
            const double r = 1.0 - u;
            std::uint64_t lo = kHeadTable, hi = 2 * kHeadTable;
            while (tail_mass(hi + 1) > r) {
                lo = hi;
                hi *= 2;
                if (hi > (1ULL << 60)) break;
            }
            while (lo < hi) {
                const std::uint64_t mid = lo + (hi - lo) / 2;
                if (tail_mass(mid + 1) <= r)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            return static_cast<int>(lo);
        }
    }
    return 0;
}

LukasiewiczPath lukasiewicz(const OrderedTree& t) {
    LukasiewiczPath path;
    path.increments.reserve(t.size());
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        path.increments.push_back(static_cast<int>(t.children(v).size()) - 1);
        const auto& cs = t.children(v);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.push_back(*it);
    }
    return path;
}

bool is_valid_lukasiewicz(std::span<const int> increments) {
    if (increments.empty()) return false;
    long long s = 0;
    for (std::size_t i = 0; i + 1 < increments.size(); ++i) {
        s += increments[i];
        if (s < 0) return false;
    }
    return s + increments.back() == -1;
}

OrderedTree decode_lukasiewicz(const LukasiewiczPath& path) {
    if (!is_valid_lukasiewicz(path.increments))
        throw std::domain_error("invalid Lukasiewicz path");
    const int n = static_cast<int>(path.increments.size());
    std::vector<int> parent(n, -1);
    std::vector<std::pair<int, int>> stack{{0, path.increments[0] + 1}};
    for (int i = 1; i < n; ++i) {
        while (!stack.empty() && stack.back().second == 0) stack.pop_back();
        if (stack.empty()) throw std::domain_error("invalid Lukasiewicz path");
        parent[i] = stack.back().first;
        --stack.back().second;
        stack.push_back({i, path.increments[i] + 1});
    }
    return OrderedTree::from_parents(std::move(parent));
}

int valid_rotation(std::span<const int> increments) {
    long long s = 0, min_s = 0;
    std::size_t argmin = increments.size() - 1;
    for (std::size_t i = 0; i < increments.size(); ++i) {
        s += increments[i];
        if (s < min_s) {
            min_s = s;
            argmin = i;
        }
    }
    if (s != -1) throw std::domain_error("increments must sum to -1");
    return static_cast<int>((argmin + 1) % increments.size());
}

OrderedTree sample_conditioned_tree(const OffspringDistribution& dist, int n, Rng& rng,
                                    std::uint64_t max_retries, ConditionedSampleStats* stats) {
    if (n < 1) throw std::domain_error("tree size must be positive");
    if (n == 1) return OrderedTree::from_parents({-1});
    std::vector<int> inc(n);
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt > max_retries)
            throw std::runtime_error("conditioned sampling retry budget exceeded after " +
                                     std::to_string(attempt) + " attempts");
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            inc[i] = dist.sample(rng) - 1;
            sum += inc[i];
        }
        if (sum != -1) {
            if (stats) ++stats->rejections;
            continue;
        }
        const int r = valid_rotation(inc);
        std::rotate(inc.begin(), inc.begin() + r, inc.end());
        return decode_lukasiewicz(LukasiewiczPath{inc});
    }
}

ScalingSequence scaling_sequence(const OffspringDistribution& dist, int n) {
    if (n < 1) throw std::domain_error("n must be positive");
    if (dist.finite_variance()) {
        const double s = std::sqrt(static_cast<double>(n));
        return {s, s, 1.0};
    }
    const double alpha = dist.alpha();
    const double C = dist.tail_c() * std::tgamma(2.0 - alpha) / (alpha - 1.0);
    const double a = std::pow(static_cast<double>(n), 1.0 / alpha);
    return {a, static_cast<double>(n) / a, std::pow(C, 1.0 / alpha)};
}

} // namespace dendrite
