#include "dendrite/walks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dendrite {

WalkPath run_srw(const OrderedTree& t, std::uint64_t steps, Rng& rng) {
    WalkPath path;
    path.vertices.reserve(steps + 1);
    int v = t.root();
    path.vertices.push_back(v);
    for (std::uint64_t m = 0; m < steps; ++m) {
        const auto& nb = t.neighbours(v);
        v = nb.size() == 1 ? nb[0] : nb[rng.uniform_int(nb.size())];
        path.vertices.push_back(v);
    }
    return path;
}

ObservedWalk observe_on_subtree(const WalkPath& x, const GraphSubtree& sub) {
    if (x.vertices.empty()) throw std::domain_error("empty walk");
    ObservedWalk obs;
    obs.sub = &sub;
    int cur = sub.project(x.vertices[0]);
    obs.jump_chain.push_back(cur);
    obs.jump_times.push_back(0);
    for (std::size_t m = 1; m < x.vertices.size(); ++m) {
        const int p = sub.project(x.vertices[m]);
        if (p != cur) {
            cur = p;
            obs.jump_chain.push_back(p);
            obs.jump_times.push_back(m);
        }
    }
    return obs;
}

std::vector<int> reconstruct_observed(const ObservedWalk& obs, std::uint64_t total_steps) {
    std::vector<int> out;
    out.reserve(total_steps + 1);
    std::size_t l = 0;
    for (std::uint64_t m = 0; m <= total_steps; ++m) {
        while (l + 1 < obs.jump_times.size() && obs.jump_times[l + 1] <= m) ++l;
        out.push_back(obs.jump_chain[l]);
    }
    return out;
}

DiscreteLocalTimes::DiscreteLocalTimes(const ObservedWalk& obs)
    : sub_(obs.sub), len_(obs.jump_chain.size()), chain_(obs.jump_chain) {
    for (std::uint64_t l = 0; l < len_; ++l) visits_[chain_[l]].push_back(l);
}

double DiscreteLocalTimes::at(std::uint64_t m, int v) const {
    const auto it = visits_.find(v);
    if (it == visits_.end()) return 0.0;
    const auto& idx = it->second;
    const auto count = std::upper_bound(idx.begin(), idx.end(), m) - idx.begin();
    return 2.0 * static_cast<double>(count) / sub_->degree(v);
}

std::vector<int> DiscreteLocalTimes::support() const {
    std::vector<int> out;
    for (const auto& [v, _] : visits_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> additive_functional_discrete(const DiscreteLocalTimes& L,
                                                 const std::unordered_map<int, double>& mu,
                                                 int n) {
    const GraphSubtree& sub = L.subtree();
    for (const auto& [v, mass] : mu)
        if (mass != 0.0 && !sub.contains(v))
            throw std::domain_error("measure charges a vertex outside the subtree");
    std::vector<double> ahat;
    ahat.reserve(L.length() + 1);
    ahat.push_back(0.0);
    double acc = 0.0;
    for (std::uint64_t l = 0; l < L.length(); ++l) {
        const int v = L.chain_at(l);
        const auto it = mu.find(v);
        if (it != mu.end()) acc += n * (2.0 / sub.degree(v)) * it->second;
        ahat.push_back(acc);
    }
    return ahat;
}

std::vector<int> time_changed_walk(const ObservedWalk& obs, const std::vector<double>& ahat) {
    const std::size_t L = obs.jump_chain.size();
    if ((ahat.size() != L && ahat.size() != L + 1) || ahat.front() != 0.0)
        throw std::domain_error("functional does not match the observed walk");
    const std::uint64_t total = static_cast<std::uint64_t>(std::floor(ahat.back()));
    std::vector<int> out;
    out.reserve(total + 1);
    std::size_t l = 0;
    for (std::uint64_t m = 0; m <= total; ++m) {
        // tau-hat(m) = max{l : ahat[l] <= m}; ahat has one more entry than J,
        // and the final entry never indexes the chain.
        while (l + 1 < obs.jump_chain.size() && ahat[l + 1] <= static_cast<double>(m)) ++l;
        out.push_back(obs.jump_chain[l]);
    }
    return out;
}

double lambda_nk(const GraphSubtree& sub, double alpha_n) {
    return sub.edge_count() / alpha_n;
}

} // namespace dendrite
