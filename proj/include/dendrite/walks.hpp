#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dendrite/ordered_tree.hpp"
#include "dendrite/rng.hpp"

namespace dendrite {

/// Simple-random-walk trajectory started from the root.
struct WalkPath {
    std::vector<int> vertices;
};

WalkPath run_srw(const OrderedTree& t, std::uint64_t steps, Rng& rng);

/// The walk watched on a spanning subtree: jump chain J (projection with
/// repeats collapsed) and jump times A (steps at which the projection moves),
/// A_0 = 0.
struct ObservedWalk {
    const GraphSubtree* sub;
    std::vector<int> jump_chain;        // J_l
    std::vector<std::uint64_t> jump_times;  // A_l
};

ObservedWalk observe_on_subtree(const WalkPath& x, const GraphSubtree& sub);

/// Reconstruction X_m = J_{tau(m)}, tau(m) = max{l : A_l <= m}; equals the
/// collapsed projection of the original path by definition.
std::vector<int> reconstruct_observed(const ObservedWalk& obs, std::uint64_t total_steps);

/// Discrete local times L_m(v) = (2/deg_sub(v)) * #{l <= m : J_l = v}.
/// Stored as per-vertex visit-index lists; queries are O(log visits).
class DiscreteLocalTimes {
public:
    DiscreteLocalTimes(const ObservedWalk& obs);

    /// L_m(v): local time after observing J_0..J_m.
    double at(std::uint64_t m, int v) const;
    /// Vertices ever visited.
    std::vector<int> support() const;
    const GraphSubtree& subtree() const { return *sub_; }
    std::uint64_t length() const { return len_; }
    int chain_at(std::uint64_t l) const { return chain_[l]; }

private:
    const GraphSubtree* sub_;
    std::uint64_t len_;
    std::vector<int> chain_;
    std::unordered_map<int, std::vector<std::uint64_t>> visits_;
};

/// Additive functional A-hat_m = n * sum_v L_{m-1}(v) mu(v), A-hat_0 = 0;
/// mu must be supported on the subtree's vertices.
std::vector<double> additive_functional_discrete(const DiscreteLocalTimes& L,
                                                 const std::unordered_map<int, double>& mu,
                                                 int n);

/// Time-changed chain X-hat_m = J_{tau-hat(m)} with
/// tau-hat(m) = max{l : A-hat_l <= m}, for m = 0..floor(A-hat_last).
std::vector<int> time_changed_walk(const ObservedWalk& obs, const std::vector<double>& ahat);

/// Edge count of the subtree over alpha_n, logged per run.
double lambda_nk(const GraphSubtree& sub, double alpha_n);

} // namespace dendrite
