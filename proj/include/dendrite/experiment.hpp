#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dendrite {

/// Configuration of the convergence experiment. Two modes:
///  - "fixed-tree": a named fixture is discretized at the edge scales in
///    `sizes`; rescaled SRW root-distance marginals are compared across
///    scales and against mesh Brownian-motion samples on the same tree.
///  - "gw": trees are sampled from the offspring law conditioned on total
///    progeny n for each n in `sizes`; rescaled functionals are compared
///    across n.
struct ExperimentConfig {
    std::string mode = "fixed-tree";
    std::vector<int> sizes;
    std::vector<double> times = {0.5};
    int replicas = 1000;
    int workers = 1;
    std::uint64_t seed = 0;

    // gw mode
    std::string offspring = "geometric-half";
    double alpha = 1.5;
    double tail_c = 0.5;
    int pi_k = 0;   // embedded-coordinate marginals when > 0

    // fixed-tree mode
    std::string fixture = "y111";   // y111 | segment | y123
    double bm_h = 0.01;
    int bm_replicas = 0;            // defaults to `replicas`
};

/// Key-level validation; empty list means the config is runnable.
std::vector<std::string> validate_experiment_config(const ExperimentConfig& cfg);

ExperimentConfig experiment_config_from_json(const nlohmann::json& doc,
                                             std::vector<std::string>* errors = nullptr);

/// Deterministic function of (config, seed); the report carries
/// report-version 1, the config echo, per-size marginal statistics, and the
/// KS distance tables. Wall-clock timing is deliberately excluded so that
/// identical runs are byte-identical.
nlohmann::ordered_json convergence_experiment(const ExperimentConfig& cfg);

} // namespace dendrite
