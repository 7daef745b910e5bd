#include "dendrite/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dendrite/bm.hpp"
#include "dendrite/diagnostics.hpp"
#include "dendrite/gw.hpp"
#include "dendrite/metric_tree.hpp"
#include "dendrite/parallel.hpp"
#include "dendrite/walks.hpp"

namespace dendrite {

namespace {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t st = seed ^ (0xa24baed4963ee407ULL * (tag + 1));
    return splitmix64(st);
}

MetricTree named_fixture(const std::string& name) {
    if (name == "segment") return make_segment(1.0);
    if (name == "y111") {
        const double arms[] = {1.0, 1.0, 1.0};
        return make_star_rooted_at_center(arms);
    }
    if (name == "y123") {
        const double arms[] = {1.0, 2.0, 3.0};
        return make_star_rooted_at_center(arms);
    }
    throw std::domain_error("unknown fixture: " + name);
}

/// Star of chains: the named fixture discretized with m unit edges per unit
/// of length, root at the fixture root.
OrderedTree discretize_fixture(const MetricTree& t, int m) {
    std::vector<int> parent{-1};
    // Walk fixture edges in preorder from the root; nodes of the fixture map
    // to graph vertices, edges become chains of round(len*m) unit edges.
    std::vector<int> node_map(t.node_count(), -1);
    node_map[t.root()] = 0;
    for (const auto& e : t.edges()) {
        const int steps = std::max(1, static_cast<int>(std::lround(e.len * m)));
        int prev = node_map[e.u];
        for (int i = 0; i < steps; ++i) {
            parent.push_back(prev);
            prev = static_cast<int>(parent.size()) - 1;
        }
        node_map[e.v] = prev;
    }
    return OrderedTree::from_parents(std::move(parent));
}

nlohmann::ordered_json summary_stats(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var = xs.size() > 1 ? var / (n - 1.0) : 0.0;
    nlohmann::ordered_json out;
    out["mean"] = mean;
    out["sd"] = std::sqrt(var);
    out["min"] = xs.front();
    out["q25"] = xs[xs.size() / 4];
    out["median"] = xs[xs.size() / 2];
    out["q75"] = xs[3 * xs.size() / 4];
    out["max"] = xs.back();
    return out;
}

struct Marginals {
    // per time index, per replica
    std::vector<std::vector<double>> root_distance;
    // per time index, per coordinate, per replica
    std::vector<std::vector<std::vector<double>>> coords;
};

} // namespace

std::vector<std::string> validate_experiment_config(const ExperimentConfig& cfg) {
    std::vector<std::string> errors;
    if (cfg.mode != "fixed-tree" && cfg.mode != "gw")
        errors.push_back("mode: must be 'fixed-tree' or 'gw'");
    if (cfg.sizes.empty()) errors.push_back("sizes: need at least one entry");
    for (int n : cfg.sizes)
        if (n < 1) errors.push_back("sizes: entries must be positive");
    if (cfg.times.empty()) errors.push_back("times: need at least one entry");
    for (double t : cfg.times)
        if (!(t > 0.0)) errors.push_back("times: entries must be positive");
    if (cfg.replicas < 1) errors.push_back("replicas: must be positive");
    if (cfg.workers < 1) errors.push_back("workers: must be positive");
    if (cfg.mode == "gw") {
        if (cfg.offspring != "geometric-half" && cfg.offspring != "poisson-1" &&
            cfg.offspring != "stable-tail")
            errors.push_back("offspring: unknown law '" + cfg.offspring + "'");
        if (cfg.offspring == "stable-tail") {
            if (!(cfg.alpha > 1.0 && cfg.alpha < 2.0))
                errors.push_back("alpha: must lie in (1,2)");
            if (!(cfg.tail_c > 0.0)) errors.push_back("tail-c: must be positive");
        }
        if (cfg.pi_k < 0) errors.push_back("pi-k: must be non-negative");
    } else {
        if (cfg.fixture != "segment" && cfg.fixture != "y111" && cfg.fixture != "y123")
            errors.push_back("fixture: unknown fixture '" + cfg.fixture + "'");
        if (!(cfg.bm_h > 0.0)) errors.push_back("bm-h: must be positive");
        if (cfg.bm_replicas < 0) errors.push_back("bm-replicas: must be non-negative");
    }
    return errors;
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& doc,
                                             std::vector<std::string>* errors) {
    ExperimentConfig cfg;
    std::vector<std::string> errs;
    const char* known[] = {"mode",   "sizes",   "times",  "replicas",    "workers",
                           "seed",   "offspring", "alpha", "tail-c",      "pi-k",
                           "fixture", "bm-h",    "bm-replicas"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
                return it.key() == k;
            }) == std::end(known))
            errs.push_back(it.key() + ": unknown key");
    }
    try {
        if (doc.contains("mode")) cfg.mode = doc["mode"].get<std::string>();
        if (doc.contains("sizes")) cfg.sizes = doc["sizes"].get<std::vector<int>>();
        if (doc.contains("times")) cfg.times = doc["times"].get<std::vector<double>>();
        if (doc.contains("replicas")) cfg.replicas = doc["replicas"].get<int>();
        if (doc.contains("workers")) cfg.workers = doc["workers"].get<int>();
        if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("offspring")) cfg.offspring = doc["offspring"].get<std::string>();
        if (doc.contains("alpha")) cfg.alpha = doc["alpha"].get<double>();
        if (doc.contains("tail-c")) cfg.tail_c = doc["tail-c"].get<double>();
        if (doc.contains("pi-k")) cfg.pi_k = doc["pi-k"].get<int>();
        if (doc.contains("fixture")) cfg.fixture = doc["fixture"].get<std::string>();
        if (doc.contains("bm-h")) cfg.bm_h = doc["bm-h"].get<double>();
        if (doc.contains("bm-replicas")) cfg.bm_replicas = doc["bm-replicas"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        errs.push_back(std::string("type error: ") + e.what());
    }
    for (const auto& e : validate_experiment_config(cfg)) errs.push_back(e);
    if (errors) *errors = errs;
    else if (!errs.empty())
        throw std::domain_error("invalid experiment config");
    return cfg;
}

namespace {

nlohmann::ordered_json config_echo(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["mode"] = cfg.mode;
    j["sizes"] = cfg.sizes;
    j["times"] = cfg.times;
    j["replicas"] = cfg.replicas;
    j["workers"] = cfg.workers;
    j["seed"] = cfg.seed;
    if (cfg.mode == "gw") {
        j["offspring"] = cfg.offspring;
        if (cfg.offspring == "stable-tail") {
            j["alpha"] = cfg.alpha;
            j["tail-c"] = cfg.tail_c;
        }
        j["pi-k"] = cfg.pi_k;
    } else {
        j["fixture"] = cfg.fixture;
        j["bm-h"] = cfg.bm_h;
        j["bm-replicas"] = cfg.bm_replicas > 0 ? cfg.bm_replicas : cfg.replicas;
    }
    return j;
}

Marginals fixed_tree_marginals(const ExperimentConfig& cfg, const MetricTree& fixture, int m,
                               std::uint64_t seed) {
    const OrderedTree graph = discretize_fixture(fixture, m);
    const int n = graph.size();
    const double alpha_n = static_cast<double>(m);
    std::vector<std::uint64_t> step_at;
    std::uint64_t max_steps = 0;
    for (double t : cfg.times) {
        const auto s = static_cast<std::uint64_t>(std::floor(t * n * alpha_n));
        step_at.push_back(s);
        max_steps = std::max(max_steps, s);
    }
    std::function<std::vector<double>(int, Rng&)> one = [&](int, Rng& rng) {
        const WalkPath path = run_srw(graph, max_steps, rng);
        std::vector<double> vals;
        for (std::uint64_t s : step_at)
            vals.push_back(graph.depth(path.vertices[s]) / alpha_n);
        return vals;
    };
    const auto rows = parallel_replicas<std::vector<double>>(cfg.replicas, cfg.workers, seed, one);
    Marginals out;
    out.root_distance.assign(cfg.times.size(), {});
    for (const auto& row : rows)
        for (std::size_t ti = 0; ti < row.size(); ++ti)
            out.root_distance[ti].push_back(row[ti]);
    return out;
}

Marginals bm_marginals(const ExperimentConfig& cfg, const MetricTree& fixture,
                       std::uint64_t seed) {
    const MeshGraph mesh(fixture, cfg.bm_h);
    const double t_max = *std::max_element(cfg.times.begin(), cfg.times.end());
    const int reps = cfg.bm_replicas > 0 ? cfg.bm_replicas : cfg.replicas;
    std::function<std::vector<double>(int, Rng&)> one = [&](int, Rng& rng) {
        const BMPath path = run_bm(mesh, t_max, TreePoint::at_node(fixture.root()), rng);
        std::vector<double> vals;
        for (double t : cfg.times) {
            const auto it = std::lower_bound(path.clock.begin(), path.clock.end(), t);
            const std::size_t i = std::min<std::size_t>(it - path.clock.begin(),
                                                        path.nodes.size() - 1);
            vals.push_back(fixture.depth(mesh.point(path.nodes[i])));
        }
        return vals;
    };
    const auto rows = parallel_replicas<std::vector<double>>(reps, cfg.workers, seed, one);
    Marginals out;
    out.root_distance.assign(cfg.times.size(), {});
    for (const auto& row : rows)
        for (std::size_t ti = 0; ti < row.size(); ++ti)
            out.root_distance[ti].push_back(row[ti]);
    return out;
}

Marginals gw_marginals(const ExperimentConfig& cfg, const OffspringDistribution& dist, int n,
                       std::uint64_t seed) {
    const ScalingSequence sc = scaling_sequence(dist, n);
    std::vector<std::uint64_t> step_at;
    std::uint64_t max_steps = 0;
    for (double t : cfg.times) {
        const auto s = static_cast<std::uint64_t>(std::floor(t * n * sc.alpha_n));
        step_at.push_back(s);
        max_steps = std::max(max_steps, s);
    }
    const int k = cfg.pi_k;
    struct Row {
        std::vector<double> dists;
        std::vector<std::vector<double>> coords;  // per time, per coordinate
    };
    std::function<Row(int, Rng&)> one = [&](int, Rng& rng) {
        const OrderedTree tree = sample_conditioned_tree(dist, n, rng);
        const WalkPath path = run_srw(tree, max_steps, rng);
        Row row;
        std::vector<int> targets;
        for (int j = 0; j < k; ++j)
            targets.push_back(static_cast<int>(rng.uniform_int(tree.size())));
        for (std::size_t ti = 0; ti < step_at.size(); ++ti) {
            const int x = path.vertices[step_at[ti]];
            row.dists.push_back(tree.depth(x) / sc.alpha_n);
            if (k > 0) {
                // Sequential-embedding coordinates of the projection onto
                // the subtree spanned by the targets, via Gromov products.
                std::vector<double> psi(k, 0.0);
                double prev = 0.0;
                const int dx = tree.depth(x);
                for (int j = 0; j < k; ++j) {
                    const int ds = tree.depth(targets[j]);
                    const int dxs = graph_distance(tree, x, targets[j]);
                    const double g = 0.5 * (dx + ds - dxs);
                    const double h = std::max(prev, std::min<double>(g, dx));
                    psi[j] = (h - prev) / sc.alpha_n;
                    prev = h;
                }
                row.coords.push_back(std::move(psi));
            }
        }
        return row;
    };
    const auto rows = parallel_replicas<Row>(cfg.replicas, cfg.workers, seed, one);
    Marginals out;
    out.root_distance.assign(cfg.times.size(), {});
    if (k > 0)
        out.coords.assign(cfg.times.size(), std::vector<std::vector<double>>(k));
    for (const auto& row : rows)
        for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
            out.root_distance[ti].push_back(row.dists[ti]);
            if (k > 0)
                for (int j = 0; j < k; ++j) out.coords[ti][j].push_back(row.coords[ti][j]);
        }
    return out;
}

} // namespace

nlohmann::ordered_json convergence_experiment(const ExperimentConfig& cfg) {
    {
        const auto errs = validate_experiment_config(cfg);
        if (!errs.empty()) {
            std::string msg = "invalid config:";
            for (const auto& e : errs) msg += " [" + e + "]";
            throw std::domain_error(msg);
        }
    }
    nlohmann::ordered_json report;
    report["report-version"] = 1;
    report["command"] = "converge";
    report["config"] = config_echo(cfg);
    std::vector<Marginals> per_size;
    nlohmann::ordered_json sizes_json = nlohmann::ordered_json::array();
    if (cfg.mode == "fixed-tree") {
        const MetricTree fixture = named_fixture(cfg.fixture);
        for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
            const int m = cfg.sizes[si];
            per_size.push_back(
                fixed_tree_marginals(cfg, fixture, m, sub_seed(cfg.seed, si)));
            nlohmann::ordered_json entry;
            entry["edge-scale"] = m;
            entry["seed"] = sub_seed(cfg.seed, si);
            nlohmann::ordered_json stats = nlohmann::ordered_json::array();
            for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
                nlohmann::ordered_json s;
                s["t"] = cfg.times[ti];
                s["root-distance"] = summary_stats(per_size.back().root_distance[ti]);
                stats.push_back(s);
            }
            entry["marginals"] = stats;
            sizes_json.push_back(entry);
        }
        const std::uint64_t bm_seed = sub_seed(cfg.seed, 0xb00ULL);
        const Marginals bm = bm_marginals(cfg, fixture, bm_seed);
        nlohmann::ordered_json bm_json;
        bm_json["seed"] = bm_seed;
        nlohmann::ordered_json stats = nlohmann::ordered_json::array();
        for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
            nlohmann::ordered_json s;
            s["t"] = cfg.times[ti];
            s["root-distance"] = summary_stats(bm.root_distance[ti]);
            stats.push_back(s);
        }
        bm_json["marginals"] = stats;
        report["bm"] = bm_json;
        nlohmann::ordered_json ks = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < per_size.size(); ++a)
            for (std::size_t b = a + 1; b < per_size.size(); ++b)
                for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
                    nlohmann::ordered_json row;
                    row["size-a"] = cfg.sizes[a];
                    row["size-b"] = cfg.sizes[b];
                    row["t"] = cfg.times[ti];
                    row["ks"] = ks_distance(per_size[a].root_distance[ti],
                                            per_size[b].root_distance[ti]);
                    ks.push_back(row);
                }
        report["ks-across-sizes"] = ks;
        nlohmann::ordered_json ksbm = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < per_size.size(); ++a)
            for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
                nlohmann::ordered_json row;
                row["size"] = cfg.sizes[a];
                row["t"] = cfg.times[ti];
                row["ks"] =
                    ks_distance(per_size[a].root_distance[ti], bm.root_distance[ti]);
                ksbm.push_back(row);
            }
        report["ks-vs-bm"] = ksbm;
    } else {
        OffspringDistribution dist = OffspringDistribution::geometric_half();
        if (cfg.offspring == "poisson-1") dist = OffspringDistribution::poisson_1();
        if (cfg.offspring == "stable-tail")
            dist = OffspringDistribution::stable_tail(cfg.alpha, cfg.tail_c);
        for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
            const int n = cfg.sizes[si];
            per_size.push_back(gw_marginals(cfg, dist, n, sub_seed(cfg.seed, si)));
            const ScalingSequence sc = scaling_sequence(dist, n);
            nlohmann::ordered_json entry;
            entry["n"] = n;
            entry["seed"] = sub_seed(cfg.seed, si);
            entry["a-n"] = sc.a_n;
            entry["alpha-n"] = sc.alpha_n;
            entry["tail-constant"] = sc.tail_constant;
            nlohmann::ordered_json stats = nlohmann::ordered_json::array();
            for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
                nlohmann::ordered_json s;
                s["t"] = cfg.times[ti];
                s["root-distance"] = summary_stats(per_size.back().root_distance[ti]);
                if (cfg.pi_k > 0) {
                    nlohmann::ordered_json cj = nlohmann::ordered_json::array();
                    for (int j = 0; j < cfg.pi_k; ++j)
                        cj.push_back(summary_stats(per_size.back().coords[ti][j]));
                    s["embedded-coords"] = cj;
                }
                stats.push_back(s);
            }
            entry["marginals"] = stats;
            sizes_json.push_back(entry);
        }
        nlohmann::ordered_json ks = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < per_size.size(); ++a)
            for (std::size_t b = a + 1; b < per_size.size(); ++b)
                for (std::size_t ti = 0; ti < cfg.times.size(); ++ti) {
                    nlohmann::ordered_json row;
                    row["size-a"] = cfg.sizes[a];
                    row["size-b"] = cfg.sizes[b];
                    row["t"] = cfg.times[ti];
                    row["ks"] = ks_distance(per_size[a].root_distance[ti],
                                            per_size[b].root_distance[ti]);
                    if (cfg.pi_k > 0) {
                        nlohmann::ordered_json cj = nlohmann::ordered_json::array();
                        for (int j = 0; j < cfg.pi_k; ++j)
                            cj.push_back(ks_distance(per_size[a].coords[ti][j],
                                                     per_size[b].coords[ti][j]));
                        row["ks-coords"] = cj;
                    }
                    ks.push_back(row);
                }
        report["ks-across-sizes"] = ks;
        if (cfg.offspring == "stable-tail") {
            // Predicted transition-density sup exponent; reported only.
            nlohmann::ordered_json hk;
            hk["exponent"] = cfg.alpha / (2.0 * cfg.alpha - 1.0);
            hk["log-correction-exponent"] = cfg.alpha / (2.0 * cfg.alpha - 1.0);
            report["heat-kernel-sup"] = hk;
        }
        report["note"] =
            "embedded-coordinate marginals are compared per coordinate after "
            "pi-k truncation; full l1-valued comparison is out of scope";
    }
    report["per-size"] = sizes_json;
    return report;
}

} // namespace dendrite
