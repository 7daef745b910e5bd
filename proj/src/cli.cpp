#include "dendrite/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dendrite/bm.hpp"
#include "dendrite/diagnostics.hpp"
#include "dendrite/embedding.hpp"
#include "dendrite/excursion.hpp"
#include "dendrite/experiment.hpp"
#include "dendrite/gw.hpp"
#include "dendrite/metric_tree.hpp"
#include "dendrite/walks.hpp"

namespace dendrite::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

void emit(const fs::path& p) { std::cout << "wrote " << p.string() << "\n"; }

/// Writes the metadata sidecar carrying the config echo and the seed, and
/// announces the artifact.
void write_with_metadata(const fs::path& dir, const std::string& command,
                         const ordered_json& config, std::uint64_t seed,
                         const std::string& ext, const std::string& content) {
    const std::string base = artifact_name(command, config, seed, ext);
    write_file(dir / base, content);
    emit(dir / base);
    ordered_json meta;
    meta["command"] = command;
    meta["config"] = config;
    meta["config-hash"] = config_hash(config);
    meta["seed"] = seed;
    meta["artifact"] = base;
    const std::string meta_name = artifact_name(command, config, seed, "meta.json");
    write_file(dir / meta_name, meta.dump(2) + "\n");
    emit(dir / meta_name);
}

MetricTree load_metric_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("tree: cannot read " + path);
    return metric_tree_from_text(in);
}

OrderedTree load_ordered_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("tree: cannot read " + path);
    return ordered_tree_from_text(in);
}

OffspringDistribution make_offspring(const std::string& name, double alpha, double tail_c) {
    if (name == "geometric-half") return OffspringDistribution::geometric_half();
    if (name == "poisson-1") return OffspringDistribution::poisson_1();
    if (name == "stable-tail") {
        if (!(alpha > 1.0 && alpha < 2.0)) throw ValidationError("alpha: must lie in (1,2)");
        if (!(tail_c > 0.0)) throw ValidationError("tail-c: must be positive");
        return OffspringDistribution::stable_tail(alpha, tail_c);
    }
    throw ValidationError("offspring: unknown law '" + name + "'");
}

int cmd_generate_tree(const std::string& offspring, double alpha, double tail_c, int n,
                      std::uint64_t seed, const std::string& out_dir) {
    if (n < 1) throw ValidationError("n: must be positive");
    const OffspringDistribution dist = make_offspring(offspring, alpha, tail_c);
    ordered_json config;
    config["offspring"] = offspring;
    if (offspring == "stable-tail") {
        config["alpha"] = alpha;
        config["tail-c"] = tail_c;
    }
    config["n"] = n;
    Rng rng(seed);
    ConditionedSampleStats stats;
    const OrderedTree tree = sample_conditioned_tree(dist, n, rng, 100'000'000, &stats);
    const ScalingSequence sc = scaling_sequence(dist, n);
    std::cerr << "rejections " << stats.rejections << ", a_n " << sc.a_n << ", alpha_n "
              << sc.alpha_n << "\n";
    write_with_metadata(out_dir, "generate-tree", config, seed, "tree", to_text(tree));
    return 0;
}

int cmd_search_depth(const std::string& tree_path, const std::string& out_dir) {
    const OrderedTree tree = load_ordered_tree(tree_path);
    ordered_json config;
    config["tree"] = fs::path(tree_path).filename().string();
    write_with_metadata(out_dir, "search-depth", config, 0, "csv",
                        excursion_to_csv(search_depth(tree)));
    return 0;
}

int cmd_embed(const std::string& tree_path, double net, const std::string& out_dir) {
    const MetricTree tree = load_metric_tree(tree_path);
    if (tree.leaf_order().empty())
        throw ValidationError("tree: needs designated leaf order for embedding");
    const double spacing = net > 0.0 ? net : tree.diameter() / 100.0;
    const L1Embedding emb(tree);
    const auto pts = emb.net_image(spacing);
    ordered_json config;
    config["tree"] = fs::path(tree_path).filename().string();
    config["net"] = spacing;
    write_with_metadata(out_dir, "embed", config, 0, "csv",
                        l1_points_to_csv(pts, emb.coordinate_count()));
    return 0;
}

int cmd_walk(const std::string& tree_path, std::uint64_t steps, std::uint64_t seed,
             const std::string& targets_csv, const std::string& out_dir) {
    const OrderedTree tree = load_ordered_tree(tree_path);
    ordered_json config;
    config["tree"] = fs::path(tree_path).filename().string();
    config["steps"] = steps;
    Rng rng(seed);
    const WalkPath path = run_srw(tree, steps, rng);
    std::ostringstream csv;
    csv << "m,vertex\n";
    for (std::size_t m = 0; m < path.vertices.size(); ++m)
        csv << m << "," << path.vertices[m] << "\n";
    if (!targets_csv.empty()) {
        std::vector<int> targets;
        std::stringstream ss(targets_csv);
        for (std::string tok; std::getline(ss, tok, ',');) {
            const int v = std::stoi(tok);
            if (v < 0 || v >= tree.size())
                throw ValidationError("targets: vertex out of range");
            targets.push_back(v);
        }
        config["targets"] = targets;
        const GraphSubtree sub(tree, targets);
        const ObservedWalk obs = observe_on_subtree(path, sub);
        const DiscreteLocalTimes lt(obs);
        const auto mu = sub.pushforward_uniform();
        const auto ahat = additive_functional_discrete(lt, mu, tree.size());
        std::ostringstream fcsv;
        fcsv << std::setprecision(17) << "m,ahat\n";
        for (std::size_t m = 0; m < ahat.size(); ++m) fcsv << m << "," << ahat[m] << "\n";
        write_with_metadata(out_dir, "walk-functional", config, seed, "csv", fcsv.str());
    }
    write_with_metadata(out_dir, "walk", config, seed, "csv", csv.str());
    return 0;
}

int bm_oracle_suite();

int cmd_bm(const std::string& tree_path, double h, double t_end, std::uint64_t seed,
           bool check_oracles, const std::string& out_dir) {
    if (check_oracles) return bm_oracle_suite();
    const MetricTree tree = load_metric_tree(tree_path);
    if (!(h > 0.0) || h > tree.min_edge_length())
        throw ValidationError("h: must be positive and at most the shortest edge");
    if (!(t_end > 0.0)) throw ValidationError("t-end: must be positive");
    ordered_json config;
    config["tree"] = fs::path(tree_path).filename().string();
    config["h"] = h;
    config["t-end"] = t_end;
    const MeshGraph mesh(tree, h);
    Rng rng(seed);
    const BMPath path = run_bm(mesh, t_end, TreePoint::at_node(tree.root()), rng);
    std::ostringstream csv;
    csv << std::setprecision(17) << "clock,edge,offset\n";
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        const TreePoint p = mesh.point(path.nodes[i]);
        if (p.node >= 0) {
            // Nodes are reported on their parent edge (the root as edge -1).
            if (p.node == tree.root())
                csv << path.clock[i] << ",-1,0\n";
            else
                csv << path.clock[i] << "," << tree.parent_edge(p.node) << ","
                    << tree.edge(tree.parent_edge(p.node)).len << "\n";
        } else {
            csv << path.clock[i] << "," << p.edge << "," << p.offset << "\n";
        }
    }
    write_with_metadata(out_dir, "bm", config, seed, "csv", csv.str());
    return 0;
}

int bm_oracle_suite() {
    int failures = 0;
    auto check = [&](const std::string& name, double got, double want, double tol) {
        const bool ok = std::abs(got - want) <= tol;
        std::cout << (ok ? "pass" : "FAIL") << " " << name << ": got " << got << ", want "
                  << want << " (tol " << tol << ")\n";
        if (!ok) ++failures;
    };
    const MetricTree seg = make_segment(1.0);
    const TreePoint a = TreePoint::at_node(0), b = TreePoint::at_node(1);
    const TreePoint mid = TreePoint::on_edge(0, 0.3);
    check("segment hitting probability from 0.3",
          hitting_probability_exact(seg, mid, a, b), 0.7, 1e-12);
    check("segment mean hitting time", mean_hitting_time_exact(seg, length_measure(seg, true), a, b),
          1.0, 1e-12);
    const double arms123[] = {1.0, 2.0, 3.0};
    const MetricTree y123 = make_star_rooted_at_center(arms123);
    check("y-tree hitting probability from center",
          hitting_probability_exact(y123, TreePoint::at_node(0), TreePoint::at_node(1),
                                    TreePoint::at_node(2)),
          2.0 / 3.0, 1e-12);
    const double arms111[] = {1.0, 1.0, 1.0};
    const MetricTree y111 = make_star_rooted_at_center(arms111);
    check("y-tree mean hitting time",
          mean_hitting_time_exact(y111, length_measure(y111, true), TreePoint::at_node(0),
                                  TreePoint::at_node(1)),
          5.0 / 3.0, 1e-12);
    for (int deg = 3; deg <= 6; ++deg) {
        std::vector<double> arms(deg, 1.0);
        for (int i = 0; i < deg; ++i) arms[i] += 0.1 * i;
        const MetricTree star = make_star_rooted_at_center(arms);
        const auto law = branch_exit_law(star, 0, 0.25);
        const auto oracle = branch_exit_law_oracle(star, 0, 0.25);
        double diff = 0.0;
        for (std::size_t i = 0; i < law.prob.size(); ++i)
            diff = std::max(diff, std::abs(law.prob[i] - oracle.prob[i]));
        check("branch exit law vs electrical oracle, degree " + std::to_string(deg), diff,
              0.0, 1e-12);
    }
    std::cout << (failures == 0 ? "all oracle fixtures pass\n" : "oracle fixtures FAILED\n");
    return failures == 0 ? 0 : 1;
}

std::vector<double> parse_radii(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    for (std::string tok; std::getline(ss, tok, ',');) out.push_back(std::stod(tok));
    if (out.empty()) throw ValidationError("radii: need at least one value");
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!(out[i] > 0.0) || (i > 0 && out[i] <= out[i - 1]))
            throw ValidationError("radii: must be positive and increasing");
    return out;
}

int cmd_volume_profile(const std::string& tree_path, bool graph, const std::string& radii_csv,
                       double net, const std::string& out_dir) {
    const std::vector<double> radii = parse_radii(radii_csv);
    ordered_json config;
    config["tree"] = fs::path(tree_path).filename().string();
    config["graph"] = graph;
    config["radii"] = radii;
    VolumeProfile prof;
    if (graph) {
        prof = ball_volume_profile(load_ordered_tree(tree_path), radii);
    } else {
        const MetricTree tree = load_metric_tree(tree_path);
        prof = ball_volume_profile(tree, length_measure(tree, true), radii, net);
        config["net"] = net;
    }
    std::ostringstream csv;
    csv << std::setprecision(17) << "r,inf-volume\n";
    for (std::size_t i = 0; i < prof.radii.size(); ++i)
        csv << prof.radii[i] << "," << prof.inf_volumes[i] << "\n";
    const ExponentFit fit = exponent_fit(prof);
    std::cerr << "fitted exponent " << fit.slope << " (R^2 " << fit.r_squared << ")\n";
    write_with_metadata(out_dir, "volume-profile", config, 0, "csv", csv.str());
    return 0;
}

int cmd_converge(const std::string& config_path, std::int64_t seed_override, int workers,
                 const std::string& out_dir) {
    std::ifstream in(config_path);
    if (!in) throw ValidationError("config: cannot read " + config_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config: parse error: ") + e.what());
    }
    std::vector<std::string> errors;
    ExperimentConfig cfg = experiment_config_from_json(doc, &errors);
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    if (workers > 0) cfg.workers = workers;
    errors = validate_experiment_config(cfg);
    if (!errors.empty()) {
        std::string msg = "config:";
        for (const auto& e : errors) msg += " [" + e + "]";
        throw ValidationError(msg);
    }
    const ordered_json report = convergence_experiment(cfg);
    write_with_metadata(out_dir, "converge", report["config"], cfg.seed, "report.json",
                        report.dump(2) + "\n");
    return 0;
}

} // namespace

std::string config_hash(const ordered_json& config) {
    const std::string s = config.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string artifact_name(const std::string& command, const ordered_json& config,
                          std::uint64_t seed, const std::string& ext) {
    return command + "-" + config_hash(config) + "-" + std::to_string(seed) + "." + ext;
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"simulation toolkit for random trees and tree-valued motions"};
    app.require_subcommand(1);
    std::string out_dir = ".";
    app.add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* gen = app.add_subcommand("generate-tree", "sample a conditioned Galton-Watson tree");
    std::string offspring = "geometric-half";
    double alpha = 1.5, tail_c = 0.5;
    int n = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    gen->add_option("--offspring", offspring, "offspring law");
    gen->add_option("--alpha", alpha, "stable tail index");
    gen->add_option("--tail-c", tail_c, "stable tail constant");
    gen->add_option("--n", n, "total progeny")->required();
    gen->add_option("--seed", seed, "rng seed")->each([&](const std::string&) { seed_set = true; });

    auto* sd = app.add_subcommand("search-depth", "search-depth excursion of an ordered tree");
    std::string tree_path;
    sd->add_option("--tree", tree_path, "tree file")->required();

    auto* em = app.add_subcommand("embed", "l1 embedding of a metric tree");
    double net = 0.0;
    em->add_option("--tree", tree_path, "tree file")->required();
    em->add_option("--net", net, "net spacing");

    auto* wk = app.add_subcommand("walk", "simple random walk on an ordered tree");
    std::uint64_t steps = 0;
    std::string targets_csv;
    wk->add_option("--tree", tree_path, "tree file")->required();
    wk->add_option("--steps", steps, "number of steps")->required();
    wk->add_option("--seed", seed, "rng seed")->each([&](const std::string&) { seed_set = true; });
    wk->add_option("--targets", targets_csv, "subtree target vertices (comma separated)");

    auto* bm = app.add_subcommand("bm", "Brownian motion on a metric tree");
    bm->set_help_flag("--help", "print help");  // frees -h for the mesh spacing
    double h = 0.01, t_end = 1.0;
    bool check_oracles = false;
    bm->add_option("--tree", tree_path, "tree file");
    bm->add_option("--h", h, "mesh spacing")->capture_default_str();
    bm->add_option("--t-end", t_end, "duration")->capture_default_str();
    bm->add_option("--seed", seed, "rng seed")->each([&](const std::string&) { seed_set = true; });
    bm->add_flag("--check-oracles", check_oracles, "run the exact-formula fixture suite");

    auto* vp = app.add_subcommand("volume-profile", "inf ball-volume profile");
    std::string radii_csv;
    bool graph = false;
    vp->add_option("--tree", tree_path, "tree file")->required();
    vp->add_option("--radii", radii_csv, "radii (comma separated)")->required();
    vp->add_flag("--graph", graph, "treat input as a graph tree with uniform vertex measure");
    vp->add_option("--net", net, "net spacing");

    auto* cv = app.add_subcommand("converge", "convergence experiment from a config document");
    std::string config_path;
    std::int64_t seed_override = -1;
    int workers = 0;
    cv->add_option("--config", config_path, "config json")->required();
    cv->add_option("--seed", seed_override, "seed override");
    cv->add_option("--workers", workers, "worker threads");

    try {
        std::vector<const char*> cargv{"dendrite"};
        for (const auto& a : args) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (gen->parsed()) {
            if (!seed_set) throw ValidationError("seed: required for simulation commands");
            return cmd_generate_tree(offspring, alpha, tail_c, n, seed, out_dir);
        }
        if (sd->parsed()) return cmd_search_depth(tree_path, out_dir);
        if (em->parsed()) return cmd_embed(tree_path, net, out_dir);
        if (wk->parsed()) {
            if (!seed_set) throw ValidationError("seed: required for simulation commands");
            return cmd_walk(tree_path, steps, seed, targets_csv, out_dir);
        }
        if (bm->parsed()) {
            if (!check_oracles && !seed_set)
                throw ValidationError("seed: required for simulation commands");
            if (!check_oracles && tree_path.empty())
                throw ValidationError("tree: required unless --check-oracles");
            return cmd_bm(tree_path, h, t_end, seed, check_oracles, out_dir);
        }
        if (vp->parsed()) return cmd_volume_profile(tree_path, graph, radii_csv, net, out_dir);
        if (cv->parsed()) return cmd_converge(config_path, seed_override, workers, out_dir);
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dendrite::cli
