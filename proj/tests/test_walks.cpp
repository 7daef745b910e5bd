#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dendrite/rng.hpp"
#include "dendrite/walks.hpp"

using namespace dendrite;

namespace {

OrderedTree path3() { return OrderedTree::from_parents({-1, 0, 1}); }

} // namespace

TEST_CASE("two-vertex tree forces alternation") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0});
    Rng rng(1);
    const WalkPath x = run_srw(t, 6, rng);
    CHECK(x.vertices == std::vector<int>{0, 1, 0, 1, 0, 1, 0});
}

TEST_CASE("same seed gives identical paths, consecutive vertices adjacent") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 0, 1, 1, 2});
    Rng a(42), b(42);
    const WalkPath x = run_srw(t, 500, a);
    const WalkPath y = run_srw(t, 500, b);
    CHECK(x.vertices == y.vertices);
    CHECK(x.vertices.front() == 0);
    for (std::size_t m = 0; m + 1 < x.vertices.size(); ++m)
        CHECK(graph_distance(t, x.vertices[m], x.vertices[m + 1]) == 1);
}

TEST_CASE("occupation frequencies approach degree-proportional stationarity") {
    const OrderedTree t = path3();
    Rng rng(1234);
    const std::uint64_t M = 1'000'000;
    const WalkPath x = run_srw(t, M, rng);
    std::vector<double> occ(3, 0.0);
    for (int v : x.vertices) occ[v] += 1.0 / x.vertices.size();
    // Stationary law proportional to degree: (1/4, 1/2, 1/4). Allow four
    // standard errors with the crude iid bound.
    const double se = 4.0 * 0.5 / std::sqrt(double(M));
    CHECK(std::abs(occ[0] - 0.25) < 40 * se);  // correlated samples: generous factor
    CHECK(std::abs(occ[1] - 0.50) < 40 * se);
    CHECK(std::abs(occ[2] - 0.25) < 40 * se);
}

TEST_CASE("observing on the whole tree is the identity") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 0, 1});
    Rng rng(5);
    const WalkPath x = run_srw(t, 100, rng);
    const GraphSubtree sub(t, std::vector<int>{1, 2, 3});
    const ObservedWalk obs = observe_on_subtree(x, sub);
    CHECK(obs.jump_chain == x.vertices);
    for (std::size_t l = 0; l < obs.jump_times.size(); ++l)
        CHECK(obs.jump_times[l] == l);
}

TEST_CASE("hand-projected observation on the 3-path") {
    const OrderedTree t = path3();
    const GraphSubtree sub(t, std::vector<int>{1});  // spans {rho, a}
    WalkPath x;
    x.vertices = {0, 1, 2, 1, 0};
    const ObservedWalk obs = observe_on_subtree(x, sub);
    CHECK(obs.jump_chain == std::vector<int>{0, 1, 0});
    CHECK(obs.jump_times == std::vector<std::uint64_t>{0, 1, 4});
}

TEST_CASE("reconstruction identity on random walks") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 0, 1, 1, 2, 2});
    const GraphSubtree sub(t, std::vector<int>{3, 4});
    Rng rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        const WalkPath x = run_srw(t, 200, rng);
        const ObservedWalk obs = observe_on_subtree(x, sub);
        const std::vector<int> rec = reconstruct_observed(obs, 200);
        REQUIRE(rec.size() == x.vertices.size());
        for (std::size_t m = 0; m < rec.size(); ++m)
            CHECK(rec[m] == sub.project(x.vertices[m]));
        // Jump chain never repeats consecutively.
        for (std::size_t l = 0; l + 1 < obs.jump_chain.size(); ++l)
            CHECK(obs.jump_chain[l] != obs.jump_chain[l + 1]);
    }
}

TEST_CASE("discrete local times on the hand example") {
    const OrderedTree t = path3();
    const GraphSubtree sub(t, std::vector<int>{1, 2});  // whole tree
    WalkPath x;
    x.vertices = {0, 1, 2, 1, 0};
    const ObservedWalk obs = observe_on_subtree(x, sub);
    const DiscreteLocalTimes L(obs);
    CHECK(L.at(0, 0) == doctest::Approx(2.0 / 1.0));  // L_0(J_0) = 2/deg(rho)
    CHECK(L.at(4, 1) == doctest::Approx(2.0));        // (2/2)*2 visits of a
    CHECK(L.at(4, 0) == doctest::Approx(4.0));        // (2/1)*2 visits of rho
    CHECK(L.at(1, 2) == doctest::Approx(0.0));
    CHECK(L.length() == 5);
}

TEST_CASE("local time identity: weighted sum counts steps") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 0, 1, 1});
    const GraphSubtree sub(t, std::vector<int>{3, 2});
    Rng rng(9);
    const WalkPath x = run_srw(t, 400, rng);
    const ObservedWalk obs = observe_on_subtree(x, sub);
    const DiscreteLocalTimes L(obs);
    for (std::uint64_t m = 0; m < L.length(); m += 7) {
        double sum = 0.0;
        for (int v : L.support()) sum += sub.degree(v) / 2.0 * L.at(m, v);
        CHECK(sum == doctest::Approx(double(m + 1)));
    }
    // Local times are non-decreasing in m.
    for (int v : L.support())
        for (std::uint64_t m = 1; m < L.length(); ++m) CHECK(L.at(m, v) >= L.at(m - 1, v));
}

TEST_CASE("additive functional on the 3-path hand example") {
    const OrderedTree t = path3();
    const GraphSubtree sub(t, std::vector<int>{1, 2});
    WalkPath x;
    x.vertices = {0, 1, 2};
    const ObservedWalk obs = observe_on_subtree(x, sub);
    const DiscreteLocalTimes L(obs);
    const std::unordered_map<int, double> mu{{0, 1.0 / 3}, {1, 1.0 / 3}, {2, 1.0 / 3}};
    const std::vector<double> ahat = additive_functional_discrete(L, mu, 3);
    REQUIRE(ahat.size() >= 3);
    CHECK(ahat[0] == doctest::Approx(0.0));
    // A-hat_1 = 3*(1/3)*L_0(rho) = 2; A-hat_2 adds L_1 at a: (2/1)+(2/2) = 3.
    CHECK(ahat[1] == doctest::Approx(2.0));
    CHECK(ahat[2] == doctest::Approx(3.0));
    for (std::size_t m = 1; m < ahat.size(); ++m) CHECK(ahat[m] > ahat[m - 1]);
}

TEST_CASE("measure off the subtree is rejected") {
    const OrderedTree t = path3();
    const GraphSubtree sub(t, std::vector<int>{1});
    WalkPath x;
    x.vertices = {0, 1, 0};
    const DiscreteLocalTimes L(observe_on_subtree(x, sub));
    const std::unordered_map<int, double> bad{{2, 1.0}};
    CHECK_THROWS_AS(additive_functional_discrete(L, bad, 3), std::domain_error);
}

TEST_CASE("time change by the hand clock") {
    const OrderedTree t = path3();
    const GraphSubtree sub(t, std::vector<int>{1});
    WalkPath x;
    x.vertices = {0, 1, 2, 1, 0};
    const ObservedWalk obs = observe_on_subtree(x, sub);  // J = (rho, a, rho)
    const std::vector<double> ahat{0.0, 3.0, 5.0};
    const std::vector<int> xhat = time_changed_walk(obs, ahat);
    CHECK(xhat == std::vector<int>{0, 0, 0, 1, 1, 0});
}

TEST_CASE("identity clock reproduces the jump chain") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 0, 2});
    const GraphSubtree sub(t, std::vector<int>{1, 3});
    Rng rng(15);
    const WalkPath x = run_srw(t, 60, rng);
    const ObservedWalk obs = observe_on_subtree(x, sub);
    std::vector<double> ahat(obs.jump_chain.size());
    for (std::size_t l = 0; l < ahat.size(); ++l) ahat[l] = double(l);
    const std::vector<int> xhat = time_changed_walk(obs, ahat);
    REQUIRE(xhat.size() == obs.jump_chain.size());
    for (std::size_t l = 0; l < xhat.size(); ++l) CHECK(xhat[l] == obs.jump_chain[l]);
}

TEST_CASE("edge-count normalization") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 0, 1});
    const GraphSubtree sub(t, std::vector<int>{3});
    CHECK(lambda_nk(sub, 2.0) == doctest::Approx(sub.edge_count() / 2.0));
}
