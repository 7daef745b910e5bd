#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "dendrite/excursion.hpp"
#include "dendrite/gw.hpp"
#include "dendrite/rng.hpp"

using namespace dendrite;

namespace {

Excursion triangle() {
    return Excursion({0.0, 0.5, 1.0}, {0.0, 0.5, 0.0});  // w(t)=min(t,1-t)
}

// Two peaks of heights 1 and 0.6 with a valley of depth 0.2 between them.
Excursion two_peak() {
    return Excursion({0.0, 0.25, 0.5, 0.75, 1.0}, {0.0, 1.0, 0.2, 0.6, 0.0});
}

OrderedTree path3() { return OrderedTree::from_parents({-1, 0, 1}); }
OrderedTree cherry() { return OrderedTree::from_parents({-1, 0, 0}); }

// All ordered trees with n vertices, via valid Lukasiewicz paths.
void enumerate_trees(int n, const std::function<void(const OrderedTree&)>& fn) {
    std::vector<int> inc(n);
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (i == n) {
            if (sum == -1) fn(decode_lukasiewicz(LukasiewiczPath{inc}));
            return;
        }
        // Partial sums must stay >= 0 before the last step.
        for (int x = -1; x <= n - 1; ++x) {
            if (sum + x < (i + 1 == n ? -1 : 0)) continue;
            if (sum + x > n - 1 - i) continue;  // cannot come back down in time
            inc[i] = x;
            rec(i + 1, sum + x);
        }
    };
    rec(0, 0);
}

} // namespace

TEST_CASE("excursion evaluation and interval minimum") {
    const Excursion w = triangle();
    CHECK(w.value(0.25) == doctest::Approx(0.25));
    CHECK(w.min_on(0.2, 0.6) == doctest::Approx(0.2));
    CHECK(w.min_on(0.4, 0.4) == doctest::Approx(0.4));
    CHECK_THROWS_AS(Excursion({0.0, 1.0}, {0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Excursion({0.0, 0.5, 1.0}, {0.0, -0.1, 0.0}), std::invalid_argument);
    CHECK_NOTHROW(triangle().validate_positive_interior());
    CHECK_THROWS_AS(Excursion({0.0, 0.5, 1.0}, {0.0, 0.0, 0.0}).validate_positive_interior(),
                    std::domain_error);
}

TEST_CASE("excursion distance on the triangle") {
    const Excursion w = triangle();
    // w(0.2)=0.2, w(0.6)=0.4, min on [0.2,0.6] = 0.2.
    CHECK(excursion_distance(w, 0.2, 0.6) == doctest::Approx(0.2));
    CHECK(excursion_distance(w, 0.6, 0.2) == doctest::Approx(0.2));
    CHECK(excursion_distance(w, 0.3, 0.3) == doctest::Approx(0.0));
    // Distance to the endpoints is the value itself.
    CHECK(excursion_distance(w, 0.0, 0.7) == doctest::Approx(w.value(0.7)));
}

TEST_CASE("tree from the two-peak excursion is a cherry") {
    const Excursion w = two_peak();
    const double u[] = {0.25, 0.75};
    const MetricTree t = tree_from_excursion(w, u);
    // Root, branch point at height 0.2, two leaves at heights 1 and 0.6.
    CHECK(t.node_count() == 4);
    CHECK(t.total_length() == doctest::Approx(0.2 + 0.8 + 0.4));
    REQUIRE(t.leaf_order().size() == 2);
    const TreePoint l1 = t.leaf_order()[0], l2 = t.leaf_order()[1];
    CHECK(t.depth(l1) == doctest::Approx(1.0));
    CHECK(t.depth(l2) == doctest::Approx(0.6));
    CHECK(t.distance(l1, l2) == doctest::Approx(1.2));
}

TEST_CASE("sampled excursion tree distances match the formula") {
    const Excursion w = two_peak();
    Rng rng(3);
    std::vector<double> u;
    for (int i = 0; i < 8; ++i) u.push_back(0.03 + 0.94 * rng.uniform01());
    const MetricTree t = tree_from_excursion(w, u);
    REQUIRE(t.leaf_order().size() == u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const TreePoint pi = t.leaf_order()[i];
        CHECK(t.depth(t.leaf_order()[i]) == doctest::Approx(w.value(u[i])));
        for (std::size_t j = 0; j < u.size(); ++j) {
            const TreePoint pj = t.leaf_order()[j];
            CHECK(t.distance(pi, pj) ==
                  doctest::Approx(excursion_distance(w, u[i], u[j])).epsilon(1e-9));
        }
    }
}

TEST_CASE("nested samples give compatible trees") {
    const Excursion w = two_peak();
    Rng rng(9);
    std::vector<double> u;
    for (int i = 0; i < 6; ++i) u.push_back(0.05 + 0.9 * rng.uniform01());
    const MetricTree big = tree_from_excursion(w, u);
    const MetricTree small = tree_from_excursion(w, std::span(u).first(3));
    // The small tree embeds isometrically: pairwise leaf distances agree.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(small.distance(small.leaf_order()[i], small.leaf_order()[j]) ==
                  doctest::Approx(big.distance(big.leaf_order()[i], big.leaf_order()[j])));
}

TEST_CASE("search depth of the path and the cherry") {
    const Excursion wp = search_depth(path3());
    // Grid {i/6}, depths 0,1,2,1,0 then held at 0.
    const std::vector<double> expect_p{0, 1, 2, 1, 0, 0, 0};
    REQUIRE(wp.values().size() == 7);
    for (int i = 0; i < 7; ++i) {
        CHECK(wp.grid()[i] == doctest::Approx(i / 6.0));
        CHECK(wp.values()[i] == doctest::Approx(expect_p[i]));
    }
    const Excursion wc = search_depth(cherry());
    const std::vector<double> expect_c{0, 1, 0, 1, 0, 0, 0};
    for (int i = 0; i < 7; ++i) CHECK(wc.values()[i] == doctest::Approx(expect_c[i]));
}

TEST_CASE("one-vertex tree has the zero excursion") {
    const OrderedTree t = OrderedTree::from_parents({-1});
    const Excursion w = search_depth(t);
    CHECK(w.values().size() == 3);
    for (double v : w.values()) CHECK(v == doctest::Approx(0.0));
    CHECK(point_at(t, w, 0.37) == 0);
}

TEST_CASE("rounded point at 0.26 on the path picks the deeper grid neighbour") {
    const OrderedTree t = path3();
    const Excursion w = search_depth(t);
    // 2n*s = 1.56: floor point depth 1, ceil point depth 2, so take the ceil,
    // which is the far end of the path.
    CHECK(point_at(t, w, 0.26) == 2);
    // Ties keep the floor point.
    CHECK(point_at(t, w, 0.5) == search_depth_traversal(t)[3]);
}

TEST_CASE("rounded point sits within half a grid step") {
    Rng rng(21);
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 1, 1, 0, 4, 4});
    const Excursion w = search_depth(t);
    const auto trav = search_depth_traversal(t);
    const auto visit = first_visit_times(t);
    const int n = t.size();
    for (int rep = 0; rep < 500; ++rep) {
        const double s = rng.uniform01();
        const int v = point_at(trav, w, s);
        // The chosen grid point is one of the two neighbours of 2n*s.
        const double lo = std::floor(2 * n * s) / (2.0 * n);
        const double hi = std::ceil(2 * n * s) / (2.0 * n);
        CHECK((std::abs(visit[v] - lo) < 1e-12 || std::abs(visit[v] - hi) < 1e-12 ||
               w.value(lo) == w.value(visit[v]) || w.value(hi) == w.value(visit[v])));
        CHECK(std::min(std::abs(s - lo), std::abs(s - hi)) <= 0.5 / n + 1e-12);
    }
}

TEST_CASE("pushing forward uniform time gives the uniform vertex measure") {
    const OrderedTree t = OrderedTree::from_parents({-1, 0, 1, 1, 0});
    const Excursion w = search_depth(t);
    const auto trav = search_depth_traversal(t);
    const int n = t.size();
    // point_at is constant on half-open grid cells, so integrate exactly by
    // probing each cell's midpoint.
    std::vector<double> mass(n, 0.0);
    for (int i = 0; i < 2 * n; ++i)
        mass[point_at(trav, w, (i + 0.5) / (2.0 * n))] += 1.0 / (2.0 * n);
    for (int v = 0; v < n; ++v) CHECK(mass[v] == doctest::Approx(1.0 / n));
}

TEST_CASE("round trip through the excursion recovers every small tree") {
    for (int n = 1; n <= 6; ++n) {
        int count = 0;
        enumerate_trees(n, [&](const OrderedTree& t) {
            ++count;
            if (n == 1) return;
            const Excursion w = search_depth(t);
            const auto u = first_visit_times(t);
            const MetricTree r = tree_from_excursion(w, std::span(u).subspan(1));
            // Unit-edge metric tree with the same pairwise graph distances.
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    CHECK(r.distance(r.leaf_order()[i - 1], r.leaf_order()[j - 1]) ==
                          doctest::Approx(static_cast<double>(graph_distance(t, i, j))));
            for (int i = 1; i < n; ++i)
                CHECK(r.depth(r.leaf_order()[i - 1]) ==
                      doctest::Approx(static_cast<double>(graph_distance(t, 0, i))));
        });
        // Catalan numbers 1, 1, 2, 5, 14, 42.
        const int catalan[] = {0, 1, 1, 2, 5, 14, 42};
        CHECK(count == catalan[n]);
    }
}

TEST_CASE("excursion csv round trip") {
    const Excursion w = two_peak();
    std::istringstream in(excursion_to_csv(w));
    const Excursion back = excursion_from_csv(in);
    REQUIRE(back.grid().size() == w.grid().size());
    for (std::size_t i = 0; i < w.grid().size(); ++i) {
        CHECK(back.grid()[i] == doctest::Approx(w.grid()[i]));
        CHECK(back.values()[i] == doctest::Approx(w.values()[i]));
    }
    CHECK(excursion_to_csv(w).rfind("t,value\n", 0) == 0);
}
