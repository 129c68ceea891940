#include <doctest.h>

#include <map>
#include <set>

#include "ldpc/errors.hpp"
#include "ldpc/factor_graph.hpp"

using namespace ldpc;

TEST_SUITE_BEGIN("factor_graph");

TEST_CASE("two degree-1 variables force the unique matching") {
    const node_perspective np{polynomial({0.0, 2.0}), polynomial({0.0, 0.0, 1.0})};
    const factor_graph g = sample_ensemble(np, 5);
    CHECK(g.variable_count() == 2);
    CHECK(g.check_count() == 1);
    REQUIRE(g.edge_count() == 2);
    std::set<std::int32_t> vars;
    for (const auto& [v, c] : g.edges()) {
        vars.insert(v);
        CHECK(c == 0);
    }
    CHECK(vars == std::set<std::int32_t>{0, 1});
}

TEST_CASE("regular ensemble degree histogram is exact") {
    const factor_graph g = sample_regular(1000, 3, 6, 99);
    CHECK(g.edge_count() == 3000);
    CHECK(g.check_count() == 500);
    for (int v = 0; v < g.variable_count(); ++v) CHECK(g.var_degree(v) == 3);
    for (int c = 0; c < g.check_count(); ++c) CHECK(g.chk_degree(c) == 6);
}

TEST_CASE("irregular ensemble histogram matches the node counts") {
    const edge_perspective ep{polynomial({0.0, 0.4, 0.6}), polynomial::monomial(4)};
    const node_perspective np = edge_to_node(200, ep);
    const factor_graph g = sample_ensemble(np, 3);
    std::map<int, int> var_hist, chk_hist;
    for (int v = 0; v < g.variable_count(); ++v) ++var_hist[g.var_degree(v)];
    for (int c = 0; c < g.check_count(); ++c) ++chk_hist[g.chk_degree(c)];
    for (const auto& [deg, count] : var_hist) {
        CHECK(count == static_cast<int>(np.lambda_nodes.coeff(static_cast<std::size_t>(deg))));
    }
    for (const auto& [deg, count] : chk_hist) {
        CHECK(count == static_cast<int>(np.check_nodes.coeff(static_cast<std::size_t>(deg))));
    }
}

TEST_CASE("sampling is deterministic per seed") {
    const factor_graph a = sample_regular(120, 3, 6, 7);
    const factor_graph b = sample_regular(120, 3, 6, 7);
    const factor_graph c = sample_regular(120, 3, 6, 8);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
}

TEST_CASE("regular sampling validates divisibility") {
    CHECK_THROWS_AS(sample_regular(5, 3, 6, 1), invalid_parameter);
    const factor_graph g = sample_regular(6, 3, 6, 1);
    CHECK(g.check_count() == 3);
    CHECK(g.edge_count() == 18);
}

TEST_CASE("parity matrix applies the odd multiplicity rule") {
    SUBCASE("double edge cancels") {
        const factor_graph g(1, 1, {{0, 0}, {0, 0}});
        const parity_check_matrix h = to_parity_check(g);
        CHECK(h.row_cols[0].empty());
    }
    SUBCASE("triple edge stays") {
        const factor_graph g(1, 1, {{0, 0}, {0, 0}, {0, 0}});
        CHECK(to_parity_check(g).row_cols[0] == std::vector<std::int32_t>{0});
    }
    SUBCASE("simple graph gives the adjacency matrix") {
        const factor_graph g(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
        const parity_check_matrix h = to_parity_check(g);
        CHECK(h.row_cols[0] == std::vector<std::int32_t>{0, 1});
        CHECK(h.row_cols[1] == std::vector<std::int32_t>{1, 2});
        CHECK(h.entry_count() == g.edge_count());
    }
}

TEST_CASE("girth detects the smallest bipartite cycles") {
    SUBCASE("4-cycle") {
        const factor_graph g(2, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
        CHECK(girth(g) == 4);
    }
    SUBCASE("tree has no cycle") {
        const factor_graph g(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
        CHECK(!girth(g).has_value());
    }
    SUBCASE("hand-built 6-cycle") {
        const factor_graph g(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}});
        CHECK(girth(g) == 6);
    }
}

TEST_CASE("girth conditioning reaches girth 6 within the retry budget") {
    factor_graph g = sample_regular(1000, 3, 6, 2024);
    REQUIRE(ensure_girth(g, 6, 77, 100));
    const auto measured = girth(g);
    REQUIRE(measured.has_value());
    CHECK(*measured >= 6);
    // degrees survive the rewiring
    for (int v = 0; v < g.variable_count(); ++v) CHECK(g.var_degree(v) == 3);
    for (int c = 0; c < g.check_count(); ++c) CHECK(g.chk_degree(c) == 6);
}

TEST_CASE("tree sampling") {
    const edge_perspective ep = regular_pair(3, 6);
    SUBCASE("ell=0 is a lone root") {
        const tree_sample t = sample_tree(0, ep, 3);
        CHECK(t.nodes.size() == 1);
        CHECK(t.nodes[0].is_variable);
    }
    SUBCASE("regular ell=1 structure is forced") {
        const tree_sample t = sample_tree(1, ep, 4);
        CHECK(t.nodes[0].children.size() == 2);  // d_v - 1 check children
        std::size_t vars_at_2 = t.leaf_count_at_depth(2);
        CHECK(vars_at_2 == 10);  // 2 checks x 5 variable children
        CHECK(t.variable_count() == 11);
    }
    SUBCASE("layers alternate") {
        const tree_sample t = sample_tree(2, ep, 5);
        for (const auto& n : t.nodes) {
            CHECK(n.is_variable == (n.depth % 2 == 0));
            if (n.parent >= 0) {
                CHECK(t.nodes[static_cast<std::size_t>(n.parent)].depth == n.depth - 1);
            }
        }
    }
}

TEST_CASE("edges must reference valid nodes") {
    CHECK_THROWS_AS(factor_graph(2, 2, {{0, 5}}), invalid_parameter);
}

TEST_SUITE_END();
