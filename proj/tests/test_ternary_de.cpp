#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ldpc/factor_graph.hpp"
#include "ldpc/ternary_de.hpp"

using namespace ldpc;

namespace {

// Independent oracle for the (3,6) update: explicit enumeration of the nine
// (m1, m2) pairs and three received values, with scalar check messages
// computed from first principles.
ternary_state step_oracle_36(const ternary_state& in, const ternary_received& rx, double w) {
    const double alive = 1.0 - in.era;
    const double diff = alive - 2.0 * in.err;
    const double q_pos = 0.5 * (std::pow(alive, 5) + std::pow(diff, 5));
    const double q_neg = 0.5 * (std::pow(alive, 5) - std::pow(diff, 5));
    const double q_era = 1.0 - std::pow(alive, 5);

    const double msg[3] = {1.0, 0.0, -1.0};
    const double msg_p[3] = {q_pos, q_era, q_neg};
    const double rec[3] = {1.0, 0.0, -1.0};
    const double rec_p[3] = {rx.pos, rx.era, rx.neg};

    ternary_state out;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int r = 0; r < 3; ++r) {
                const double prob = msg_p[a] * msg_p[b] * rec_p[r];
                const double s = w * rec[r] + msg[a] + msg[b];
                if (s < -1e-12) {
                    out.err += prob;
                } else if (s <= 1e-12) {
                    out.era += prob;
                }
            }
        }
    }
    return out;
}

// Monte-Carlo estimate of the root message distribution on sampled trees.
ternary_state tree_mc(const edge_perspective& ep, double p, const weight_schedule& weights,
                      int ell, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    long long err = 0, era = 0;
    for (int t = 0; t < trials; ++t) {
        const tree_sample tree = sample_tree(ell, ep, rng());
        std::vector<double> value(tree.nodes.size());
        // bottom-up over the node array (children always come after parents)
        for (std::size_t idx = tree.nodes.size(); idx-- > 0;) {
            const auto& node = tree.nodes[idx];
            if (node.is_variable) {
                const double r = unif(rng) < p ? -1.0 : 1.0;
                if (node.depth == 2 * ell) {
                    value[idx] = r;  // full-depth leaves send the received value
                    continue;
                }
                const int iteration = ell - node.depth / 2;
                double s = weights(iteration) * r;
                for (std::int32_t ch : node.children) s += value[static_cast<std::size_t>(ch)];
                value[idx] = s > 1e-12 ? 1.0 : (s < -1e-12 ? -1.0 : 0.0);
            } else {
                double prod = 1.0;
                for (std::int32_t ch : node.children) {
                    prod *= value[static_cast<std::size_t>(ch)];
                }
                value[idx] = prod;
            }
        }
        if (value[0] < 0.0) ++err;
        if (value[0] == 0.0) ++era;
    }
    return {static_cast<double>(err) / trials, static_cast<double>(era) / trials};
}

}  // namespace

TEST_SUITE_BEGIN("ternary_de");

TEST_CASE("received distributions") {
    const auto bsc = ternary_received::from_bsc(0.07);
    CHECK(bsc.pos == doctest::Approx(0.93));
    CHECK(bsc.era == doctest::Approx(0.0));
    CHECK(bsc.neg == doctest::Approx(0.07));

    const auto awgn = ternary_received::from_biawgn(1.0, 0.5);
    CHECK(awgn.pos + awgn.era + awgn.neg == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(awgn.era == doctest::Approx(q_function(0.5) - q_function(1.5)).epsilon(1e-9));
    // tau = 0 collapses to the hard-decision crossover
    const auto hard = ternary_received::from_biawgn(0.9, 0.0);
    CHECK(hard.era == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hard.neg == doctest::Approx(q_function(1.0 / 0.9)).epsilon(1e-9));
}

TEST_CASE("step matches the exhaustive (3,6) oracle") {
    const edge_perspective ep = regular_pair(3, 6);
    for (double w : {0.5, 1.0, 2.0}) {
        for (double p : {0.03, 0.07, 0.2}) {
            ternary_state state{p, 0.0};
            const auto rx = ternary_received::from_bsc(p);
            for (int iter = 0; iter < 4; ++iter) {
                const ternary_state got = ternary_de_step(state, rx, w, ep);
                const ternary_state expect = step_oracle_36(state, rx, w);
                CHECK(got.err == doctest::Approx(expect.err).epsilon(1e-12));
                CHECK(got.era == doctest::Approx(expect.era).epsilon(1e-12));
                state = got;
            }
        }
    }
}

TEST_CASE("weighted map example: w=2 against two dissenters abstains") {
    // encoded in the recursion: received +1 with both messages -1 lands on
    // the tie and contributes erasure mass
    const edge_perspective ep = regular_pair(3, 6);
    ternary_state all_bad{1.0, 0.0};  // every incoming message is -1
    const auto out = ternary_de_step(all_bad, ternary_received::from_bsc(0.0), 2.0, ep);
    CHECK(out.era == doctest::Approx(1.0));
    CHECK(out.err == doctest::Approx(0.0));
}

TEST_CASE("below threshold the weighted recursion dies out") {
    const edge_perspective ep = regular_pair(3, 6);
    const weight_schedule w({2.0, 1.0});
    const auto report = evolve_weighted_bsc(0.06, ep, w);
    CHECK(report.converged);
    const auto diverged = evolve_weighted_bsc(0.09, ep, w);
    CHECK(!diverged.converged);
}

TEST_CASE("weighted (3,6) BSC threshold is near 0.07") {
    const edge_perspective ep = regular_pair(3, 6);
    const auto thr = weighted_bsc_threshold(ep, weight_schedule({2.0, 1.0}));
    CHECK(std::abs(thr.value - 0.07) < 3e-3);
    CHECK(thr.certified_above - thr.certified_below <= thr.tolerance + 1e-12);
    CHECK(thr.value > thr.certified_below);
    CHECK(thr.value < thr.certified_above);
}

TEST_CASE("tree Monte-Carlo validates the recursion") {
    const edge_perspective ep = regular_pair(3, 6);
    const weight_schedule weights({2.0, 1.0});
    const double p = 0.06;
    const int ell = 2, trials = 40000;

    ternary_state de{p, 0.0};
    const auto rx = ternary_received::from_bsc(p);
    for (int i = 1; i <= ell; ++i) de = ternary_de_step(de, rx, weights(i), ep);

    const ternary_state mc = tree_mc(ep, p, weights, ell, trials, 321);
    const double se_err = std::sqrt(de.err * (1.0 - de.err) / trials) + 1e-9;
    const double se_era = std::sqrt(de.era * (1.0 - de.era) / trials) + 1e-9;
    CHECK(std::abs(mc.err - de.err) < 4.0 * se_err);
    CHECK(std::abs(mc.era - de.era) < 4.0 * se_era);
}

TEST_CASE("ternary biawgn evolution improves on hard decisions") {
    const edge_perspective ep = regular_pair(3, 6);
    // hard-decision gallager-style decoding dies above sigma ~ 0.6; the
    // erasure-augmented optimizer must stay alive well past that
    ternary_policy policy;
    const auto report = evolve_ternary_biawgn(0.70, ep, kDeMaxIterations, kDeConvergenceEps,
                                              &policy);
    CHECK(report.converged);
    CHECK(policy.tau.size() >= 1);
    CHECK(policy.w.size() + 1 == policy.tau.size());
}

TEST_SUITE_END();
