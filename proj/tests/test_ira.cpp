#include <doctest.h>

#include <cmath>
#include <random>

#include "ldpc/errors.hpp"
#include "ldpc/ira.hpp"
#include "ldpc/rng.hpp"

using namespace ldpc;

namespace {

received_word erase_none(const std::vector<double>& codeword) {
    return {channel_model::bec(0.0), codeword};
}

// k = 3 hand instance with checks {m0,m1}, {m1,m2}, {m0,m2}
ira_graph hand_instance() {
    return ira_graph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {0, 2}, {2, 2}});
}

// decodable hand instance: checks {m0}, {m0,m1}, {m1,m2}
ira_graph decodable_instance() {
    return ira_graph(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
}

}  // namespace

TEST_SUITE_BEGIN("ira");

TEST_CASE("hand-worked encoding") {
    const std::vector<double> message{1.0, -1.0, 1.0};
    const std::vector<double> w = ira_encode(hand_instance(), message);
    // v = (-1, -1, +1), accumulated to w = (-1, +1, +1)
    CHECK(w == std::vector<double>{-1.0, 1.0, 1.0});
}

TEST_CASE("all-plus message encodes to all-plus") {
    const std::vector<double> w = ira_encode(hand_instance(), std::vector<double>(3, 1.0));
    CHECK(w == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("accumulator identity w_j w_{j-1} = v_j") {
    const ira_graph g = ira_graph::sample(200, {polynomial({0.0, 0.0, 1.0}), polynomial({1.0})},
                                          21);
    std::mt19937_64 rng(22);
    std::vector<double> message(200);
    for (double& m : message) m = rng() % 2 == 0 ? 1.0 : -1.0;
    const std::vector<double> w = ira_encode(g, message);
    for (int c = 0; c < g.check_count(); ++c) {
        double v = 1.0;
        for (std::int32_t e : g.check_edges(c)) {
            v *= message[static_cast<std::size_t>(g.edge_info(e))];
        }
        const double prev = c == 0 ? 1.0 : w[static_cast<std::size_t>(c - 1)];
        CHECK(w[static_cast<std::size_t>(c)] * prev == doctest::Approx(v));
    }
}

TEST_CASE("flipping one message bit flips an accumulator suffix pattern") {
    const ira_graph g = hand_instance();
    const std::vector<double> base{1.0, 1.0, 1.0};
    const std::vector<double> w0 = ira_encode(g, base);
    for (int bit = 0; bit < 3; ++bit) {
        std::vector<double> flipped = base;
        flipped[static_cast<std::size_t>(bit)] = -1.0;
        const std::vector<double> w1 = ira_encode(g, flipped);
        // expected flip set: w_j flips iff an odd number of checks <= j touch
        // the bit an odd number of times
        int parity = 0;
        for (int c = 0; c < g.check_count(); ++c) {
            int touches = 0;
            for (std::int32_t e : g.check_edges(c)) {
                touches += g.edge_info(e) == bit ? 1 : 0;
            }
            parity ^= touches & 1;
            CHECK(w1[static_cast<std::size_t>(c)] ==
                  (parity ? -w0[static_cast<std::size_t>(c)] : w0[static_cast<std::size_t>(c)]));
        }
    }
}

TEST_CASE("rate formula") {
    CHECK(ira_rate({polynomial::monomial(3), polynomial::monomial(1)}) == doctest::Approx(0.5));
    CHECK(ira_rate({polynomial::monomial(2), polynomial::monomial(2)}) == doctest::Approx(1.0));
    CHECK(ira_rate({polynomial::monomial(5), polynomial::monomial(2)}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ira_rate({polynomial::monomial(1), polynomial::monomial(3)}),
                    invalid_distribution);
}

TEST_CASE("check series matches the integral formula and sampled histograms") {
    const edge_perspective ep{polynomial({0.0, 0.0, 0.0, 1.0}), polynomial({0.0, 1.0})};
    const check_series series = check_series::from_edge_perspective(ep);
    CHECK(series.r(1.0) == doctest::Approx(1.0));
    CHECK(series.r.coeff(2) == doctest::Approx(1.0));  // R(x) = x^2 for rho = x

    const ira_graph g = ira_graph::sample(600, ep, 31);
    std::vector<int> hist;
    for (int c = 0; c < g.check_count(); ++c) {
        const int d = static_cast<int>(g.check_edges(c).size());
        if (d >= static_cast<int>(hist.size())) hist.resize(static_cast<std::size_t>(d) + 1, 0);
        ++hist[static_cast<std::size_t>(d)];
    }
    CHECK(hist[2] == g.check_count());  // every check has exactly 2 info edges
}

TEST_CASE("sampled instance rate matches the formula within integrality slack") {
    const edge_perspective ep{polynomial::monomial(3), polynomial::monomial(1)};
    const ira_graph g = ira_graph::sample(5000, ep, 7);
    const double rate = static_cast<double>(g.info_count()) / g.check_count();
    CHECK(std::abs(rate - ira_rate(ep)) < 2.0 / g.check_count() + 1e-9);
}

TEST_CASE("success condition at alpha = 0 holds strictly") {
    const edge_perspective ep{polynomial::monomial(3), polynomial::monomial(1)};
    const auto report = ira_success_condition(ep, 0.0, 2000);
    CHECK(report.satisfied);
    CHECK(report.min_slack > 0.0);
    CHECK(report.boundary_equality);  // rho(0) = 0 for rho = x
}

TEST_CASE("success condition is monotone in alpha across a sweep") {
    const edge_perspective ep{polynomial::monomial(3), polynomial::monomial(1)};
    bool was_satisfied = true;
    double last_slack = 1e9;
    for (double alpha = 0.0; alpha < 0.6; alpha += 0.05) {
        const auto report = ira_success_condition(ep, alpha, 2000);
        CHECK(report.min_slack <= last_slack + 1e-12);
        last_slack = report.min_slack;
        if (!was_satisfied) CHECK(!report.satisfied);
        was_satisfied = report.satisfied;
    }
}

TEST_CASE("success condition fails near x=1 once alpha is large") {
    const edge_perspective ep{polynomial::monomial(3), polynomial::monomial(1)};
    const auto report = ira_success_condition(ep, 0.45, 4000);
    CHECK(!report.satisfied);
    CHECK(report.argmin_x > 0.9);
    const auto ok = ira_success_condition(ep, 0.30, 4000);
    CHECK(ok.satisfied);
}

TEST_CASE("degree-1 checks bootstrap erasure-free inversion") {
    // rho = 1 puts every check on a single information node, so peeling
    // inverts the encoder whenever nothing is erased
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 40 + static_cast<int>(rng() % 200);
        const edge_perspective ep{trial % 2 == 0 ? polynomial::monomial(1)
                                                 : polynomial({0.0, 0.5, 0.5}),
                                  polynomial({1.0})};
        const ira_graph g = ira_graph::sample(k, ep, rng());
        std::vector<double> message(static_cast<std::size_t>(g.info_count()));
        for (double& m : message) m = rng() % 2 == 0 ? 1.0 : -1.0;
        const std::vector<double> w = ira_encode(g, message);
        const auto res = ira_decode_bec(g, erase_none(w), 1 << 20);
        REQUIRE(res.status == decode_status::success);
        CHECK(res.word == message);
    }
}

TEST_CASE("decodable hand instance round trips") {
    const ira_graph g = decodable_instance();
    const std::vector<double> message{1.0, -1.0, 1.0};
    const std::vector<double> w = ira_encode(g, message);
    const auto res = ira_decode_bec(g, erase_none(w), 100);
    CHECK(res.status == decode_status::success);
    CHECK(res.word == message);
}

TEST_CASE("all-erased word stalls") {
    const ira_graph g = decodable_instance();
    const auto res = ira_decode_bec(g, {channel_model::bec(0.9), {0.0, 0.0, 0.0}}, 100);
    CHECK(res.status == decode_status::stall);
    CHECK(res.residual == 3);
}

TEST_CASE("removing an erasure never hurts") {
    std::mt19937_64 rng(23);
    const edge_perspective ep{polynomial({0.0, 0.3, 0.7}), polynomial({0.4, 0.6})};
    for (int trial = 0; trial < 100; ++trial) {
        const ira_graph g = ira_graph::sample(60, ep, 400 + trial);
        std::vector<double> message(static_cast<std::size_t>(g.info_count()), 1.0);
        const std::vector<double> w = ira_encode(g, message);
        received_word rw{channel_model::bec(0.3), w};
        std::vector<std::size_t> erased;
        for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
            if (rng() % 3 == 0) {
                rw.symbols[i] = 0.0;
                erased.push_back(i);
            }
        }
        const auto base = ira_decode_bec(g, rw, 1 << 20);
        if (erased.empty()) continue;
        // restore the true symbol at one erased position
        received_word fewer = rw;
        const std::size_t pick = erased[rng() % erased.size()];
        fewer.symbols[pick] = w[pick];
        const auto better = ira_decode_bec(g, fewer, 1 << 20);
        if (base.status == decode_status::success) {
            CHECK(better.status == decode_status::success);
        }
        CHECK(better.residual <= base.residual);
    }
}

TEST_CASE("doped check-regular ensemble decodes below its condition margin") {
    // 5% of edges moved to degree-1 checks keeps Eq-style startup alive
    const edge_perspective ep{polynomial::monomial(3), polynomial({0.05, 0.95})};
    const auto cond = ira_success_condition(ep, 0.25, 4000);
    REQUIRE(cond.satisfied);
    REQUIRE(!cond.boundary_equality);

    long long errors = 0, bits = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const ira_graph g = ira_graph::sample(3000, ep, 900 + trial);
        const std::vector<double> message(static_cast<std::size_t>(g.info_count()), 1.0);
        const std::vector<double> w = ira_encode(g, message);
        const auto rw = transmit(w, channel_model::bec(0.25), 1700 + trial);
        const auto res = ira_decode_bec(g, rw, 1 << 20);
        bits += g.info_count();
        errors += res.residual;
    }
    CHECK(static_cast<double>(errors) / static_cast<double>(bits) < 1e-3);
}

TEST_CASE("length and symbol validation") {
    const ira_graph g = hand_instance();
    CHECK_THROWS_AS(ira_encode(g, std::vector<double>{1.0}), invalid_parameter);
    CHECK_THROWS_AS(ira_decode_bec(g, {channel_model::bsc(0.1), {1.0, 1.0, 1.0}}, 10),
                    invalid_parameter);
}

TEST_SUITE_END();
