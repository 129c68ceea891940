#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/errors.hpp"

using namespace ldpc;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> all_ones(std::size_t n) { return std::vector<double>(n, 1.0); }
}  // namespace

TEST_SUITE_BEGIN("channels");

TEST_CASE("BEC(0) is the identity") {
    const auto rw = transmit(all_ones(100), channel_model::bec(0.0), 7);
    for (double s : rw.symbols) CHECK(s == 1.0);
}

TEST_CASE("BEC erasure fraction concentrates") {
    const std::size_t n = 100000;
    const auto rw = transmit(all_ones(n), channel_model::bec(0.5), 11);
    std::size_t erased = 0;
    for (double s : rw.symbols) erased += s == 0.0 ? 1 : 0;
    const double frac = static_cast<double>(erased) / n;
    CHECK(frac > 0.49);
    CHECK(frac < 0.51);
}

TEST_CASE("BSC flip fraction concentrates") {
    const std::size_t n = 100000;
    const auto rw = transmit(all_ones(n), channel_model::bsc(0.11), 13);
    std::size_t flips = 0;
    for (double s : rw.symbols) flips += s < 0.0 ? 1 : 0;
    const double frac = static_cast<double>(flips) / n;
    CHECK(frac > 0.10);
    CHECK(frac < 0.12);
}

TEST_CASE("transmit is deterministic per seed and varies across seeds") {
    const auto a = transmit(all_ones(512), channel_model::bec(0.3), 42);
    const auto b = transmit(all_ones(512), channel_model::bec(0.3), 42);
    const auto c = transmit(all_ones(512), channel_model::bec(0.3), 43);
    CHECK(a.symbols == b.symbols);
    CHECK(a.symbols != c.symbols);
}

TEST_CASE("capacity formulas") {
    CHECK(capacity(channel_model::bec(0.5)) == doctest::Approx(0.5));
    CHECK(capacity(channel_model::bsc(0.11)) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(capacity(channel_model::biawgn(0.9787)) == doctest::Approx(0.5).epsilon(1e-2));
    CHECK(std::abs(capacity(channel_model::biawgn(0.9787)) - 0.5) < 5e-3);
}

TEST_CASE("capacity(BSC(p)) equals capacity(BEC(H(p)))") {
    for (double p : {0.05, 0.11, 0.3}) {
        CHECK(capacity(channel_model::bsc(p)) ==
              doctest::Approx(capacity(channel_model::bec(binary_entropy(p)))).epsilon(1e-12));
    }
}

TEST_CASE("soft decoding beats hard quantization in capacity") {
    for (double sigma : {0.7, 0.9, 1.1}) {
        const double hard = 1.0 - binary_entropy(q_function(1.0 / sigma));
        CHECK(capacity(channel_model::biawgn(sigma)) > hard);
    }
}

TEST_CASE("binary entropy and its inverse") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == doctest::Approx(0.0));
    CHECK(binary_entropy(0.11) == doctest::Approx(0.4999).epsilon(2e-4));
    for (double x : {0.05, 0.11, 0.3}) {
        CHECK(inverse_binary_entropy(binary_entropy(x)) == doctest::Approx(x).epsilon(1e-8));
    }
}

TEST_CASE("Q function") {
    CHECK(q_function(0.0) == doctest::Approx(0.5));
    CHECK(q_function(1.0 / 0.743) == doctest::Approx(0.089).epsilon(1e-2));
    CHECK(std::abs(q_function(1.0 / 0.743) - 0.089) < 1e-3);
    for (double x : {-1.3, 0.2, 2.7}) {
        CHECK(q_function(x) + q_function(-x) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hard quantization") {
    received_word rw{channel_model::biawgn(1.0), {0.0, -0.3, 2.1}};
    const auto hard = hard_quantize(rw);
    CHECK(hard.symbols[0] == 1.0);  // zero decodes to +1
    CHECK(hard.symbols[1] == -1.0);
    CHECK(hard.symbols[2] == 1.0);
    CHECK(hard.channel.kind() == channel_kind::bsc);
    CHECK(hard.channel.param() == doctest::Approx(q_function(1.0)));
}

TEST_CASE("hard quantization empirical flip rate") {
    const std::size_t n = 100000;
    const auto rw = transmit(all_ones(n), channel_model::biawgn(1.0), 17);
    const auto hard = hard_quantize(rw);
    std::size_t flips = 0;
    for (double s : hard.symbols) flips += s < 0.0 ? 1 : 0;
    CHECK(std::abs(static_cast<double>(flips) / n - q_function(1.0)) < 0.01);
}

TEST_CASE("ternary quantization") {
    received_word rw{channel_model::biawgn(1.0), {0.3, -0.6, 0.5, -0.5}};
    const auto t = ternary_quantize(rw, 0.5);
    CHECK(t.symbols[0] == 0.0);
    CHECK(t.symbols[1] == -1.0);
    CHECK(t.symbols[2] == 1.0);   // boundary: r >= tau
    CHECK(t.symbols[3] == -1.0);  // boundary: r <= -tau

    const auto zero_tau = ternary_quantize(rw, 0.0);
    const auto hard = hard_quantize(rw);
    for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
        CHECK(zero_tau.symbols[i] == hard.symbols[i]);
    }
}

TEST_CASE("ternary quantization erasure fraction") {
    const std::size_t n = 100000;
    const auto rw = transmit(all_ones(n), channel_model::biawgn(1.0), 19);
    const auto t = ternary_quantize(rw, 0.5);
    std::size_t erased = 0;
    for (double s : t.symbols) erased += s == 0.0 ? 1 : 0;
    const double expect = q_function(0.5) - q_function(1.5);
    CHECK(std::abs(static_cast<double>(erased) / n - expect) < 0.01);
}

TEST_CASE("initial LLRs") {
    received_word bsc{channel_model::bsc(0.11), {1.0, -1.0}};
    const auto l = initial_llr(bsc);
    CHECK(l[0] == doctest::Approx(2.0907).epsilon(1e-4));
    CHECK(l[1] == doctest::Approx(-2.0907).epsilon(1e-4));

    received_word bec{channel_model::bec(0.4), {1.0, 0.0, -1.0}};
    const auto lb = initial_llr(bec);
    CHECK(lb[0] == kInf);
    CHECK(lb[1] == 0.0);
    CHECK(lb[2] == -kInf);

    received_word useless{channel_model::bsc(0.5), {1.0, -1.0}};
    for (double v : initial_llr(useless)) CHECK(v == 0.0);

    received_word awgn{channel_model::biawgn(0.8), {0.64}};
    CHECK(initial_llr(awgn)[0] == doctest::Approx(2.0));
}

TEST_CASE("output symmetry: p(y=q|x=1) equals p(y=-q|x=-1)") {
    const std::size_t n = 100000;
    const std::vector<double> minus(n, -1.0);
    SUBCASE("bsc") {
        const auto plus = transmit(all_ones(n), channel_model::bsc(0.11), 23);
        const auto neg = transmit(minus, channel_model::bsc(0.11), 24);
        std::size_t plus_correct = 0, neg_correct = 0;
        for (double s : plus.symbols) plus_correct += s > 0.0 ? 1 : 0;
        for (double s : neg.symbols) neg_correct += s < 0.0 ? 1 : 0;
        CHECK(std::abs(static_cast<double>(plus_correct) - static_cast<double>(neg_correct)) <
              5.0 * std::sqrt(static_cast<double>(n) * 0.11 * 0.89) * 2.0);
    }
    SUBCASE("biawgn histogram") {
        const auto plus = transmit(all_ones(n), channel_model::biawgn(0.9), 25);
        const auto neg = transmit(minus, channel_model::biawgn(0.9), 26);
        const int bins = 40;
        std::vector<double> h1(bins, 0.0), h2(bins, 0.0);
        auto bin_of = [&](double q) {
            const int b = static_cast<int>((q + 4.0) / 8.0 * bins);
            return std::clamp(b, 0, bins - 1);
        };
        for (double s : plus.symbols) h1[static_cast<std::size_t>(bin_of(s))] += 1.0 / n;
        for (double s : neg.symbols) h2[static_cast<std::size_t>(bin_of(-s))] += 1.0 / n;
        double tv = 0.0;
        for (int b = 0; b < bins; ++b) tv += std::abs(h1[static_cast<std::size_t>(b)] -
                                                      h2[static_cast<std::size_t>(b)]);
        CHECK(tv / 2.0 < 0.02);
    }
}

TEST_CASE("channel spec strings parse") {
    CHECK(parse_channel("bec:0.42").kind() == channel_kind::bec);
    CHECK(parse_channel("bsc:0.084").param() == doctest::Approx(0.084));
    CHECK(parse_channel("biawgn:0.88").kind() == channel_kind::biawgn);
    CHECK_THROWS_AS(parse_channel("foo:1"), config_error);
    CHECK_THROWS_AS(parse_channel("bec"), config_error);
    CHECK_THROWS_AS(parse_channel("bsc:0.7"), config_error);
}

TEST_CASE("parameter ranges enforced") {
    CHECK_THROWS_AS(channel_model::bec(1.0), invalid_parameter);
    CHECK_THROWS_AS(channel_model::bsc(0.51), invalid_parameter);
    CHECK_THROWS_AS(channel_model::biawgn(0.0), invalid_parameter);
    CHECK_THROWS_AS(hard_quantize(received_word{channel_model::bec(0.1), {1.0}}),
                    invalid_parameter);
}

TEST_SUITE_END();
